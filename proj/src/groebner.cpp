#include "jonq/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace jonq {

namespace {

template <class K>
using TermVec = std::vector<typename Polynomial<K>::Term>;

// out = a - c*m*b over sorted term ranges
template <class K>
TermVec<K> sub_shifted(const Ring<K>& r, std::span<const typename Polynomial<K>::Term> a,
                       const typename K::Elem& c, const Monomial& m,
                       std::span<const typename Polynomial<K>::Term> b) {
  const K& F = r.field();
  TermVec<K> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  Monomial bm;
  if (j < b.size()) bm = b[j].mono * m;
  while (i < a.size() && j < b.size()) {
    int cmp = r.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, F.neg(F.mul(c, b[j].coeff))});
      if (++j < b.size()) bm = b[j].mono * m;
    } else {
      auto s = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
      if (!F.is_zero(s)) out.push_back({bm, std::move(s)});
      ++i;
      if (++j < b.size()) bm = b[j].mono * m;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, F.neg(F.mul(c, b[j].coeff))});
  return out;
}

// Full reduction of `p` by a list of polynomials. `pick` returns the index of
// a reducer for a monomial, or -1. When `on_step` is provided it is told every
// (reducer index, coefficient, multiplier).
template <class K, class Pick, class OnStep>
TermVec<K> full_reduce(const Ring<K>& r, TermVec<K> cur, const std::vector<const Polynomial<K>*>& by, Pick pick,
                       OnStep on_step) {
  const K& F = r.field();
  TermVec<K> rem;
  std::size_t start = 0;
  while (start < cur.size()) {
    const auto& lead = cur[start];
    int k = pick(lead.mono);
    if (k < 0) {
      rem.push_back(std::move(cur[start]));
      ++start;
      continue;
    }
    const Polynomial<K>& g = *by[k];
    Monomial m = lead.mono / g.lm();
    auto c = F.is_one(g.lc()) ? lead.coeff : F.div(lead.coeff, g.lc());
    on_step(k, c, m);
    std::span<const typename Polynomial<K>::Term> a(cur.data() + start + 1, cur.size() - start - 1);
    std::span<const typename Polynomial<K>::Term> b(g.terms().data() + 1, g.terms().size() - 1);
    cur = sub_shifted<K>(r, a, c, m, b);
    start = 0;
  }
  return rem;
}

template <class K>
class Engine {
 public:
  Engine(const Ideal<K>& ideal, bool track) : ring_(ideal.ring), F_(ideal.ring->field()), track_(track) {
    ngens_ = ideal.gens.size();
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
      const auto& g = ideal.gens[i];
      if (!same_ring(g.ring(), ring_)) throw RingMismatch("buchberger: generator outside the ideal's ring");
      if (g.is_zero()) continue;
      std::vector<Polynomial<K>> lift;
      if (track_) {
        lift.assign(ngens_, Polynomial<K>(ring_));
        lift[i] = Polynomial<K>::one(ring_);
      }
      add_candidate(g, std::move(lift), static_cast<unsigned>(std::max(0, g.total_degree())));
    }
  }

  void run(BuchbergerStats* stats) {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      if (stats) ++stats->pairs_reduced;
      const Elem& a = elems_[p.i];
      const Elem& b = elems_[p.j];
      Monomial ma = p.lcm / a.lm;
      Monomial mb = p.lcm / b.lm;
      // both monic: S = ma*a - mb*b, leading terms cancel
      std::span<const typename Polynomial<K>::Term> at(a.p.terms().data() + 1, a.p.terms().size() - 1);
      std::span<const typename Polynomial<K>::Term> bt(b.p.terms().data() + 1, b.p.terms().size() - 1);
      TermVec<K> shifted;
      shifted.reserve(at.size());
      for (const auto& t : at) shifted.push_back({t.mono * ma, t.coeff});
      auto s = sub_shifted<K>(*ring_, shifted, F_.one(), mb, bt);
      std::vector<Polynomial<K>> lift;
      if (track_) {
        lift.reserve(ngens_);
        for (std::size_t i = 0; i < ngens_; ++i) {
          auto l = a.lift[i].times_term(ma, F_.one());
          l.sub_mul_term(F_.one(), mb, b.lift[i]);
          lift.push_back(std::move(l));
        }
      }
      if (stats) ++stats->pairs_considered;
      bool added = add_candidate(Polynomial<K>::from_sorted(ring_, std::move(s)), std::move(lift), p.sugar);
      if (!added && stats) ++stats->zero_reductions;
    }
    interreduce();
  }

  std::vector<Polynomial<K>> basis() const {
    std::vector<Polynomial<K>> out;
    for (const auto& e : elems_)
      if (e.in_basis) out.push_back(e.p);
    return out;
  }

  std::vector<std::vector<Polynomial<K>>> lifts() const {
    std::vector<std::vector<Polynomial<K>>> out;
    for (const auto& e : elems_)
      if (e.in_basis) out.push_back(e.lift);
    return out;
  }

 private:
  struct Elem {
    Polynomial<K> p;
    std::vector<Polynomial<K>> lift;
    Monomial lm;
    std::uint32_t mask;
    unsigned sugar;
    bool in_basis;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    int c = ring_->compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  int find_reducer(const Monomial& m) const {
    std::uint32_t mm = m.support_mask();
    for (std::size_t k = 0; k < elems_.size(); ++k) {
      const auto& e = elems_[k];
      if (!e.in_basis || (e.mask & ~mm)) continue;
      if (e.lm.divides(m)) return static_cast<int>(k);
    }
    return -1;
  }

  // Reduces h by the current basis; adds it if nonzero. Returns whether added.
  bool add_candidate(const Polynomial<K>& h, std::vector<Polynomial<K>> lift, unsigned sugar) {
    if (h.is_zero()) return false;
    std::vector<const Polynomial<K>*> by;
    by.reserve(elems_.size());
    for (const auto& e : elems_) by.push_back(&e.p);
    unsigned s = sugar;
    auto rem = full_reduce<K>(
        *ring_, h.terms(), by, [this](const Monomial& m) { return find_reducer(m); },
        [&](int k, const typename K::Elem& c, const Monomial& m) {
          const Elem& g = elems_[k];
          s = std::max(s, m.degree() + g.sugar);
          if (track_)
            for (std::size_t i = 0; i < ngens_; ++i) lift[i].sub_mul_term(c, m, g.lift[i]);
        });
    if (rem.empty()) return false;
    auto p = Polynomial<K>::from_sorted(ring_, std::move(rem));
    auto inv = F_.inv(p.lc());
    if (!F_.is_one(p.lc())) {
      p = p.scaled(inv);
      if (track_)
        for (auto& l : lift) l = l.scaled(inv);
    }
    update(Elem{std::move(p), std::move(lift), Monomial(), 0, s, true});
    return true;
  }

  // Gebauer–Möller installation of a new basis element.
  void update(Elem e) {
    e.lm = e.p.lm();
    e.mask = e.lm.support_mask();
    const std::size_t h = elems_.size();
    const Monomial lmh = e.lm;
    elems_.push_back(std::move(e));
    const Elem& eh = elems_[h];

    struct Cand {
      std::size_t j;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t j = 0; j < h; ++j) {
      if (!elems_[j].in_basis) continue;
      c.push_back({j, lcm(lmh, elems_[j].lm), coprime(lmh, elems_[j].lm)});
    }
    std::vector<Cand> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Cand& p1 = c[k];
      bool keep = p1.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(p1.lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(p1.lcm)) keep = false;
      }
      if (keep) d.push_back(p1);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + d.size());
    for (const auto& p : pairs_) {
      if (lmh.divides(p.lcm) && !(lcm(elems_[p.i].lm, lmh) == p.lcm) && !(lcm(elems_[p.j].lm, lmh) == p.lcm))
        continue;
      kept.push_back(p);
    }
    for (const auto& cand : d) {
      if (cand.coprime) continue;
      const Elem& g = elems_[cand.j];
      unsigned s = std::max(eh.sugar + (cand.lcm.degree() - lmh.degree()), g.sugar + (cand.lcm.degree() - g.lm.degree()));
      kept.push_back({cand.j, h, cand.lcm, s});
    }
    pairs_ = std::move(kept);
    for (std::size_t j = 0; j < h; ++j)
      if (elems_[j].in_basis && lmh.divides(elems_[j].lm)) elems_[j].in_basis = false;
  }

  void interreduce() {
    std::vector<std::size_t> live;
    for (std::size_t k = 0; k < elems_.size(); ++k)
      if (elems_[k].in_basis) live.push_back(k);
    for (std::size_t k : live) {
      Elem& e = elems_[k];
      std::vector<const Polynomial<K>*> by;
      std::vector<std::size_t> idx;
      for (std::size_t other : live) {
        if (other == k) continue;
        by.push_back(&elems_[other].p);
        idx.push_back(other);
      }
      auto pick = [&](const Monomial& m) -> int {
        std::uint32_t mm = m.support_mask();
        for (std::size_t q = 0; q < by.size(); ++q) {
          const auto& o = elems_[idx[q]];
          if ((o.mask & ~mm) == 0 && o.lm.divides(m)) return static_cast<int>(q);
        }
        return -1;
      };
      TermVec<K> tail(e.p.terms().begin() + 1, e.p.terms().end());
      auto lift = e.lift;
      auto rem = full_reduce<K>(*ring_, std::move(tail), by, pick,
                                [&](int q, const typename K::Elem& c, const Monomial& m) {
                                  if (track_)
                                    for (std::size_t i = 0; i < ngens_; ++i)
                                      lift[i].sub_mul_term(c, m, elems_[idx[q]].lift[i]);
                                });
      TermVec<K> terms;
      terms.reserve(rem.size() + 1);
      terms.push_back(e.p.terms().front());
      for (auto& t : rem) terms.push_back(std::move(t));
      e.p = Polynomial<K>::from_sorted(ring_, std::move(terms));
      e.lift = std::move(lift);
    }
    // ascending leading monomial
    std::vector<Elem> sorted;
    for (auto k : live) sorted.push_back(std::move(elems_[k]));
    std::sort(sorted.begin(), sorted.end(),
              [this](const Elem& a, const Elem& b) { return ring_->compare(a.lm, b.lm) < 0; });
    elems_ = std::move(sorted);
  }

  RingPtr<K> ring_;
  const K& F_;
  bool track_;
  std::size_t ngens_ = 0;
  std::vector<Elem> elems_;
  std::vector<Pair> pairs_;
};

std::string fresh_name(const std::vector<std::string>& taken, const std::string& base) {
  std::string n = base;
  int k = 0;
  while (std::find(taken.begin(), taken.end(), n) != taken.end()) n = base + std::to_string(++k);
  return n;
}

}  // namespace

template <class K>
GroebnerBasis<K>::GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> reduced)
    : ring_(std::move(ring)), elems_(std::move(reduced)) {}

template <class K>
Polynomial<K> GroebnerBasis<K>::normal_form(const Polynomial<K>& p) const {
  if (!same_ring(p.ring(), ring_)) throw RingMismatch("normal_form: polynomial outside the basis ring");
  return reduce<K>(p, elems_);
}

template <class K>
bool GroebnerBasis<K>::contains_all(std::span<const Polynomial<K>> ps) const {
  for (const auto& p : ps)
    if (!contains(p)) return false;
  return true;
}

template <class K>
std::vector<Monomial> GroebnerBasis<K>::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& e : elems_) out.push_back(e.lm());
  return out;
}

template <class K>
Polynomial<K> reduce(const Polynomial<K>& p, std::span<const Polynomial<K>> by) {
  std::vector<const Polynomial<K>*> ptrs;
  std::vector<Monomial> lms;
  std::vector<std::uint32_t> masks;
  for (const auto& b : by) {
    if (b.is_zero()) continue;
    if (!same_ring(b.ring(), p.ring())) throw RingMismatch("reduce: divisor outside the ring");
    ptrs.push_back(&b);
    lms.push_back(b.lm());
    masks.push_back(b.lm().support_mask());
  }
  auto pick = [&](const Monomial& m) -> int {
    std::uint32_t mm = m.support_mask();
    for (std::size_t k = 0; k < ptrs.size(); ++k)
      if ((masks[k] & ~mm) == 0 && lms[k].divides(m)) return static_cast<int>(k);
    return -1;
  };
  auto rem = full_reduce<K>(*p.ring(), p.terms(), ptrs, pick, [](int, const typename K::Elem&, const Monomial&) {});
  return Polynomial<K>::from_sorted(p.ring(), std::move(rem));
}

template <class K>
Division<K> divide(const Polynomial<K>& p, std::span<const Polynomial<K>> by) {
  std::vector<const Polynomial<K>*> ptrs;
  std::vector<std::size_t> index;
  for (std::size_t k = 0; k < by.size(); ++k) {
    if (by[k].is_zero()) continue;
    if (!same_ring(by[k].ring(), p.ring())) throw RingMismatch("divide: divisor outside the ring");
    ptrs.push_back(&by[k]);
    index.push_back(k);
  }
  auto pick = [&](const Monomial& m) -> int {
    for (std::size_t k = 0; k < ptrs.size(); ++k)
      if (ptrs[k]->lm().divides(m)) return static_cast<int>(k);
    return -1;
  };
  std::vector<TermVec<K>> q(by.size());
  auto rem = full_reduce<K>(*p.ring(), p.terms(), ptrs, pick, [&](int k, const typename K::Elem& c, const Monomial& m) {
    q[index[k]].push_back({m, c});
  });
  Division<K> out{{}, Polynomial<K>::from_sorted(p.ring(), std::move(rem))};
  for (auto& t : q) out.quotients.push_back(Polynomial<K>::from_terms(p.ring(), std::move(t)));
  return out;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const K& F = f.field();
  Monomial l = lcm(f.lm(), g.lm());
  auto a = f.times_term(l / f.lm(), F.inv(f.lc()));
  a.sub_mul_term(F.inv(g.lc()), l / g.lm(), g);
  return a;
}

template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, BuchbergerStats* stats) {
  Engine<K> e(ideal, false);
  e.run(stats);
  return GroebnerBasis<K>(ideal.ring, e.basis());
}

template <class K>
LiftedBasis<K> buchberger_with_lifts(const Ideal<K>& ideal) {
  Engine<K> e(ideal, true);
  e.run(nullptr);
  return LiftedBasis<K>{GroebnerBasis<K>(ideal.ring, e.basis()), e.lifts()};
}

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b) {
  if (!same_ring(a.ring, b.ring)) throw RingMismatch("ideal_equal: ideals in different rings");
  auto ga = buchberger(a);
  auto gb = buchberger(b);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga.elements()[i] == gb.elements()[i])) return false;
  return true;
}

template <class K>
bool ideal_contains(const Ideal<K>& b, const Ideal<K>& a) {
  if (!same_ring(a.ring, b.ring)) throw RingMismatch("ideal_contains: ideals in different rings");
  auto gb = buchberger(b);
  return gb.contains_all(a.gens);
}

template <class K>
RingPtr<K> adjoin_front(const RingPtr<K>& ring, const std::vector<std::string>& names) {
  std::vector<std::string> all;
  for (const auto& n : names) all.push_back(fresh_name(ring->names(), n));
  for (const auto& n : ring->names()) all.push_back(n);
  return make_ring<K>(ring->field(), std::move(all), MonomialOrder::elimination(names.size()));
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::size_t first) {
  auto er = ideal.ring->with_order(MonomialOrder::elimination(first));
  Ideal<K> moved(er);
  for (const auto& g : ideal.gens) moved.gens.push_back(g.in_ring(er));
  auto gb = buchberger(moved);
  Ideal<K> out(ideal.ring);
  for (const auto& g : gb.elements()) {
    bool free = true;
    for (std::size_t v = 0; v < first && free; ++v)
      if (involves(g, v)) free = false;
    if (free) out.gens.push_back(g.in_ring(ideal.ring));
  }
  return out;
}

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b) {
  if (!same_ring(a.ring, b.ring)) throw RingMismatch("intersect: ideals in different rings");
  auto big = adjoin_front(a.ring, {"t_"});
  auto t = Polynomial<K>::variable(big, 0);
  auto one_minus_t = Polynomial<K>::one(big) - t;
  Ideal<K> j(big);
  for (const auto& g : a.gens)
    if (!g.is_zero()) j.gens.push_back(multiply(t, change_ring(g, big)));
  for (const auto& g : b.gens)
    if (!g.is_zero()) j.gens.push_back(multiply(one_minus_t, change_ring(g, big)));
  auto e = eliminate(j, 1);
  Ideal<K> out(a.ring);
  for (const auto& g : e.gens) out.gens.push_back(change_ring(g, a.ring));
  return reduced(out);
}

template <class K>
Ideal<K> colon(const Ideal<K>& ideal, const Polynomial<K>& f) {
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  auto meet = intersect(ideal, Ideal<K>(ideal.ring, {f}));
  Ideal<K> out(ideal.ring);
  for (const auto& g : meet.gens) {
    auto q = divide_exact(g, f);
    if (!q) throw std::logic_error("colon: generator of I ∩ (f) not divisible by f");
    out.gens.push_back(std::move(*q));
  }
  return reduced(out);
}

template <class K>
Ideal<K> colon_ideal(const Ideal<K>& ideal, const Ideal<K>& j) {
  std::optional<Ideal<K>> acc;
  for (const auto& g : j.gens) {
    if (g.is_zero()) continue;
    auto c = colon(ideal, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) return Ideal<K>(ideal.ring, {Polynomial<K>::one(ideal.ring)});
  return *acc;
}

template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Ideal<K>& j) {
  Ideal<K> cur = reduced(ideal);
  while (true) {
    auto next = colon_ideal(cur, j);
    if (buchberger(cur).contains_all(next.gens)) return cur;
    cur = std::move(next);
  }
}

template <class K>
HilbertNumerator hilbert_series_numerator(const Ideal<K>& ideal, std::span<const int> weights) {
  if (!weights.empty() && weights.size() != ideal.ring->nvars())
    throw std::invalid_argument("hilbert_series_numerator: one weight per variable");
  for (const auto& g : ideal.gens)
    if (!g.is_homogeneous(weights))
      throw std::invalid_argument("hilbert_series_numerator: inhomogeneous generator");
  auto gb = buchberger(ideal);
  return monomial_ideal_numerator(gb.leading_monomials(), weights, ideal.ring->nvars());
}

#define JONQ_INSTANTIATE_GB(K)                                                          \
  template class GroebnerBasis<K>;                                                      \
  template GroebnerBasis<K> buchberger(const Ideal<K>&, BuchbergerStats*);              \
  template LiftedBasis<K> buchberger_with_lifts(const Ideal<K>&);                       \
  template Polynomial<K> reduce(const Polynomial<K>&, std::span<const Polynomial<K>>);  \
  template Division<K> divide(const Polynomial<K>&, std::span<const Polynomial<K>>);       \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);      \
  template bool ideal_equal(const Ideal<K>&, const Ideal<K>&);                          \
  template bool ideal_contains(const Ideal<K>&, const Ideal<K>&);                       \
  template RingPtr<K> adjoin_front(const RingPtr<K>&, const std::vector<std::string>&); \
  template Ideal<K> eliminate(const Ideal<K>&, std::size_t);                            \
  template Ideal<K> intersect(const Ideal<K>&, const Ideal<K>&);                        \
  template Ideal<K> colon(const Ideal<K>&, const Polynomial<K>&);                       \
  template Ideal<K> colon_ideal(const Ideal<K>&, const Ideal<K>&);                      \
  template Ideal<K> saturate(const Ideal<K>&, const Ideal<K>&);                         \
  template HilbertNumerator hilbert_series_numerator(const Ideal<K>&, std::span<const int>);

JONQ_INSTANTIATE_GB(PrimeField)
JONQ_INSTANTIATE_GB(RationalField)

}  // namespace jonq
