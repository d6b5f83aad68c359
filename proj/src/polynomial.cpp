#include "jonq/polynomial.hpp"

#include <algorithm>

namespace jonq {

unsigned weighted_degree(const Monomial& m, std::span<const int> weights) {
  if (weights.empty()) return m.degree();
  long s = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) s += static_cast<long>(weights[i]) * m[i];
  return static_cast<unsigned>(s);
}

template <class K>
Polynomial<K> Polynomial<K>::from_terms(RingPtr<K> ring, std::vector<Term> terms) {
  const Ring<K>& r = *ring;
  const K& F = r.field();
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && F.is_zero(out.back().coeff)) out.pop_back();
  return from_sorted(std::move(ring), std::move(out));
}

template <class K>
Polynomial<K> Polynomial<K>::constant(RingPtr<K> ring, const Elem& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({Monomial(), c});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::variable(RingPtr<K> ring, std::size_t i) {
  if (i >= ring->nvars()) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Monomial::variable(i), p.field().one()});
  return p;
}

template <class K>
Polynomial<K> Polynomial<K>::term(RingPtr<K> ring, const Monomial& m, const Elem& c) {
  Polynomial p(std::move(ring));
  if (!p.field().is_zero(c)) p.terms_.push_back({m, c});
  return p;
}

template <class K>
int Polynomial<K>::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

template <class K>
bool Polynomial<K>::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

template <class K>
bool Polynomial<K>::is_homogeneous(std::span<const int> weights) const {
  if (terms_.empty()) return true;
  unsigned d = weighted_degree(terms_.front().mono, weights);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono, weights) != d) return false;
  return true;
}

template <class K>
void Polynomial<K>::check_same_ring(const Polynomial& o, const char* what) const {
  if (!same_ring(ring_, o.ring_)) throw RingMismatch(std::string("ring mismatch in ") + what);
}

template <class K>
Polynomial<K> Polynomial<K>::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

namespace {

// Merges a + sign*b for sorted term lists.
template <class K>
std::vector<typename Polynomial<K>::Term> merge_terms(const Ring<K>& r,
                                                       const std::vector<typename Polynomial<K>::Term>& a,
                                                       const std::vector<typename Polynomial<K>::Term>& b,
                                                       bool subtract) {
  const K& F = r.field();
  std::vector<typename Polynomial<K>::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = r.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      auto s = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (!F.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

template <class K>
Polynomial<K>& Polynomial<K>::operator+=(const Polynomial& o) {
  check_same_ring(o, "addition");
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<K>(*ring_, terms_, o.terms_, false);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator-=(const Polynomial& o) {
  check_same_ring(o, "subtraction");
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms<K>(*ring_, terms_, o.terms_, true);
  return *this;
}

template <class K>
Polynomial<K>& Polynomial<K>::operator*=(const Polynomial& o) {
  *this = multiply(*this, o);
  return *this;
}

template <class K>
Polynomial<K> Polynomial<K>::scaled(const Elem& c) const {
  const K& F = field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::times_term(const Monomial& m, const Elem& c) const {
  const K& F = field();
  if (F.is_zero(c)) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

template <class K>
Polynomial<K> Polynomial<K>::monic() const {
  if (terms_.empty()) return *this;
  return scaled(field().inv(lc()));
}

template <class K>
void Polynomial<K>::sub_mul_term(const Elem& c, const Monomial& m, const Polynomial& g) {
  const Ring<K>& r = *ring_;
  const K& F = r.field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  const auto& a = terms_;
  const auto& b = g.terms_;
  // b terms are shifted by m on the fly
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() && j < b.size()) {
    if (!have_bm) {
      bm = b[j].mono * m;
      have_bm = true;
    }
    int cmp = r.compare(a[i].mono, bm);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back({bm, F.neg(F.mul(c, b[j].coeff))});
      ++j;
      have_bm = false;
    } else {
      auto s = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
      if (!F.is_zero(s)) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(terms_[i]));
  for (; j < b.size(); ++j) out.push_back({b[j].mono * m, F.neg(F.mul(c, b[j].coeff))});
  terms_ = std::move(out);
}

template <class K>
bool Polynomial<K>::operator==(const Polynomial& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  const K& F = field();
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || !F.equal(terms_[i].coeff, o.terms_[i].coeff)) return false;
  return true;
}

template <class K>
Polynomial<K> Polynomial<K>::in_ring(const RingPtr<K>& target) const {
  if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field()))
    throw RingMismatch("in_ring: incompatible rings");
  if (ring_->order() == target->order()) return from_sorted(target, terms_);
  return from_terms(target, terms_);
}

template <class K>
Polynomial<K> multiply(const Polynomial<K>& p, const Polynomial<K>& q) {
  p.check_same_ring(q, "multiplication");
  if (p.is_zero() || q.is_zero()) return Polynomial<K>(p.ring());
  if (p.size() == 1) return q.times_term(p.lm(), p.lc());
  if (q.size() == 1) return p.times_term(q.lm(), q.lc());
  const K& F = p.field();
  std::vector<typename Polynomial<K>::Term> prod;
  prod.reserve(p.size() * q.size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) prod.push_back({a.mono * b.mono, F.mul(a.coeff, b.coeff)});
  return Polynomial<K>::from_terms(p.ring(), std::move(prod));
}

template <class K>
Polynomial<K> power(const Polynomial<K>& p, unsigned k) {
  Polynomial<K> result = Polynomial<K>::one(p.ring());
  Polynomial<K> base = p;
  while (k) {
    if (k & 1u) result = multiply(result, base);
    k >>= 1u;
    if (k) base = multiply(base, base);
  }
  return result;
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, std::span<const Polynomial<K>> images, const RingPtr<K>& target) {
  const std::size_t nv = p.ring()->nvars();
  if (images.size() != nv) throw RingMismatch("substitute: need one image per source variable");
  for (const auto& im : images)
    if (!same_ring(im.ring(), target)) throw RingMismatch("substitute: images live in different rings");
  if (p.is_zero()) return Polynomial<K>(target);

  std::vector<unsigned> max_exp(nv, 0);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < nv; ++i) max_exp[i] = std::max<unsigned>(max_exp[i], t.mono[i]);
  std::vector<std::vector<Polynomial<K>>> powers(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    powers[i].push_back(Polynomial<K>::one(target));
    for (unsigned e = 1; e <= max_exp[i]; ++e) powers[i].push_back(multiply(powers[i].back(), images[i]));
  }

  std::vector<typename Polynomial<K>::Term> acc;
  for (const auto& t : p.terms()) {
    Polynomial<K> img = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t i = 0; i < nv && !img.is_zero(); ++i)
      if (t.mono[i]) img = multiply(img, powers[i][t.mono[i]]);
    for (auto& u : img.terms()) acc.push_back(u);
  }
  return Polynomial<K>::from_terms(target, std::move(acc));
}

template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const std::map<std::size_t, Polynomial<K>>& assignment,
                         const RingPtr<K>& target) {
  const auto& src = *p.ring();
  std::vector<Polynomial<K>> images;
  images.reserve(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto it = assignment.find(i);
    if (it != assignment.end()) {
      if (!same_ring(it->second.ring(), target)) throw RingMismatch("substitute: assignment outside target ring");
      images.push_back(it->second);
      continue;
    }
    auto j = target->index_of(src.name(i));
    if (!j) {
      if (involves(p, i))
        throw RingMismatch("substitute: unassigned variable " + src.name(i) + " missing from target ring");
      images.push_back(Polynomial<K>(target));
      continue;
    }
    images.push_back(Polynomial<K>::variable(target, *j));
  }
  return substitute(p, std::span<const Polynomial<K>>(images), target);
}

template <class K>
Polynomial<K> change_ring(const Polynomial<K>& p, const RingPtr<K>& target) {
  if (same_ring(p.ring(), target)) return p;
  if (!(p.field() == target->field())) throw RingMismatch("change_ring: different coefficient fields");
  const auto& src = *p.ring();
  std::vector<std::size_t> idx(src.nvars(), kMaxVars);
  for (std::size_t i = 0; i < src.nvars(); ++i) {
    auto j = target->index_of(src.name(i));
    if (j) idx[i] = *j;
  }
  std::vector<typename Polynomial<K>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (idx[i] == kMaxVars) throw RingMismatch("change_ring: variable " + src.name(i) + " missing from target");
      m.set(idx[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<K>::from_terms(target, std::move(terms));
}

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& p, std::size_t var) {
  if (var >= p.ring()->nvars()) throw std::out_of_range("partial_derivative: variable out of range");
  const K& F = p.field();
  std::vector<typename Polynomial<K>::Term> out;
  for (const auto& t : p.terms()) {
    unsigned e = t.mono[var];
    if (!e) continue;
    auto c = F.mul(t.coeff, F.from_int(e));
    if (F.is_zero(c)) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, std::move(c)});
  }
  return Polynomial<K>::from_sorted(p.ring(), std::move(out));
}

template <class K>
VarDegree degree_in(const Polynomial<K>& p, std::size_t var) {
  if (p.is_zero()) return VarDegree::of_zero();
  int d = 0;
  for (const auto& t : p.terms()) d = std::max<int>(d, t.mono[var]);
  return VarDegree(d);
}

template <class K>
bool involves(const Polynomial<K>& p, std::size_t var) {
  for (const auto& t : p.terms())
    if (t.mono[var]) return true;
  return false;
}

template <class K>
int xprime_order(const Polynomial<K>& p, std::span<const std::size_t> block) {
  if (p.is_zero()) throw std::invalid_argument("xprime_order of the zero polynomial");
  int best = -1;
  for (const auto& t : p.terms()) {
    int s = 0;
    for (auto i : block) s += t.mono[i];
    if (best < 0 || s < best) best = s;
  }
  return best;
}

template <class K>
std::vector<Polynomial<K>> x_decompose(const Polynomial<K>& p, std::span<const std::size_t> block) {
  std::vector<std::vector<typename Polynomial<K>::Term>> parts(block.size());
  for (const auto& t : p.terms()) {
    bool placed = false;
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (t.mono[block[k]]) {
        Monomial m = t.mono;
        m.set(block[k], t.mono[block[k]] - 1);
        parts[k].push_back({m, t.coeff});
        placed = true;
        break;
      }
    }
    if (!placed) throw std::invalid_argument("x_decompose: a term is divisible by no block variable");
  }
  std::vector<Polynomial<K>> out;
  out.reserve(block.size());
  for (auto& part : parts) out.push_back(Polynomial<K>::from_sorted(p.ring(), std::move(part)));
  return out;
}

template <class K>
std::optional<Polynomial<K>> divide_exact(const Polynomial<K>& p, const Polynomial<K>& q) {
  p.check_same_ring(q, "division");
  if (q.is_zero()) throw FieldError("division by the zero polynomial");
  const K& F = p.field();
  Polynomial<K> h = p;
  std::vector<typename Polynomial<K>::Term> quot;
  auto inv_lc = F.inv(q.lc());
  while (!h.is_zero()) {
    if (!q.lm().divides(h.lm())) return std::nullopt;
    Monomial m = h.lm() / q.lm();
    auto c = F.mul(h.lc(), inv_lc);
    quot.push_back({m, c});
    h.sub_mul_term(c, m, q);
  }
  return Polynomial<K>::from_sorted(p.ring(), std::move(quot));
}

template <class K>
typename K::Elem evaluate(const Polynomial<K>& p, std::span<const typename K::Elem> point) {
  const K& F = p.field();
  if (point.size() != p.ring()->nvars()) throw std::invalid_argument("evaluate: point has wrong arity");
  auto acc = F.zero();
  for (const auto& t : p.terms()) {
    auto v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) v = F.mul(v, point[i]);
    acc = F.add(acc, v);
  }
  return acc;
}

template <class K>
std::pair<int, int> bidegree(const Polynomial<K>& p) {
  const auto& split = p.ring()->bigrading();
  if (!split) throw std::invalid_argument("bidegree: ring has no bigrading");
  if (p.is_zero()) throw std::invalid_argument("bidegree of the zero polynomial");
  auto bd = [&](const Monomial& m) {
    return std::pair<int, int>(static_cast<int>(m.degree_in_range(0, split->nx)),
                               static_cast<int>(m.degree_in_range(split->nx, split->nx + split->ny)));
  };
  auto first = bd(p.lm());
  for (const auto& t : p.terms())
    if (bd(t.mono) != first) throw std::invalid_argument("bidegree: polynomial is not bihomogeneous");
  return first;
}

template <class K>
bool is_bihomogeneous(const Polynomial<K>& p) {
  try {
    if (p.is_zero()) return true;
    (void)bidegree(p);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

#define JONQ_INSTANTIATE_POLY(K)                                                                              \
  template class Polynomial<K>;                                                                               \
  template Polynomial<K> multiply(const Polynomial<K>&, const Polynomial<K>&);                                \
  template Polynomial<K> power(const Polynomial<K>&, unsigned);                                               \
  template Polynomial<K> substitute(const Polynomial<K>&, std::span<const Polynomial<K>>, const RingPtr<K>&); \
  template Polynomial<K> substitute(const Polynomial<K>&, const std::map<std::size_t, Polynomial<K>>&,         \
                                    const RingPtr<K>&);                                                       \
  template Polynomial<K> change_ring(const Polynomial<K>&, const RingPtr<K>&);                                \
  template Polynomial<K> partial_derivative(const Polynomial<K>&, std::size_t);                               \
  template VarDegree degree_in(const Polynomial<K>&, std::size_t);                                            \
  template bool involves(const Polynomial<K>&, std::size_t);                                                  \
  template int xprime_order(const Polynomial<K>&, std::span<const std::size_t>);                              \
  template std::vector<Polynomial<K>> x_decompose(const Polynomial<K>&, std::span<const std::size_t>);        \
  template std::optional<Polynomial<K>> divide_exact(const Polynomial<K>&, const Polynomial<K>&);             \
  template K::Elem evaluate(const Polynomial<K>&, std::span<const K::Elem>);                                  \
  template std::pair<int, int> bidegree(const Polynomial<K>&);                                                \
  template bool is_bihomogeneous(const Polynomial<K>&);

JONQ_INSTANTIATE_POLY(PrimeField)
JONQ_INSTANTIATE_POLY(RationalField)

}  // namespace jonq
