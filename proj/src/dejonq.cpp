#include "jonq/dejonq.hpp"

#include <random>
#include <stdexcept>

#include "jonq/text.hpp"

namespace jonq {

std::string describe(Violation v) {
  switch (v) {
    case Violation::None: return "ok";
    case Violation::DegreeMismatch: return "deg g ≠ deg f + 1 or f, g not homogeneous";
    case Violation::CommonFactor: return "gcd(f,g) ≠ 1";
    case Violation::NotMonoid: return "f or g has degree > 1 in the last variable";
    case Violation::NotDominant: return "neither f nor g involves the last variable (map not dominant)";
    case Violation::NotInSupportIdeal: return "g ∉ (x1,…,xn)";
  }
  return "unknown";
}

namespace {

template <class K>
RingPtr<K> partner_ring(const RingPtr<K>& src) {
  const std::string prefix = src->name(0).rfind('y', 0) == 0 ? "x" : "y";
  return make_ring<K>(src->field(), indexed_names(prefix, src->nvars()));
}

template <class K>
RingPtr<K> graph_of(const RingPtr<K>& src, const RingPtr<K>& tgt) {
  auto names = src->names();
  for (const auto& t : tgt->names()) names.push_back(t);
  return make_ring<K>(src->field(), std::move(names), MonomialOrder::grevlex(), Bigrading{src->nvars(), tgt->nvars()});
}

std::vector<std::size_t> first_block(std::size_t n) {
  std::vector<std::size_t> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = k;
  return b;
}

}  // namespace

template <class K>
DeJonquieres<K>::DeJonquieres(Polynomial<K> f, Polynomial<K> g)
    : n_(f.ring()->nvars() - 1), d_(g.total_degree()), f_(std::move(f)), g_(std::move(g)) {
  target_ = partner_ring(f_.ring());
  graph_ = graph_of(f_.ring(), target_);
  for (std::size_t i = 0; i < n_; ++i) coords_.push_back(multiply(Polynomial<K>::variable(ring(), i), f_));
  coords_.push_back(g_);
}

template <class K>
typename DeJonquieres<K>::Construction DeJonquieres<K>::construct(const Polynomial<K>& f, const Polynomial<K>& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatch("construct: f and g in different rings");
  const auto& ring = f.ring();
  if (ring->nvars() < 2) throw std::invalid_argument("construct: need at least two variables");
  const std::size_t n = ring->nvars() - 1;
  Construction out;
  auto reject = [&](Violation v, std::string detail) {
    out.violation = v;
    out.detail = std::move(detail);
    return out;
  };
  if (f.is_zero() || g.is_zero() || !f.is_homogeneous() || !g.is_homogeneous() ||
      g.total_degree() != f.total_degree() + 1 || g.total_degree() < 2)
    return reject(Violation::DegreeMismatch, "deg f = " + std::to_string(f.total_degree()) +
                                                 ", deg g = " + std::to_string(g.total_degree()));
  auto common = gcd(f, g);
  if (!common.is_constant()) return reject(Violation::CommonFactor, "gcd(f,g) = " + to_string(common));
  int ef = degree_in(f, n).value();
  int eg = degree_in(g, n).value();
  if (ef > 1 || eg > 1)
    return reject(Violation::NotMonoid, "degrees in " + ring->name(n) + ": f " + std::to_string(ef) + ", g " +
                                            std::to_string(eg));
  if (ef == 0 && eg == 0) return reject(Violation::NotDominant, "f and g are free of " + ring->name(n));
  auto block = first_block(n);
  for (const auto& t : g.terms()) {
    bool inside = false;
    for (auto v : block)
      if (t.mono[v]) inside = true;
    if (!inside) return reject(Violation::NotInSupportIdeal, "g has a pure power of " + ring->name(n));
  }
  out.map = DeJonquieres<K>(f, g);
  return out;
}

template <class K>
std::vector<Polynomial<K>> q_decomposition(const DeJonquieres<K>& j) {
  auto block = first_block(j.n());
  return x_decompose(j.g(), std::span<const std::size_t>(block));
}

template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieres<K>& j) {
  const auto& s = j.graph_ring();
  const std::size_t n = j.n();
  DowngradedSequence<K> out;
  out.q = q_decomposition(j);
  auto y = [&](std::size_t i) { return Polynomial<K>::variable(s, n + 1 + i); };
  auto f0 = multiply(change_ring(j.f(), s), y(n));
  for (std::size_t i = 0; i < n; ++i) f0 -= multiply(change_ring(out.q[i], s), y(i));
  out.forms.push_back(std::move(f0));
  auto block = first_block(n);
  for (int i = 0; i + 2 < j.d(); ++i) {
    const auto& cur = out.forms.back();
    if (xprime_order(cur, std::span<const std::size_t>(block)) < 1)
      throw std::logic_error("downgraded_sequence: form has no x-content left to trade");
    auto content = x_decompose(cur, std::span<const std::size_t>(block));
    Polynomial<K> next(s);
    for (std::size_t k = 0; k < n; ++k) next += multiply(content[k], y(k));
    out.content.push_back(std::move(content));
    out.forms.push_back(std::move(next));
  }
  return out;
}

template <class K>
Inverse<K> inverse(const DeJonquieres<K>& j, const DowngradedSequence<K>& seq) {
  const auto& s = j.graph_ring();
  const std::size_t n = j.n();
  const auto& last = seq.forms.back();
  auto frak_f = change_ring(partial_derivative(last, n), j.target());
  Polynomial<K> sum(s);
  for (std::size_t i = 0; i < n; ++i)
    sum += multiply(partial_derivative(last, i), Polynomial<K>::variable(s, n + 1 + i));
  auto frak_g = change_ring(sum, j.target());
  std::string failures;
  for (int sign : {-1, 1}) {
    auto g = sign < 0 ? -frak_g : frak_g;
    auto c = DeJonquieres<K>::construct(frak_f, g);
    if (!c) {
      failures += "sign " + std::to_string(sign) + ": " + describe(c.violation) + " (" + c.detail + "); ";
      continue;
    }
    auto cert = inversion_certificate(j.as_map(), c.map->as_map());
    if (cert) return Inverse<K>{std::move(*c.map), std::move(*cert.certificate), sign};
    failures += "sign " + std::to_string(sign) + ": fails at coordinate " + std::to_string(cert.failed_coordinate) +
                "; ";
  }
  throw std::logic_error("inverse: no sign certifies the candidate inverse: " + failures + "f' = " +
                         to_string(frak_f) + ", g' = " + to_string(frak_g));
}

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

BettiTable predicted_betti(std::size_t n, int d) {
  std::vector<std::vector<int>> s{{0}, std::vector<int>(n + 1, d)};
  std::vector<int> second(binom(n, 2), d + 1);
  second.push_back(2 * d - 1);
  s.push_back(std::move(second));
  for (std::size_t k = 3; k <= n; ++k) s.push_back(std::vector<int>(binom(n, k), d + static_cast<int>(k) - 1));
  return BettiTable(std::move(s));
}

template <class K>
FreeComplex<K> resolution(const DeJonquieres<K>& j) {
  const auto& r = j.ring();
  const std::size_t n = j.n();
  const int d = j.d();
  auto x = [&](std::size_t i) { return Polynomial<K>::variable(r, i); };
  FreeComplex<K> c{r, {{0}}, {}};

  PolyMatrix<K> d1(r, 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) d1.at(0, i) = j.coords()[i];
  c.maps.push_back(std::move(d1));
  c.shifts.push_back(std::vector<int>(n + 1, d));

  // e_S -> sum_t (-1)^t x_{S_t} e_{S \ S_t}
  auto koszul = [&](std::size_t k, std::size_t extra_rows, std::size_t extra_cols) {
    auto rows = subsets(n, k - 1);
    auto cols = subsets(n, k);
    PolyMatrix<K> m(r, rows.size() + extra_rows, cols.size() + extra_cols);
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
      const auto& sset = cols[ci];
      for (std::size_t t = 0; t < sset.size(); ++t) {
        auto face = sset;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(t));
        std::size_t ri = static_cast<std::size_t>(std::find(rows.begin(), rows.end(), face) - rows.begin());
        m.at(ri, ci) = t % 2 ? -x(sset[t]) : x(sset[t]);
      }
    }
    return m;
  };

  if (n >= 1) {
    auto d2 = koszul(2, 1, 1);
    auto q = q_decomposition(j);
    const std::size_t last = d2.cols() - 1;
    for (std::size_t i = 0; i < n; ++i) d2.at(i, last) = -q[i];
    d2.at(n, last) = j.f();
    c.maps.push_back(std::move(d2));
    std::vector<int> sh(binom(n, 2), d + 1);
    sh.push_back(2 * d - 1);
    c.shifts.push_back(std::move(sh));
  }
  for (std::size_t k = 3; k <= n; ++k) {
    c.maps.push_back(koszul(k, k == 3 ? 1 : 0, 0));
    c.shifts.push_back(std::vector<int>(binom(n, k), d + static_cast<int>(k) - 1));
  }
  return c;
}

template <class K>
StructuralReport structural_checks(const DeJonquieres<K>& j) {
  StructuralReport rep;
  const auto& r = j.ring();
  const std::size_t n = j.n();
  auto id = j.base_ideal();
  Ideal<K> maximal(r);
  for (std::size_t i = 0; i <= n; ++i) maximal.gens.push_back(Polynomial<K>::variable(r, i));
  auto sat = saturate(id, maximal);
  rep.saturated = ideal_equal(sat, id);
  if (!rep.saturated) rep.witness += "I : m^inf strictly larger than I; ";

  auto cgb = buchberger(colon(id, j.f()));
  rep.x_in_colon_f = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!cgb.contains(Polynomial<K>::variable(r, i))) {
      rep.x_in_colon_f = false;
      rep.witness += r->name(i) + " ∉ I : f; ";
    }

  rep.projdim = minimal_free_resolution(id, n + 2, false).betti.length();
  rep.cohen_macaulay = rep.projdim == 2;
  rep.cm_iff_plane = rep.cohen_macaulay == (n == 2);
  if (!rep.cm_iff_plane) rep.witness += "projdim " + std::to_string(rep.projdim) + " with n = " + std::to_string(n) + "; ";

  if (n == 2) {
    rep.multiplicity = hilbert_series_numerator(id).multiplicity();
    long long expect = static_cast<long long>(j.d()) * (j.d() - 1) + 1;
    rep.multiplicity_ok = *rep.multiplicity == expect;
    if (!rep.multiplicity_ok)
      rep.witness += "multiplicity " + std::to_string(*rep.multiplicity) + " ≠ " + std::to_string(expect) + "; ";
  }
  return rep;
}

namespace {

template <class K>
typename K::Elem random_coeff(const K& field, std::mt19937_64& rng);

template <>
PrimeField::Elem random_coeff(const PrimeField& field, std::mt19937_64& rng) {
  return static_cast<PrimeField::Elem>(1 + rng() % (field.modulus() - 1));
}

template <>
RationalField::Elem random_coeff(const RationalField& field, std::mt19937_64& rng) {
  long long v = static_cast<long long>(rng() % 18) - 9;
  if (v >= 0) ++v;
  return field.from_int(v);
}

// sparse random form of degree `deg` in the first n variables
template <class K>
Polynomial<K> random_form(const RingPtr<K>& r, std::size_t n, int deg, std::mt19937_64& rng) {
  const int nterms = 1 + static_cast<int>(rng() % 3);
  std::vector<typename Polynomial<K>::Term> ts;
  for (int t = 0; t < nterms; ++t) {
    Monomial m;
    for (int e = 0; e < deg; ++e) {
      std::size_t v = rng() % n;
      m.set(v, m[v] + 1u);
    }
    ts.push_back({m, random_coeff(r->field(), rng)});
  }
  return Polynomial<K>::from_terms(r, std::move(ts));
}

}  // namespace

template <class K>
DeJonquieres<K> random_map(const K& field, std::size_t n, int d, std::uint64_t seed) {
  if (n < 1 || d < 2) throw std::invalid_argument("random_map: need n >= 1 and d >= 2");
  auto r = x_ring(field, n);
  std::mt19937_64 rng(seed);
  auto last = Polynomial<K>::variable(r, n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto maybe = [&](int deg, bool may_vanish) {
      if (may_vanish && rng() % 4 == 0) return Polynomial<K>(r);
      return random_form(r, n, deg, rng);
    };
    auto f = maybe(d - 1, true) + multiply(maybe(d - 2, true), last);
    auto g = maybe(d, true) + multiply(maybe(d - 1, true), last);
    if (f.is_zero() || g.is_zero()) continue;
    auto c = DeJonquieres<K>::construct(f, g);
    if (c) return std::move(*c.map);
  }
  throw std::runtime_error("random_map: no valid map found");
}

#define JONQ_INSTANTIATE_DEJONQ(K)                                                         \
  template class DeJonquieres<K>;                                                          \
  template std::vector<Polynomial<K>> q_decomposition(const DeJonquieres<K>&);             \
  template DowngradedSequence<K> downgraded_sequence(const DeJonquieres<K>&);              \
  template Inverse<K> inverse(const DeJonquieres<K>&, const DowngradedSequence<K>&);       \
  template FreeComplex<K> resolution(const DeJonquieres<K>&);                              \
  template StructuralReport structural_checks(const DeJonquieres<K>&);                     \
  template DeJonquieres<K> random_map(const K&, std::size_t, int, std::uint64_t);

JONQ_INSTANTIATE_DEJONQ(PrimeField)
JONQ_INSTANTIATE_DEJONQ(RationalField)

}  // namespace jonq
