#include "jonq/rees.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <type_traits>

namespace jonq {

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Coefficient of t^deg in N(t) / (1 - t)^nvars.
long long hilbert_function(const HilbertNumerator& num, std::size_t nvars, int deg) {
  long long v = 0;
  const auto nv = static_cast<long long>(nvars);
  for (int k = 0; k <= std::min(deg, num.degree()); ++k) v += num.coefficient(k) * binom(deg - k + nv - 1, nv - 1);
  return v;
}

template <class K>
Polynomial<K> x_var(const DeJonquieres<K>& j, std::size_t i) {
  return Polynomial<K>::variable(j.graph_ring(), i);
}

template <class K>
Polynomial<K> y_var(const DeJonquieres<K>& j, std::size_t i) {
  return Polynomial<K>::variable(j.graph_ring(), j.n() + 1 + i);
}

template <class K>
typename K::Elem random_elem(const K& field, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<K, PrimeField>)
    return static_cast<PrimeField::Elem>(rng() % field.modulus());
  else
    return field.from_int(static_cast<long long>(rng() % 19) - 9);
}

}  // namespace

template <class K>
Ideal<K> rees_ideal(const DeJonquieres<K>& j) {
  const auto& s = j.graph_ring();
  auto st = adjoin_front(s, {"t_"});
  auto t = Polynomial<K>::variable(st, 0);
  std::vector<Polynomial<K>> gens;
  const auto& coords = j.coords();
  for (std::size_t i = 0; i < coords.size(); ++i)
    gens.push_back(change_ring(y_var(j, i), st) - multiply(t, change_ring(coords[i], st)));
  auto elim = eliminate(Ideal<K>(st, std::move(gens)), 1);
  std::vector<Polynomial<K>> back;
  for (const auto& g : elim.gens) back.push_back(change_ring(g, s));
  return reduced(Ideal<K>(s, std::move(back)));
}

template <class K>
Ideal<K> ReesPresentation<K>::predicted() const {
  return chain(forms.size());
}

template <class K>
Ideal<K> ReesPresentation<K>::chain(std::size_t i) const {
  std::vector<Polynomial<K>> gens = minors;
  for (std::size_t k = 0; k < i && k < forms.size(); ++k) gens.push_back(forms[k]);
  return Ideal<K>(ring, std::move(gens));
}

template <class K>
ReesPresentation<K> rees_presentation(const DeJonquieres<K>& j) {
  ReesPresentation<K> p{j.graph_ring(), rees_ideal(j), {}, downgraded_sequence(j).forms};
  const std::size_t n = j.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      p.minors.push_back(multiply(x_var(j, k), y_var(j, i)) - multiply(x_var(j, i), y_var(j, k)));
  return p;
}

template <class K>
bool rees_saturated(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  // I : (x) = I already follows from I : x_1 = I.
  if (ideal_contains(p.eliminated, colon(p.eliminated, x_var(j, 0)))) return true;
  std::vector<Polynomial<K>> xs;
  for (std::size_t i = 0; i <= j.n(); ++i) xs.push_back(x_var(j, i));
  return ideal_contains(p.eliminated, colon_ideal(p.eliminated, Ideal<K>(j.graph_ring(), std::move(xs))));
}

template <class K>
Ideal<K> symmetric_ideal(const DeJonquieres<K>& j) {
  const auto& s = j.graph_ring();
  auto z = syzygies(j.coords());
  std::vector<Polynomial<K>> gens;
  for (std::size_t c = 0; c < z.cols(); ++c) {
    Polynomial<K> form(s);
    for (std::size_t r = 0; r < z.rows(); ++r) form += multiply(change_ring(z.at(r, c), s), y_var(j, r));
    if (!form.is_zero()) gens.push_back(std::move(form));
  }
  return Ideal<K>(s, std::move(gens));
}

template <class K>
std::size_t minimal_generator_count(const Ideal<K>& ideal) {
  auto gb = buchberger(ideal);
  std::map<int, std::vector<Polynomial<K>>> by_degree;
  for (const auto& g : gb.elements()) {
    if (!g.is_homogeneous()) throw std::invalid_argument("minimal_generator_count: inhomogeneous ideal");
    by_degree[g.total_degree()].push_back(g);
  }
  const auto nvars = ideal.ring->nvars();
  const auto full = hilbert_series_numerator(gb.ideal());
  // dim I_e / (m I)_e, where (m I)_e is spanned by the part of I below e.
  std::size_t count = 0;
  std::vector<Polynomial<K>> lower;
  for (const auto& [e, gens] : by_degree) {
    auto below = hilbert_series_numerator(Ideal<K>(ideal.ring, lower));
    count += static_cast<std::size_t>(hilbert_function(below, nvars, e) - hilbert_function(full, nvars, e));
    lower.insert(lower.end(), gens.begin(), gens.end());
  }
  return count;
}

template <class K>
TheoremReport verify_main_theorem(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  TheoremReport r;
  const auto pred = p.predicted();
  r.equal = ideal_equal(pred, p.eliminated);
  if (!r.equal) r.witness = "predicted ideal differs from the eliminated one";

  r.minimal = true;
  for (std::size_t k = 0; k < pred.gens.size(); ++k) {
    std::vector<Polynomial<K>> others;
    for (std::size_t m = 0; m < pred.gens.size(); ++m)
      if (m != k) others.push_back(pred.gens[m]);
    auto gb = buchberger(Ideal<K>(p.ring, std::move(others)));
    if (gb.contains(pred.gens[k])) {
      r.minimal = false;
      if (r.witness.empty()) r.witness = "generator " + std::to_string(k) + " is redundant";
    }
  }

  const auto n = static_cast<long long>(j.n());
  r.predicted_count = pred.gens.size();
  r.expected_count = static_cast<std::size_t>(binom(n, 2) + j.d() - 1);
  r.minimal_count = minimal_generator_count(p.eliminated);
  r.linear_type = ideal_equal(symmetric_ideal(j), p.eliminated);
  return r;
}

bool ColonReport::pass() const {
  return base && std::all_of(chain.begin(), chain.end(), [](bool b) { return b; });
}

template <class K>
ColonReport colon_lemma_checks(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  ColonReport r;
  const auto p0 = p.chain(0);
  r.base = ideal_equal(colon(p0, p.forms.at(0)), p0);
  if (!r.base) r.witness = "P0 : F0 != P0";

  std::vector<Polynomial<K>> xs;
  for (std::size_t i = 0; i < j.n(); ++i) xs.push_back(x_var(j, i));
  const Ideal<K> xideal(p.ring, std::move(xs));
  for (std::size_t i = 1; i < p.forms.size(); ++i) {
    bool ok = ideal_equal(colon(p.chain(i), p.forms[i]), xideal);
    r.chain.push_back(ok);
    if (!ok && r.witness.empty()) r.witness = "P" + std::to_string(i) + " : F" + std::to_string(i) + " != (x)";
  }
  return r;
}

BettiTable cone_table(std::size_t n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("cone_table: need n >= 2 and d >= 2");
  const auto nn = static_cast<long long>(n);
  std::vector<std::vector<int>> shifts(n + 2);
  // Eagon-Northcott complex of the 2 x n matrix (x | y)
  std::vector<std::vector<int>> en(n);
  en[0].push_back(0);
  for (std::size_t i = 1; i < n; ++i) en[i].assign(static_cast<std::size_t>(static_cast<long long>(i) * binom(nn, i + 1)), static_cast<int>(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    shifts[i].insert(shifts[i].end(), en[i].begin(), en[i].end());
    for (int s : en[i]) shifts[i + 1].push_back(s + d);
  }
  for (int c = 0; c < d - 2; ++c)
    for (std::size_t i = 1; i <= n + 1; ++i)
      for (long long k = 0; k < binom(nn, static_cast<long long>(i) - 1); ++k) shifts[i].push_back(d + static_cast<int>(i) - 1);
  while (!shifts.empty() && shifts.back().empty()) shifts.pop_back();
  return BettiTable(std::move(shifts));
}

template <class K>
ConeBetti cone_betti(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  ConeBetti c;
  c.table = cone_table(j.n(), j.d());
  c.predicted = c.table.alternating_numerator();
  c.actual = hilbert_series_numerator(p.eliminated);
  c.hilbert_ok = c.predicted == c.actual;
  return c;
}

template <class K>
ProjdimReport projdim_probe(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  ProjdimReport r;
  auto res = minimal_free_resolution(p.eliminated, 2 * j.n() + 3, false);
  r.betti = res.betti;
  r.projdim = res.betti.length();
  r.codim = j.n();
  r.complete = res.complete;
  return r;
}

template <class K>
bool is_regular_specialization(const DeJonquieres<K>& j, const Polynomial<K>& lambda) {
  const auto& r = j.ring();
  auto l = Polynomial<K>::variable(r, j.n()) - change_ring(lambda, r);
  auto base = j.base_ideal();
  return ideal_contains(base, colon(base, l));
}

template <class K>
SpecializationReport<K> specialization_check(const DeJonquieres<K>& j, std::uint64_t seed) {
  const auto& r = j.ring();
  const auto& field = r->field();
  const std::size_t n = j.n();
  auto flat = make_ring<K>(field, std::vector<std::string>(r->names().begin(), r->names().begin() + n));

  std::mt19937_64 rng(seed);
  SpecializationReport<K> out{Polynomial<K>(r), 0, std::nullopt, Polynomial<K>(j.target())};
  bool found = false;
  for (int attempt = 0; attempt < 32 && !found; ++attempt) {
    Polynomial<K> lambda(r);
    for (std::size_t i = 0; i < n; ++i)
      lambda += Polynomial<K>::variable(r, i).scaled(random_elem(field, rng));
    out.attempts = attempt + 1;
    if (is_regular_specialization(j, lambda)) {
      out.lambda = lambda;
      found = true;
    }
  }
  if (!found) return out;

  std::vector<Polynomial<K>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(Polynomial<K>::variable(flat, i));
  images.push_back(change_ring(out.lambda, flat));
  std::vector<Polynomial<K>> forms;
  for (const auto& c : j.coords()) forms.push_back(substitute(c, std::span<const Polynomial<K>>(images), flat));

  auto kernel = reduced(presentation_kernel(forms, j.target()->names()));
  out.principal = kernel.gens.size() == 1;
  if (!kernel.gens.empty()) {
    out.h = change_ring(kernel.gens.front(), j.target());
    out.h_degree = out.h->total_degree();
  }

  // l(g) = G_{n+1} - lambda(G_1, ..., G_n)
  auto inv = inverse(j);
  const auto& g = inv.map.coords();
  auto l = Polynomial<K>::variable(r, n) - out.lambda;
  out.l_of_inverse = substitute(l, std::span<const Polynomial<K>>(g), j.target());
  out.proportional = out.principal && !out.l_of_inverse.is_zero() && out.l_of_inverse.monic() == out.h->monic();
  return out;
}

#define JONQ_INSTANTIATE_REES(K)                                                                   \
  template Ideal<K> rees_ideal(const DeJonquieres<K>&);                                            \
  template struct ReesPresentation<K>;                                                             \
  template ReesPresentation<K> rees_presentation(const DeJonquieres<K>&);                          \
  template bool rees_saturated(const DeJonquieres<K>&, const ReesPresentation<K>&);                \
  template Ideal<K> symmetric_ideal(const DeJonquieres<K>&);                                       \
  template std::size_t minimal_generator_count(const Ideal<K>&);                                   \
  template TheoremReport verify_main_theorem(const DeJonquieres<K>&, const ReesPresentation<K>&);  \
  template ColonReport colon_lemma_checks(const DeJonquieres<K>&, const ReesPresentation<K>&);     \
  template ConeBetti cone_betti(const DeJonquieres<K>&, const ReesPresentation<K>&);               \
  template ProjdimReport projdim_probe(const DeJonquieres<K>&, const ReesPresentation<K>&);        \
  template bool is_regular_specialization(const DeJonquieres<K>&, const Polynomial<K>&);           \
  template SpecializationReport<K> specialization_check(const DeJonquieres<K>&, std::uint64_t);

JONQ_INSTANTIATE_REES(PrimeField)
JONQ_INSTANTIATE_REES(RationalField)

}  // namespace jonq
