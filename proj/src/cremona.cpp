#include "jonq/cremona.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace jonq {

template <class K>
int RationalMap<K>::degree() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return c.total_degree();
  return -1;
}

template <class K>
RationalMap<K> make_map(RingPtr<K> source, RingPtr<K> target, std::vector<Polynomial<K>> coords) {
  if (coords.size() != target->nvars()) throw std::invalid_argument("map: need one coordinate per target variable");
  int deg = -1;
  for (const auto& c : coords) {
    if (!same_ring(c.ring(), source)) throw RingMismatch("map: coordinate outside the source ring");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw std::invalid_argument("map: coordinate is not homogeneous");
    if (deg >= 0 && c.total_degree() != deg) throw std::invalid_argument("map: coordinates of different degrees");
    deg = c.total_degree();
  }
  if (deg < 0) throw std::invalid_argument("map: all coordinates vanish");
  return RationalMap<K>{std::move(source), std::move(target), std::move(coords)};
}

template <class K>
RationalMap<K> identity_map(const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> c;
  for (std::size_t i = 0; i < ring->nvars(); ++i) c.push_back(Polynomial<K>::variable(ring, i));
  return RationalMap<K>{ring, ring, std::move(c)};
}

template <class K>
std::vector<Polynomial<K>> compose(const RationalMap<K>& g, const RationalMap<K>& f) {
  if (g.source->names() != f.target->names() || !(g.source->field() == f.target->field()))
    throw RingMismatch("compose: target of the inner map is not the source of the outer");
  std::vector<Polynomial<K>> out;
  for (const auto& c : g.coords) out.push_back(substitute(c, std::span<const Polynomial<K>>(f.coords), f.source));
  return out;
}

template <class K>
RationalMap<K> normalize_map(const RationalMap<K>& m) {
  auto g = gcd(std::span<const Polynomial<K>>(m.coords));
  if (g.is_constant()) return make_map(m.source, m.target, m.coords);
  std::vector<Polynomial<K>> c;
  for (const auto& p : m.coords) c.push_back(*divide_exact(p, g));
  return make_map(m.source, m.target, std::move(c));
}

template <class K>
InversionResult<K> inversion_certificate(const RationalMap<K>& f, const RationalMap<K>& g) {
  InversionResult<K> out;
  auto comp = compose(g, f);
  const auto& ring = f.source;
  if (comp.size() != ring->nvars()) {
    out.failed_coordinate = 1;
    out.reason = "composite has the wrong number of coordinates";
    return out;
  }
  std::optional<Polynomial<K>> delta;
  for (std::size_t i = 0; i < comp.size() && !delta; ++i) {
    if (comp[i].is_zero()) continue;
    delta = divide_exact(comp[i], Polynomial<K>::variable(ring, i));
    if (!delta) {
      out.failed_coordinate = i + 1;
      out.reason = "coordinate not divisible by its variable";
      return out;
    }
  }
  if (!delta) {
    out.failed_coordinate = 1;
    out.reason = "composite vanishes identically";
    return out;
  }
  for (std::size_t i = 0; i < comp.size(); ++i)
    if (!(comp[i] == multiply(*delta, Polynomial<K>::variable(ring, i)))) {
      out.failed_coordinate = i + 1;
      out.reason = "coordinate is not factor * variable";
      return out;
    }
  int deg = delta->total_degree();
  out.certificate = InversionCertificate<K>{g, std::move(*delta), deg};
  return out;
}

template <class K>
bool is_confluent(const RationalMap<K>& j, const RationalMap<K>& support) {
  const std::size_t n = support.arity();
  if (j.arity() != n + 1) return false;
  std::vector<Polynomial<K>> s;
  for (const auto& c : support.coords) s.push_back(change_ring(c, j.source));
  std::optional<Polynomial<K>> f;
  for (std::size_t k = 0; k < n && !f; ++k) {
    if (s[k].is_zero()) continue;
    f = divide_exact(j.coords[k], s[k]);
    if (!f) return false;
  }
  if (!f || f->is_zero()) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (!(j.coords[k] == multiply(*f, s[k]))) return false;
  if (j.coords[n].is_zero()) return false;
  return gcd(*f, j.coords[n]).is_constant();
}

namespace {

template <class K>
Polynomial<K> determinant(std::vector<std::vector<Polynomial<K>>> m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  auto ring = m[0][0].ring();
  Polynomial<K> acc(ring);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial<K>>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial<K>> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    auto term = multiply(m[0][c], determinant(std::move(minor)));
    if (c % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

template <class K>
bool jacobian_full_rank(const std::vector<Polynomial<K>>& forms) {
  const std::size_t m = forms.size();
  const std::size_t nv = forms.front().ring()->nvars();
  std::vector<std::vector<Polynomial<K>>> jac;
  for (const auto& f : forms) {
    std::vector<Polynomial<K>> row;
    for (std::size_t v = 0; v < nv; ++v) row.push_back(partial_derivative(f, v));
    jac.push_back(std::move(row));
  }
  std::vector<std::size_t> cols(m);
  for (std::size_t i = 0; i < m; ++i) cols[i] = i;
  while (true) {
    std::vector<std::vector<Polynomial<K>>> sq;
    for (const auto& row : jac) {
      std::vector<Polynomial<K>> r;
      for (auto c : cols) r.push_back(row[c]);
      sq.push_back(std::move(r));
    }
    if (!determinant(std::move(sq)).is_zero()) return true;
    // next column subset in lexicographic order
    std::size_t k = m;
    while (k > 0 && cols[k - 1] == nv - m + k - 1) --k;
    if (k == 0) return false;
    ++cols[k - 1];
    for (std::size_t i = k; i < m; ++i) cols[i] = cols[i - 1] + 1;
  }
}

std::vector<std::string> fresh_names(const std::vector<std::string>& taken, const std::string& prefix, std::size_t n) {
  std::string p = prefix;
  auto clash = [&] {
    for (std::size_t i = 1; i <= n; ++i)
      if (std::find(taken.begin(), taken.end(), p + std::to_string(i)) != taken.end()) return true;
    return false;
  };
  while (clash()) p += "_";
  return indexed_names(p, n);
}

}  // namespace

template <class K>
Ideal<K> presentation_kernel(const std::vector<Polynomial<K>>& forms, const std::vector<std::string>& names) {
  if (forms.empty() || forms.size() != names.size())
    throw std::invalid_argument("presentation_kernel: one name per form");
  const auto& src = forms.front().ring();
  auto all = src->names();
  for (const auto& n : names) {
    if (std::find(all.begin(), all.end(), n) != all.end())
      throw std::invalid_argument("presentation_kernel: name clash with the source ring");
    all.push_back(n);
  }
  auto big = make_ring<K>(src->field(), all, MonomialOrder::elimination(src->nvars()));
  auto target = make_ring<K>(src->field(), names);
  Ideal<K> id(big);
  for (std::size_t i = 0; i < forms.size(); ++i)
    id.gens.push_back(Polynomial<K>::variable(big, src->nvars() + i) - change_ring(forms[i], big));
  auto e = eliminate(id, src->nvars());
  Ideal<K> out(target);
  for (const auto& g : e.gens) out.gens.push_back(change_ring(g, target));
  return reduced(out);
}

template <class K>
IndependenceResult algebraically_independent(const std::vector<Polynomial<K>>& forms) {
  if (forms.empty()) return {true, false};
  const auto& ring = forms.front().ring();
  for (const auto& f : forms)
    if (f.is_zero()) return {false, false};
  if (forms.size() > ring->nvars()) return {false, false};
  auto by_elimination = [&] {
    auto names = fresh_names(ring->names(), "u", forms.size());
    return IndependenceResult{presentation_kernel(forms, names).gens.empty(), true};
  };
  const auto p = ring->field().characteristic();
  if (p != 0) {
    unsigned long long bound = 1;
    for (const auto& f : forms) bound *= static_cast<unsigned long long>(std::max(1, f.total_degree()));
    if (p <= bound) return by_elimination();
  }
  if (jacobian_full_rank(forms)) return {true, false};
  if (p == 0) return {false, false};
  return by_elimination();
}

template <class K>
std::vector<typename K::Elem> image_point(const RationalMap<K>& m, std::span<const typename K::Elem> point) {
  std::vector<typename K::Elem> out;
  for (const auto& c : m.coords) out.push_back(evaluate(c, point));
  return out;
}

template <class K>
Ideal<K> fiber_ideal(const RationalMap<K>& f, std::span<const typename K::Elem> point) {
  const K& F = f.source->field();
  if (point.size() != f.arity()) throw std::invalid_argument("fiber_ideal: point has the wrong arity");
  if (std::all_of(point.begin(), point.end(), [&](const auto& v) { return F.is_zero(v); }))
    throw std::invalid_argument("fiber_ideal: zero point");
  Ideal<K> minors(f.source);
  for (std::size_t i = 0; i < f.arity(); ++i)
    for (std::size_t j = i + 1; j < f.arity(); ++j) {
      auto m = f.coords[i].scaled(point[j]) - f.coords[j].scaled(point[i]);
      if (!m.is_zero()) minors.gens.push_back(std::move(m));
    }
  return saturate(minors, Ideal<K>(f.source, f.coords));
}

template <class K>
RingPtr<K> bigraded_ring(const K& field, std::size_t n, MonomialOrder order) {
  auto names = indexed_names("x", n + 1);
  for (auto& y : indexed_names("y", n + 1)) names.push_back(y);
  return make_ring<K>(field, std::move(names), order, Bigrading{n + 1, n + 1});
}

template <class K>
RingPtr<K> x_ring(const K& field, std::size_t n) {
  return make_ring<K>(field, indexed_names("x", n + 1));
}

template <class K>
Polynomial<K> on_graph(const Polynomial<K>& biform, const std::vector<Polynomial<K>>& coords) {
  const auto& split = biform.ring()->bigrading();
  if (!split || split->ny != coords.size()) throw std::invalid_argument("on_graph: need one coordinate per y-variable");
  std::map<std::size_t, Polynomial<K>> assignment;
  for (std::size_t i = 0; i < coords.size(); ++i) assignment.emplace(split->nx + i, coords[i]);
  return substitute(biform, assignment, coords.front().ring());
}

template <class K>
std::vector<Polynomial<K>> downgrade_general(const std::vector<Polynomial<K>>& z, const std::vector<Polynomial<K>>& h,
                                             int h_degree, const RingPtr<K>& s) {
  const auto& split = s->bigrading();
  if (!split || split->nx != z.size() || split->ny != z.size())
    throw std::invalid_argument("downgrade_general: ring does not match the syzygy length");
  const std::size_t n = z.size() - 1;
  if (h.size() != n) throw std::invalid_argument("downgrade_general: need n support-inverse forms");
  if (z.back().is_zero()) throw std::invalid_argument("downgrade_general: last syzygy entry vanishes");

  std::vector<Polynomial<K>> hs;
  for (const auto& f : h) {
    auto g = change_ring(f, s);
    if (g.is_zero() || !is_bihomogeneous(g) || bidegree(g) != std::pair<int, int>{0, h_degree})
      throw std::invalid_argument("downgrade_general: support inverse must be y-forms of the stated degree");
    hs.push_back(std::move(g));
  }
  std::vector<std::size_t> block(n);
  for (std::size_t k = 0; k < n; ++k) block[k] = k;

  int delta = -1;
  Polynomial<K> f1(s);
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z[i].is_zero()) continue;
    auto zi = change_ring(z[i], s);
    int o = xprime_order(zi, std::span<const std::size_t>(block));
    delta = delta < 0 ? o : std::min(delta, o);
    f1 += multiply(Polynomial<K>::variable(s, n + 1 + i), zi);
  }
  std::vector<Polynomial<K>> out{f1};
  for (int step = 0; step < delta; ++step) {
    auto content = x_decompose(out.back(), std::span<const std::size_t>(block));
    Polynomial<K> next(s);
    for (std::size_t k = 0; k < n; ++k)
      if (!content[k].is_zero()) next += multiply(content[k], hs[k]);
    out.push_back(std::move(next));
  }
  return out;
}

#define JONQ_INSTANTIATE_CREMONA(K)                                                                              \
  template struct RationalMap<K>;                                                                                \
  template RationalMap<K> make_map(RingPtr<K>, RingPtr<K>, std::vector<Polynomial<K>>);                          \
  template RationalMap<K> identity_map(const RingPtr<K>&);                                                       \
  template std::vector<Polynomial<K>> compose(const RationalMap<K>&, const RationalMap<K>&);                     \
  template RationalMap<K> normalize_map(const RationalMap<K>&);                                                  \
  template InversionResult<K> inversion_certificate(const RationalMap<K>&, const RationalMap<K>&);               \
  template bool is_confluent(const RationalMap<K>&, const RationalMap<K>&);                                      \
  template IndependenceResult algebraically_independent(const std::vector<Polynomial<K>>&);                      \
  template Ideal<K> presentation_kernel(const std::vector<Polynomial<K>>&, const std::vector<std::string>&);      \
  template std::vector<typename K::Elem> image_point(const RationalMap<K>&, std::span<const typename K::Elem>);  \
  template Ideal<K> fiber_ideal(const RationalMap<K>&, std::span<const typename K::Elem>);                       \
  template RingPtr<K> bigraded_ring(const K&, std::size_t, MonomialOrder);                                       \
  template RingPtr<K> x_ring(const K&, std::size_t);                                                             \
  template Polynomial<K> on_graph(const Polynomial<K>&, const std::vector<Polynomial<K>>&);                      \
  template std::vector<Polynomial<K>> downgrade_general(const std::vector<Polynomial<K>>&,                       \
                                                        const std::vector<Polynomial<K>>&, int, const RingPtr<K>&);

JONQ_INSTANTIATE_CREMONA(PrimeField)
JONQ_INSTANTIATE_CREMONA(RationalField)

}  // namespace jonq
