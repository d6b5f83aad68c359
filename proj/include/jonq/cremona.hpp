#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jonq/groebner.hpp"

namespace jonq {

/// A rational map P(source) --> P(target) given by equal-degree forms, one
/// per target variable.
template <class K>
struct RationalMap {
  RingPtr<K> source;
  RingPtr<K> target;
  std::vector<Polynomial<K>> coords;

  int degree() const;
  std::size_t arity() const { return coords.size(); }
};

/// Checks shape and homogeneity; does not divide out common factors.
template <class K>
RationalMap<K> make_map(RingPtr<K> source, RingPtr<K> target, std::vector<Polynomial<K>> coords);

template <class K>
RationalMap<K> identity_map(const RingPtr<K>& ring);

/// G ∘ F as forms on the source of F; no normalization.
template <class K>
std::vector<Polynomial<K>> compose(const RationalMap<K>& g, const RationalMap<K>& f);

/// Divides the coordinates by their gcd.
template <class K>
RationalMap<K> normalize_map(const RationalMap<K>& m);

/// G(F) = factor * (x_1, ..., x_{m+1}).
template <class K>
struct InversionCertificate {
  RationalMap<K> inverse;
  Polynomial<K> factor;
  int factor_degree = 0;
};

template <class K>
struct InversionResult {
  std::optional<InversionCertificate<K>> certificate;
  /// 1-based coordinate where proportionality first fails (0 on success).
  std::size_t failed_coordinate = 0;
  std::string reason;

  explicit operator bool() const { return certificate.has_value(); }
};

template <class K>
InversionResult<K> inversion_certificate(const RationalMap<K>& f, const RationalMap<K>& g);

/// J on P^n and a support map on P^{n-1} whose variables are the first n of
/// J's: true iff J = (f*F_1, ..., f*F_n, g) with gcd(f, g) = 1.
template <class K>
bool is_confluent(const RationalMap<K>& j, const RationalMap<K>& support);

struct IndependenceResult {
  bool independent = false;
  /// The Jacobian test was skipped or inconclusive in positive characteristic
  /// and elimination decided.
  bool used_elimination = false;
};

template <class K>
IndependenceResult algebraically_independent(const std::vector<Polynomial<K>>& forms);

/// Kernel of k[y_1..y_m] -> source ring, y_i -> forms[i], by elimination.
/// `names` are the y-variable names; the result lives in k[names].
template <class K>
Ideal<K> presentation_kernel(const std::vector<Polynomial<K>>& forms, const std::vector<std::string>& names);

/// Image of a point under the map.
template <class K>
std::vector<typename K::Elem> image_point(const RationalMap<K>& m, std::span<const typename K::Elem> point);

/// I_2 of the matrix with rows (coordinates of F) and (point) saturated by the
/// base ideal. Throws when the point is zero.
template <class K>
Ideal<K> fiber_ideal(const RationalMap<K>& f, std::span<const typename K::Elem> point);

/// k[x_1..x_{n+1}, y_1..y_{n+1}] with the (x | y) split.
template <class K>
RingPtr<K> bigraded_ring(const K& field, std::size_t n, MonomialOrder order = MonomialOrder::grevlex());

/// k[x_1..x_{n+1}]
template <class K>
RingPtr<K> x_ring(const K& field, std::size_t n);

/// Evaluates a biform of k[x, y] at y_i -> coords[i] (x_i fixed), landing in
/// the source ring of the coordinates.
template <class K>
Polynomial<K> on_graph(const Polynomial<K>& biform, const std::vector<Polynomial<K>>& coords);

/// The general-support downgrading: starting from a syzygy z of the base
/// ideal, F_1 = sum_i y_i z_i and F_{j+1} = sum_k F_{j,k} h_k where
/// F_j = sum_k F_{j,k} x_k over the first n x-variables. Returns F_1 ..
/// F_{delta+1}, delta being the least (x_1..x_n)-order of the entries of z.
/// `h` are forms in y_1..y_n of degree `h_degree` inverting the support.
template <class K>
std::vector<Polynomial<K>> downgrade_general(const std::vector<Polynomial<K>>& z, const std::vector<Polynomial<K>>& h,
                                             int h_degree, const RingPtr<K>& bigraded);

}  // namespace jonq
