#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jonq/cremona.hpp"
#include "jonq/resolution.hpp"

namespace jonq {

enum class Violation {
  None,
  DegreeMismatch,
  CommonFactor,
  NotMonoid,
  NotDominant,
  NotInSupportIdeal,
};

/// Human-readable name of the condition, e.g. "gcd(f,g) ≠ 1".
std::string describe(Violation v);

/// A generalized de Jonquières map with identity support,
///   J = (x_1 f : ... : x_n f : g),
/// on P^n with coordinates v_1..v_{n+1} (the last one distinguished).
template <class K>
class DeJonquieres {
 public:
  struct Construction;

  /// Validates f and g (living in a ring with n+1 variables) and builds the
  /// map, or reports the first violated condition.
  static Construction construct(const Polynomial<K>& f, const Polynomial<K>& g);

  std::size_t n() const { return n_; }
  int d() const { return d_; }
  const Polynomial<K>& f() const { return f_; }
  const Polynomial<K>& g() const { return g_; }
  const RingPtr<K>& ring() const { return f_.ring(); }
  /// Ring of the target P^n.
  const RingPtr<K>& target() const { return target_; }
  /// Source variables followed by target variables, with the bigrading split.
  const RingPtr<K>& graph_ring() const { return graph_; }

  /// x_1 f, ..., x_n f, g
  const std::vector<Polynomial<K>>& coords() const { return coords_; }
  Ideal<K> base_ideal() const { return Ideal<K>(ring(), coords_); }
  RationalMap<K> as_map() const { return RationalMap<K>{ring(), target_, coords_}; }

 private:
  DeJonquieres(Polynomial<K> f, Polynomial<K> g);

  std::size_t n_ = 0;
  int d_ = 0;
  Polynomial<K> f_, g_;
  RingPtr<K> target_, graph_;
  std::vector<Polynomial<K>> coords_;
};

template <class K>
struct DeJonquieres<K>::Construction {
  std::optional<DeJonquieres<K>> map;
  Violation violation = Violation::None;
  std::string detail;

  explicit operator bool() const { return map.has_value(); }
};

/// g = q_1 x_1 + ... + q_n x_n by the smallest-index rule.
template <class K>
std::vector<Polynomial<K>> q_decomposition(const DeJonquieres<K>& j);

template <class K>
struct DowngradedSequence {
  std::vector<Polynomial<K>> q;
  /// F_0 .. F_{d-2}, in the graph ring.
  std::vector<Polynomial<K>> forms;
  /// content[i][k] = F_{i,k}, with F_i = sum_k F_{i,k} x_k, for i = 0..d-3.
  std::vector<std::vector<Polynomial<K>>> content;
};

template <class K>
DowngradedSequence<K> downgraded_sequence(const DeJonquieres<K>& j);

template <class K>
struct Inverse {
  DeJonquieres<K> map;
  InversionCertificate<K> certificate;
  /// Sign in front of sum_i (dF/dx_i) y_i that made the certificate work.
  int sign = 1;
};

/// Inverse from the last downgraded form. Throws std::logic_error if the
/// certificate fails for both signs.
template <class K>
Inverse<K> inverse(const DeJonquieres<K>& j, const DowngradedSequence<K>& seq);

template <class K>
Inverse<K> inverse(const DeJonquieres<K>& j) {
  return inverse(j, downgraded_sequence(j));
}

/// The explicit minimal graded free resolution of R/I: the first syzygies are
/// the Koszul relations of x_1..x_n together with (-q_1, ..., -q_n, f), and
/// the tail is the Koszul tail.
template <class K>
FreeComplex<K> resolution(const DeJonquieres<K>& j);

/// Closed-form Betti data of R/I.
BettiTable predicted_betti(std::size_t n, int d);

struct StructuralReport {
  bool saturated = false;
  bool x_in_colon_f = false;
  std::size_t projdim = 0;
  bool cohen_macaulay = false;
  bool cm_iff_plane = false;
  /// Only computed for n = 2.
  std::optional<long long> multiplicity;
  bool multiplicity_ok = true;
  std::string witness;

  bool pass() const { return saturated && x_in_colon_f && cm_iff_plane && multiplicity_ok; }
};

template <class K>
StructuralReport structural_checks(const DeJonquieres<K>& j);

/// f = f0 + f1 x_{n+1}, g = g0 + g1 x_{n+1} with sparse random f0, f1, g0,
/// g1 over k[x_1..x_n], resampled until the construction is accepted.
template <class K>
DeJonquieres<K> random_map(const K& field, std::size_t n, int d, std::uint64_t seed);

}  // namespace jonq
