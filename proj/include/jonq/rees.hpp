#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jonq/dejonq.hpp"

namespace jonq {

/// Kernel of k[x, y] -> R[t], y_i -> t x_i f, y_{n+1} -> t g, as a reduced
/// Gröbner basis in the graph ring.
template <class K>
Ideal<K> rees_ideal(const DeJonquieres<K>& j);

template <class K>
struct ReesPresentation {
  RingPtr<K> ring;
  Ideal<K> eliminated;
  /// x_j y_i - x_i y_j, 1 <= i < j <= n
  std::vector<Polynomial<K>> minors;
  /// F_0 .. F_{d-2}
  std::vector<Polynomial<K>> forms;

  Ideal<K> predicted() const;
  /// (minors, F_0, ..., F_{i-1})
  Ideal<K> chain(std::size_t i) const;
};

template <class K>
ReesPresentation<K> rees_presentation(const DeJonquieres<K>& j);

/// Whether the Rees ideal is stable under saturation by (x_1..x_{n+1}).
template <class K>
bool rees_saturated(const DeJonquieres<K>& j, const ReesPresentation<K>& p);

/// Ideal generated by sum_i y_i z_i over the syzygies z of the base ideal.
template <class K>
Ideal<K> symmetric_ideal(const DeJonquieres<K>& j);

/// Number of minimal generators of a homogeneous ideal.
template <class K>
std::size_t minimal_generator_count(const Ideal<K>& ideal);

struct TheoremReport {
  bool equal = false;
  bool minimal = false;
  std::size_t predicted_count = 0;
  std::size_t expected_count = 0;
  std::size_t minimal_count = 0;
  bool linear_type = false;
  std::string witness;

  bool pass() const {
    return equal && minimal && predicted_count == expected_count && minimal_count == expected_count;
  }
};

template <class K>
TheoremReport verify_main_theorem(const DeJonquieres<K>& j, const ReesPresentation<K>& p);

struct ColonReport {
  bool base = false;
  /// chain[i-1] is the check for P_i : F_i, 1 <= i <= d-2
  std::vector<bool> chain;
  std::string witness;

  bool pass() const;
};

template <class K>
ColonReport colon_lemma_checks(const DeJonquieres<K>& j, const ReesPresentation<K>& p);

struct ConeBetti {
  BettiTable table;
  HilbertNumerator predicted;
  HilbertNumerator actual;
  bool hilbert_ok = false;
};

/// Ranks and shifts of the iterated mapping cone, total grading.
BettiTable cone_table(std::size_t n, int d);

template <class K>
ConeBetti cone_betti(const DeJonquieres<K>& j, const ReesPresentation<K>& p);

struct ProjdimReport {
  std::size_t projdim = 0;
  /// Height of the Rees ideal, which is n.
  std::size_t codim = 0;
  bool complete = false;
  BettiTable betti;

  bool cohen_macaulay() const { return complete && projdim == codim; }
  bool almost_cohen_macaulay() const { return complete && projdim <= codim + 1; }
};

template <class K>
ProjdimReport projdim_probe(const DeJonquieres<K>& j, const ReesPresentation<K>& p);

template <class K>
struct SpecializationReport {
  /// lambda in x_1..x_n with l = x_{n+1} - lambda regular on R/I.
  Polynomial<K> lambda;
  int attempts = 0;
  /// Generator of the kernel of k[y] -> k[x_1..x_n] for the specialized map.
  std::optional<Polynomial<K>> h;
  Polynomial<K> l_of_inverse;
  bool principal = false;
  bool proportional = false;
  int h_degree = -1;

  bool pass(int d) const { return principal && proportional && h_degree == d; }
};

/// Tests whether x_{n+1} - lambda is a nonzerodivisor on R/I.
template <class K>
bool is_regular_specialization(const DeJonquieres<K>& j, const Polynomial<K>& lambda);

template <class K>
SpecializationReport<K> specialization_check(const DeJonquieres<K>& j, std::uint64_t seed);

}  // namespace jonq
