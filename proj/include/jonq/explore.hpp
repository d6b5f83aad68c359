#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jonq/rees.hpp"

namespace jonq {

struct CheckSet {
  bool theorem = true;
  bool colon = true;
  bool cone = true;
  bool projdim = true;
  bool special = true;

  /// Comma-separated subset of theorem,colon,cone,projdim,special.
  static CheckSet parse(const std::string& list);
};

struct CaseSpec {
  std::size_t n = 0;
  int d = 0;
  std::uint64_t seed = 0;
};

struct CaseOutcome {
  CaseSpec spec;
  std::string f, g;
  CheckSet checks;
  bool theorem = false;
  bool linear_type = false;
  bool colon = false;
  bool cone_hilbert = false;
  bool special = false;
  std::size_t projdim = 0;
  bool projdim_complete = false;
  bool cm = false;
  long long runtime_ms = 0;
  std::string witness;
  /// Set when a check threw; the other fields are then unreliable.
  std::string error;

  /// Every requested check passed (projdim: complete and at most n+1).
  bool pass() const;
  /// CM exactly when d <= n+1.
  bool matches_conjecture() const { return cm == (spec.d <= static_cast<int>(spec.n) + 1); }
};

std::uint64_t splitmix64(std::uint64_t x);

/// Cases (n, d, trial) over the rectangle in (n, d, trial) order, each with a
/// seed derived from the base seed.
std::vector<CaseSpec> case_grid(std::size_t n_lo, std::size_t n_hi, int d_lo, int d_hi, int trials,
                                std::uint64_t seed);

template <class K>
CaseOutcome run_checks(const DeJonquieres<K>& j, const CheckSet& checks, std::uint64_t seed);

/// Random map over GF(modulus) for the case, then run_checks.
CaseOutcome run_case(const CaseSpec& c, std::uint32_t modulus, const CheckSet& checks);

/// Results are in the order of `cases` regardless of `parallel`.
std::vector<CaseOutcome> sweep(const std::vector<CaseSpec>& cases, std::uint32_t modulus, const CheckSet& checks,
                               bool parallel);

}  // namespace jonq
