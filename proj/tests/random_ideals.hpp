#pragma once

#include <random>

#include "jonq/groebner.hpp"

namespace jt {

// Sparse form of the given degree with 1..3 terms and nonzero coefficients.
inline jonq::Polynomial<jonq::PrimeField> random_form(const jonq::RingPtr<jonq::PrimeField>& r, unsigned deg,
                                                      std::mt19937_64& rng) {
  const auto nv = r->nvars();
  const auto p = r->field().modulus();
  std::vector<jonq::Polynomial<jonq::PrimeField>::Term> ts;
  int nterms = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < nterms; ++k) {
    jonq::Monomial m;
    for (unsigned e = 0; e < deg; ++e) {
      std::size_t v = rng() % nv;
      m.set(v, m[v] + 1u);
    }
    ts.push_back({m, static_cast<std::uint32_t>(1 + rng() % (p - 1))});
  }
  return jonq::Polynomial<jonq::PrimeField>::from_terms(r, ts);
}

// 2..4 forms of degree 1..3; never empty.
inline jonq::Ideal<jonq::PrimeField> random_homogeneous_ideal(const jonq::RingPtr<jonq::PrimeField>& r,
                                                              std::mt19937_64& rng) {
  jonq::Ideal<jonq::PrimeField> id(r);
  while (id.gens.empty()) {
    int ngens = 2 + static_cast<int>(rng() % 3);
    for (int g = 0; g < ngens; ++g) {
      auto p = random_form(r, 1 + rng() % 3, rng);
      if (!p.is_zero()) id.gens.push_back(p);
    }
  }
  return id;
}

}  // namespace jt
