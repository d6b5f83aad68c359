#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jonq/polynomial.hpp"

namespace jonq {

/// An ideal given by generators in a fixed ring.
template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Polynomial<K>> gens;

  Ideal(RingPtr<K> r, std::vector<Polynomial<K>> g = {}) : ring(std::move(r)), gens(std::move(g)) {}
};

/// Reduced Gröbner basis under the order of `ring()`: monic, interreduced,
/// sorted by ascending leading monomial.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<K> ring, std::vector<Polynomial<K>> reduced);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  bool is_zero_ideal() const { return elems_.empty(); }
  bool is_unit_ideal() const { return elems_.size() == 1 && elems_[0].is_constant(); }

  Polynomial<K> normal_form(const Polynomial<K>& p) const;
  bool contains(const Polynomial<K>& p) const { return normal_form(p).is_zero(); }
  bool contains_all(std::span<const Polynomial<K>> ps) const;
  std::vector<Monomial> leading_monomials() const;

  Ideal<K> ideal() const { return Ideal<K>(ring_, elems_); }

 private:
  RingPtr<K> ring_;
  std::vector<Polynomial<K>> elems_;
};

/// A Gröbner basis together with, for each element, its expression in the
/// input generators: elements[k] = sum_i lifts[k][i] * gens[i].
template <class K>
struct LiftedBasis {
  GroebnerBasis<K> basis;
  std::vector<std::vector<Polynomial<K>>> lifts;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Buchberger's algorithm with the coprime and chain (Gebauer–Möller) criteria
/// and sugar-degree pair selection. Uses the order of `ideal.ring`.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& ideal, BuchbergerStats* stats = nullptr);

template <class K>
LiftedBasis<K> buchberger_with_lifts(const Ideal<K>& ideal);

/// Remainder of full reduction by the list (which need not be a basis).
template <class K>
Polynomial<K> reduce(const Polynomial<K>& p, std::span<const Polynomial<K>> by);

/// Division with remainder: p = sum_k quotients[k] * by[k] + remainder.
template <class K>
struct Division {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

template <class K>
Division<K> divide(const Polynomial<K>& p, std::span<const Polynomial<K>> by);

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const GroebnerBasis<K>& gb) {
  return gb.normal_form(p);
}

/// S-polynomial of two nonzero polynomials.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

template <class K>
bool ideal_equal(const Ideal<K>& a, const Ideal<K>& b);

/// a ⊆ b
template <class K>
bool ideal_contains(const Ideal<K>& b, const Ideal<K>& a);

/// Generators of I ∩ k[v_{first+1}, ...]: the first `first` variables are
/// eliminated under a block order. Result stays in the ring of `ideal`.
template <class K>
Ideal<K> eliminate(const Ideal<K>& ideal, std::size_t first);

template <class K>
Ideal<K> intersect(const Ideal<K>& a, const Ideal<K>& b);

/// I : (f), via (I ∩ (f)) / f.
template <class K>
Ideal<K> colon(const Ideal<K>& ideal, const Polynomial<K>& f);

/// I : J as the intersection of the colons by generators of J.
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& ideal, const Ideal<K>& j);

/// I : J^∞ by iterated colon until the ideal stops growing.
template <class K>
Ideal<K> saturate(const Ideal<K>& ideal, const Ideal<K>& j);

/// Reduced basis of the ideal, as an Ideal.
template <class K>
Ideal<K> reduced(const Ideal<K>& ideal) {
  return buchberger(ideal).ideal();
}

/// Ring with `names` prepended (under an elimination order for them) and the
/// map of the old ring into it.
template <class K>
RingPtr<K> adjoin_front(const RingPtr<K>& ring, const std::vector<std::string>& names);

/// Integer polynomial N(t) in HS(R/I) = N(t) / prod_i (1 - t^{w_i}).
class HilbertNumerator {
 public:
  HilbertNumerator() : coeffs_{1} {}
  explicit HilbertNumerator(std::vector<long long> coeffs);

  const std::vector<long long>& coeffs() const { return coeffs_; }
  long long coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  HilbertNumerator operator+(const HilbertNumerator& o) const;
  HilbertNumerator operator-(const HilbertNumerator& o) const;
  HilbertNumerator operator*(const HilbertNumerator& o) const;
  bool operator==(const HilbertNumerator& o) const { return coeffs_ == o.coeffs_; }

  /// 1 - t^k
  static HilbertNumerator one_minus_t_pow(unsigned k);
  static HilbertNumerator monomial(long long c, unsigned k);

  /// Largest c with (1-t)^c dividing N, and N / (1-t)^c.
  std::pair<int, HilbertNumerator> strip_one_minus_t() const;
  long long value_at_one() const;

  /// Krull dimension of R/I (standard grading on `nvars` variables).
  int dimension(std::size_t nvars) const;
  /// Degree (multiplicity) of R/I under the standard grading.
  long long multiplicity() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<long long> coeffs_;
};

/// Numerator of the Hilbert series of R/I, read off the leading-term ideal of
/// a Gröbner basis. Empty `weights` means all ones. Throws on inhomogeneous
/// generators.
template <class K>
HilbertNumerator hilbert_series_numerator(const Ideal<K>& ideal, std::span<const int> weights = {});

/// Same, directly for a monomial ideal.
HilbertNumerator monomial_ideal_numerator(std::vector<Monomial> gens, std::span<const int> weights,
                                          std::size_t nvars);

}  // namespace jonq
