#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jonq/ring.hpp"

namespace jonq {

/// Raised when operands live in different rings or a substitution target is
/// inconsistent.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree of a polynomial in one variable. The zero polynomial has no degree;
/// it is reported with an explicit tag and a raw sentinel of -1.
class VarDegree {
 public:
  static VarDegree of_zero() { return VarDegree(); }
  explicit VarDegree(int value) : value_(value) {}

  bool is_zero_polynomial() const { return value_ < 0; }
  int value() const {
    if (value_ < 0) throw std::logic_error("degree of the zero polynomial");
    return value_;
  }
  int raw() const { return value_; }
  bool operator==(const VarDegree&) const = default;

 private:
  VarDegree() = default;
  int value_ = -1;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending under
/// the ring's order with no zero coefficients.
template <class K>
class Polynomial {
 public:
  using Field = K;
  using Elem = typename K::Elem;
  struct Term {
    Monomial mono;
    Elem coeff;
  };

  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary terms: merges duplicates, drops zeros, sorts.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term> terms);
  /// Takes terms that are already sorted, merged and nonzero.
  static Polynomial from_sorted(RingPtr<K> ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, const Elem& c);
  static Polynomial one(RingPtr<K> ring) { return constant(ring, ring->field().one()); }
  static Polynomial variable(RingPtr<K> ring, std::size_t i);
  static Polynomial term(RingPtr<K> ring, const Monomial& m, const Elem& c);

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const Elem& lc() const { return terms_.front().coeff; }

  /// Total degree of the highest-degree term; -1 for zero.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous(std::span<const int> weights) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }

  Polynomial scaled(const Elem& c) const;
  Polynomial times_term(const Monomial& m, const Elem& c) const;
  /// Divides by the leading coefficient.
  Polynomial monic() const;

  /// this -= c * m * g, the elementary reduction step.
  void sub_mul_term(const Elem& c, const Monomial& m, const Polynomial& g);

  bool operator==(const Polynomial& o) const;

  /// Reinterprets the terms under another ring with the same variables
  /// (typically the same ring with a different order).
  Polynomial in_ring(const RingPtr<K>& target) const;

  void check_same_ring(const Polynomial& o, const char* what) const;

 private:
  RingPtr<K> ring_;
  std::vector<Term> terms_;

  template <class T>
  friend Polynomial<T> multiply(const Polynomial<T>&, const Polynomial<T>&);
};

template <class K>
Polynomial<K> normalize(std::vector<typename Polynomial<K>::Term> terms, const RingPtr<K>& ring) {
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
Polynomial<K> multiply(const Polynomial<K>& p, const Polynomial<K>& q);

template <class K>
Polynomial<K> power(const Polynomial<K>& p, unsigned k);

/// Image of `p` under the ring morphism v_i -> images[i]; all images share
/// the target ring.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, std::span<const Polynomial<K>> images, const RingPtr<K>& target);

/// Partial assignment by variable index; unassigned variables are sent to the
/// same-named variable of `target`, which must exist.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& p, const std::map<std::size_t, Polynomial<K>>& assignment,
                         const RingPtr<K>& target);

/// Moves `p` into `target`, matching variables by name.
template <class K>
Polynomial<K> change_ring(const Polynomial<K>& p, const RingPtr<K>& target);

template <class K>
Polynomial<K> partial_derivative(const Polynomial<K>& p, std::size_t var);

template <class K>
VarDegree degree_in(const Polynomial<K>& p, std::size_t var);

/// Least total degree, over the terms, in the variables of `block`: the
/// largest delta with p in (block)^delta. Throws on the zero polynomial.
template <class K>
int xprime_order(const Polynomial<K>& p, std::span<const std::size_t> block);

/// Writes p = sum_k c_k * block[k]; every term goes to the lowest-index block
/// variable dividing it. Throws if some term is divisible by none.
template <class K>
std::vector<Polynomial<K>> x_decompose(const Polynomial<K>& p, std::span<const std::size_t> block);

/// Exact quotient p / q, or nullopt when q does not divide p.
template <class K>
std::optional<Polynomial<K>> divide_exact(const Polynomial<K>& p, const Polynomial<K>& q);

template <class K>
typename K::Elem evaluate(const Polynomial<K>& p, std::span<const typename K::Elem> point);

/// (x-degree, y-degree) of a bihomogeneous polynomial under the ring's split.
template <class K>
std::pair<int, int> bidegree(const Polynomial<K>& p);

template <class K>
bool is_bihomogeneous(const Polynomial<K>& p);

/// True iff some term has a positive exponent of `var`.
template <class K>
bool involves(const Polynomial<K>& p, std::size_t var);

/// Greatest common divisor, monic under the ring order. Computed from the
/// intersection (p) ∩ (q) by elimination.
template <class K>
Polynomial<K> gcd(const Polynomial<K>& p, const Polynomial<K>& q);

/// gcd of a list; zero entries are skipped. Throws if all are zero.
template <class K>
Polynomial<K> gcd(std::span<const Polynomial<K>> polys);

unsigned weighted_degree(const Monomial& m, std::span<const int> weights);

}  // namespace jonq
