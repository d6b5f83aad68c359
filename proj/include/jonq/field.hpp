#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace jonq {

/// Thrown for arithmetic that has no value in the field (division by zero,
/// a denominator that vanishes mod p).
class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The prime field F_p with p < 2^31. Elements are canonical residues in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kDefaultModulus = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultModulus);

  std::uint32_t modulus() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const;
  Elem from_integer(const mpz_class& v) const;
  Elem from_rational(const mpz_class& num, const mpz_class& den) const;

  /// Symmetric representative in (-p/2, p/2], so that small negative numbers
  /// print the way they were typed.
  long long to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<long long>(a) - p_ : static_cast<long long>(a);
  }
  std::string to_string(Elem a) const { return std::to_string(to_signed(a)); }
  bool is_negative(Elem a) const { return a > p_ / 2; }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, backed by GMP.
class RationalField {
 public:
  using Elem = mpq_class;

  std::uint32_t characteristic() const { return 0; }
  std::string name() const { return "QQ"; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const;

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  Elem from_integer(const mpz_class& v) const { return Elem(v); }
  Elem from_rational(const mpz_class& num, const mpz_class& den) const;

  std::string to_string(const Elem& a) const { return a.get_str(); }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

bool is_prime(std::uint64_t n);

}  // namespace jonq
