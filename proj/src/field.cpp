#include "jonq/field.hpp"

namespace jonq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw FieldError("division by zero in " + name());
  // extended Euclid on signed 64-bit values
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return static_cast<Elem>(m);
}

PrimeField::Elem PrimeField::from_integer(const mpz_class& v) const {
  mpz_class m = v % p_;
  if (m < 0) m += p_;
  return static_cast<Elem>(m.get_ui());
}

PrimeField::Elem PrimeField::from_rational(const mpz_class& num, const mpz_class& den) const {
  Elem d = from_integer(den);
  if (d == 0) throw FieldError("denominator vanishes in " + name());
  return div(from_integer(num), d);
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) throw FieldError("division by zero in QQ");
  return Elem(1) / a;
}

RationalField::Elem RationalField::div(const Elem& a, const Elem& b) const {
  if (sgn(b) == 0) throw FieldError("division by zero in QQ");
  return a / b;
}

RationalField::Elem RationalField::from_rational(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw FieldError("zero denominator");
  Elem q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace jonq
