#include <stdexcept>

#include "jonq/groebner.hpp"

namespace jonq {

template <class K>
Polynomial<K> gcd(const Polynomial<K>& p, const Polynomial<K>& q) {
  if (!same_ring(p.ring(), q.ring())) throw RingMismatch("gcd: operands in different rings");
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0)");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  if (p.is_constant() || q.is_constant()) return Polynomial<K>::one(p.ring());
  if (divide_exact(q, p)) return p.monic();
  if (divide_exact(p, q)) return q.monic();
  // (p) ∩ (q) = (lcm(p, q))
  auto meet = intersect(Ideal<K>(p.ring(), {p}), Ideal<K>(p.ring(), {q}));
  if (meet.gens.size() != 1) throw std::logic_error("gcd: intersection of principal ideals is not principal");
  auto g = divide_exact(multiply(p, q), meet.gens.front());
  if (!g) throw std::logic_error("gcd: lcm does not divide the product");
  return g->monic();
}

template <class K>
Polynomial<K> gcd(std::span<const Polynomial<K>> polys) {
  std::optional<Polynomial<K>> acc;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    acc = acc ? gcd(*acc, p) : p.monic();
    if (acc->is_constant()) break;
  }
  if (!acc) throw std::invalid_argument("gcd of zero polynomials");
  return *acc;
}

template Polynomial<PrimeField> gcd(const Polynomial<PrimeField>&, const Polynomial<PrimeField>&);
template Polynomial<RationalField> gcd(const Polynomial<RationalField>&, const Polynomial<RationalField>&);
template Polynomial<PrimeField> gcd(std::span<const Polynomial<PrimeField>>);
template Polynomial<RationalField> gcd(std::span<const Polynomial<RationalField>>);

}  // namespace jonq
