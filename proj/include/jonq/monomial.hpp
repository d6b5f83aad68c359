#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace jonq {

/// Hard cap on ring arity. The Rees constructions at desk scale use at most
/// 2(n+1) + 2 variables.
inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector with a cached total degree.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(std::size_t i, unsigned power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFFu) throw std::overflow_error("exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Sum of exponents over the index range [first, last).
  unsigned degree_in_range(std::size_t first, std::size_t last) const {
    unsigned s = 0;
    for (std::size_t i = first; i < last; ++i) s += exps_[i];
    return s;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  /// Bit i set iff variable i occurs; a cheap necessary test for divisibility.
  std::uint32_t support_mask() const {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exps_[i]) m |= 1u << i;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned e = static_cast<unsigned>(a.exps_[i]) + b.exps_[i];
      if (e > 0xFFFFu) throw std::overflow_error("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i];
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.exps_[i] = a.exps_[i] < b.exps_[i] ? a.exps_[i] : b.exps_[i];
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
    return h;
  }

  const std::array<Exponent, kMaxVars>& exponents() const { return exps_; }

 private:
  std::array<Exponent, kMaxVars> exps_{};
  unsigned degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// A monomial order. `Block` compares the first `block` variables by graded
/// reverse lex first and breaks ties on the remaining variables by graded
/// reverse lex, so it eliminates the first block.
class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Deglex, Block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder deglex() { return MonomialOrder(Kind::Deglex, 0); }
  static MonomialOrder elimination(std::size_t block) { return MonomialOrder(Kind::Block, block); }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  bool is_degree_compatible() const { return kind_ == Kind::Grevlex || kind_ == Kind::Deglex; }

  /// Three-way comparison: positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Grevlex:
        return grevlex_range(a, b, 0, kMaxVars, a.degree(), b.degree());
      case Kind::Lex:
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Deglex:
        if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
      case Kind::Block: {
        unsigned da = a.degree_in_range(0, block_), db = b.degree_in_range(0, block_);
        int c = grevlex_range(a, b, 0, block_, da, db);
        if (c != 0) return c;
        return grevlex_range(a, b, block_, kMaxVars, a.degree() - da, b.degree() - db);
      }
    }
    return 0;
  }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && block_ == o.block_; }

  std::string name() const;

 private:
  MonomialOrder(Kind k, std::size_t block) : kind_(k), block_(block) {}

  static int grevlex_range(const Monomial& a, const Monomial& b, std::size_t first, std::size_t last,
                           unsigned da, unsigned db) {
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = last; i-- > first;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  Kind kind_;
  std::size_t block_;
};

}  // namespace jonq
