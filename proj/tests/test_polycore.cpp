#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace jonq;
using namespace jt;

TEST_CASE("parse and print round trip") {
  auto r = ring<Q>("x1,x2,x3");
  auto p = P(r, "x1^2 - x2*x3");
  CHECK(to_string(p) == "x1^2 - x2*x3");
  CHECK(to_string(P(r, "-2/3 x1 + 0")) == "-2/3*x1");
  CHECK(to_string(P(r, "x1 - x1")) == "0");
  CHECK(P(r, "(x1+x2)^2") == P(r, "x1^2 + 2*x1*x2 + x2^2"));
  CHECK(P(r, "-(x1 - x3)") == P(r, "x3 - x1"));
}

TEST_CASE("malformed input is rejected") {
  auto r = ring<Q>("x1,x2");
  CHECK_THROWS_AS(P(r, "x1^^2"), ParseError);
  CHECK_THROWS_AS(P(r, "x1 + "), ParseError);
  CHECK_THROWS_AS(P(r, "x9"), ParseError);
  CHECK_THROWS_AS(P(r, "(x1"), ParseError);
  CHECK_THROWS_AS(P(r, "1/0"), ParseError);
}

TEST_CASE("coefficients reduce modulo p") {
  auto r = ring<Fp>("x1,x2", PrimeField(5));
  auto p = P(r, "7*x1 + 5*x2 + 3");
  CHECK(to_string(p) == "2*x1 - 2");
  CHECK(P(r, "1/2 x1") == P(r, "3 x1"));
  CHECK_THROWS(P(r, "1/5"));
}

TEST_CASE("orders") {
  auto g = ring<Q>("x1,x2,x3");
  auto l = ring<Q>("x1,x2,x3", Q{}, MonomialOrder::lex());
  CHECK(to_string(P(g, "x1 + x2^2")) == "x2^2 + x1");
  CHECK(to_string(P(l, "x1 + x2^2")) == "x1 + x2^2");
  // grevlex: x1*x3 < x2^2
  CHECK(to_string(P(g, "x1*x3 + x2^2")) == "x2^2 + x1*x3");
  auto e = ring<Q>("t,x1,x2", Q{}, MonomialOrder::elimination(1));
  CHECK(to_string(P(e, "x1^5 + t")) == "t + x1^5");
}

TEST_CASE("arithmetic laws on random polynomials") {
  auto r = ring<Fp>("x1,x2,x3");
  std::mt19937_64 rng(7);
  auto rnd = [&] {
    std::vector<Polynomial<Fp>::Term> ts;
    for (int k = 0; k < 6; ++k) {
      Monomial m;
      for (std::size_t i = 0; i < 3; ++i) m.set(i, rng() % 3);
      ts.push_back({m, static_cast<std::uint32_t>(rng() % 32003)});
    }
    return Polynomial<Fp>::from_terms(r, ts);
  };
  for (int trial = 0; trial < 100; ++trial) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(multiply(a, b + c) == multiply(a, b) + multiply(a, c));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK((a - a).is_zero());
    if (!b.is_zero()) {
      auto q = divide_exact(multiply(a, b), b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("substitution and derivatives") {
  auto r = ring<Q>("x1,x2,x3");
  auto p = P(r, "x1^2 - x2*x3");
  std::vector<Polynomial<Q>> img{P(r, "x2"), P(r, "x1"), P(r, "x3 + 1")};
  CHECK(substitute(p, std::span<const Polynomial<Q>>(img), r) == P(r, "x2^2 - x1*x3 - x1"));
  CHECK(partial_derivative(p, 0) == P(r, "2*x1"));
  CHECK(degree_in(p, 2).value() == 1);
  CHECK(degree_in(Polynomial<Q>(r), 2).is_zero_polynomial());
}

TEST_CASE("gcd") {
  auto r = ring<Q>("x1,x2,x3");
  CHECK(gcd(P(r, "x1^2*x2"), P(r, "x1*x2^2")) == P(r, "x1*x2"));
  CHECK(gcd(P(r, "x3"), P(r, "x1^2 - x2*x3")).is_constant());
  auto f = P(r, "x1*x3 + x2^2");
  CHECK(gcd(multiply(f, P(r, "x1 - x2")), multiply(f, P(r, "x3 + x1"))) == f.monic());
  auto s = ring<Fp>("x1,x2");
  CHECK(gcd(P(s, "x1^2 - x2^2"), P(s, "x1^2 + 2 x1 x2 + x2^2")) == P(s, "x1 + x2"));
}

TEST_CASE("Euler identity and bidegrees") {
  std::mt19937_64 rng(31);
  auto r = make_ring<Fp>(Fp{}, {"x1", "x2", "y1", "y2"}, MonomialOrder::grevlex(), Bigrading{2, 2});
  // bihomogeneous random form of bidegree (a, b)
  auto biform = [&](int a, int b) {
    std::vector<Polynomial<Fp>::Term> ts;
    for (int k = 0; k < 4; ++k) {
      Monomial m;
      for (int e = 0; e < a; ++e) {
        std::size_t v = rng() % 2;
        m.set(v, m[v] + 1u);
      }
      for (int e = 0; e < b; ++e) {
        std::size_t v = 2 + rng() % 2;
        m.set(v, m[v] + 1u);
      }
      ts.push_back({m, static_cast<std::uint32_t>(1 + rng() % 32002)});
    }
    return Polynomial<Fp>::from_terms(r, ts);
  };
  for (int trial = 0; trial < 100; ++trial) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    auto p = biform(a, b);
    if (p.is_zero()) continue;
    CHECK(is_bihomogeneous(p));
    CHECK(bidegree(p) == std::pair<int, int>{a, b});
    Polynomial<Fp> euler(r);
    for (std::size_t i = 0; i < 4; ++i) euler += multiply(Polynomial<Fp>::variable(r, i), partial_derivative(p, i));
    CHECK(euler == p.scaled(r->field().from_int(a + b)));
    auto q = biform(1, 2);
    if (!q.is_zero()) CHECK(bidegree(multiply(p, q)) == std::pair<int, int>{a + 1, b + 2});
  }
}
