#include <random>

#include "doctest.h"
#include "jonq/resolution.hpp"
#include "random_ideals.hpp"
#include "support.hpp"

using namespace jonq;
using namespace jt;

namespace {

template <class K>
void check_resolution(const Ideal<K>& id) {
  auto s = schreyer_resolution(id);
  REQUIRE(s.complete);
  CHECK(s.complex.is_complex());
  CHECK(s.complex.is_graded());
  CHECK(s.complex.length() <= id.ring->nvars());
  auto m = minimal_free_resolution(id);
  CHECK(m.complex.is_complex());
  CHECK(m.complex.is_graded());
  CHECK(m.complex.is_minimal());
  CHECK(m.betti == minimal_betti(s.complex));
  CHECK(m.betti.alternating_numerator() == hilbert_series_numerator(id));
}

}  // namespace

TEST_CASE("Koszul complex of two variables") {
  auto r = ring<Q>("x1,x2,x3");
  auto m = minimal_free_resolution(I(r, {"x1", "x2"}));
  CHECK(m.betti.ranks_string() == "1 | 2 | 1");
  CHECK(m.betti.shifts_string() == "0 | 1,1 | 2");
  check_resolution(I(r, {"x1", "x2"}));
}

TEST_CASE("plane quadratic map") {
  auto r = ring<Q>("x1,x2,x3");
  auto id = I(r, {"x1*x3", "x2*x3", "x1^2 - x2*x3"});
  auto m = minimal_free_resolution(id);
  CHECK(m.betti.ranks_string() == "1 | 3 | 2");
  CHECK(m.betti.shifts_string() == "0 | 2,2,2 | 3,3");
  check_resolution(id);
}

TEST_CASE("quadratic map of P3") {
  auto r = ring<Q>("x1,x2,x3,x4");
  auto id = I(r, {"x1*x4", "x2*x4", "x3*x4", "x1*x2 - x3*x4"});
  auto m = minimal_free_resolution(id);
  CHECK(m.betti.shifts_string() == "0 | 2,2,2,2 | 3,3,3,3 | 4");
  check_resolution(id);
}

TEST_CASE("twisted cubic and complete intersections") {
  auto s = ring<Fp>("a,b,c,d");
  auto tc = I(s, {"a*c - b^2", "b*d - c^2", "a*d - b*c"});
  CHECK(minimal_free_resolution(tc).betti.shifts_string() == "0 | 2,2,2 | 3,3");
  check_resolution(tc);
  auto ci = I(s, {"a^2 + b*c", "b^3 - d^3", "c*d"});
  CHECK(minimal_free_resolution(ci).betti.shifts_string() == "0 | 2,2,3 | 4,5,5 | 7");
  check_resolution(ci);
}

TEST_CASE("syzygies of arbitrary generators") {
  auto r = ring<Q>("x1,x2,x3");
  std::vector<Polynomial<Q>> gens{P(r, "x1*x3"), P(r, "x2*x3"), P(r, "x1^2 - x2*x3"), P(r, "x1*x3 + x2*x3")};
  auto z = syzygies(gens);
  CHECK(z.cols() >= 3);
  for (std::size_t c = 0; c < z.cols(); ++c) {
    Polynomial<Q> s(r);
    for (std::size_t i = 0; i < gens.size(); ++i) s += multiply(z.at(i, c), gens[i]);
    CHECK(s.is_zero());
  }
  // the redundant fourth generator gives the syzygy e1 + e2 - e4
  auto koszul = syzygies(std::vector<Polynomial<Q>>{P(r, "x1"), P(r, "x2")});
  REQUIRE(koszul.cols() == 1);
  CHECK(((koszul.at(0, 0) == P(r, "x2") && koszul.at(1, 0) == P(r, "-x1")) ||
         (koszul.at(0, 0) == P(r, "-x2") && koszul.at(1, 0) == P(r, "x1"))));
}

TEST_CASE("random homogeneous ideals resolve consistently") {
  std::mt19937_64 rng(11);
  auto r = ring<Fp>("x1,x2,x3,x4");
  for (int trial = 0; trial < 100; ++trial) {
    CAPTURE(trial);
    check_resolution(random_homogeneous_ideal(r, rng));
  }
}
