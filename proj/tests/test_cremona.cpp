#include "doctest.h"
#include "jonq/cremona.hpp"
#include "support.hpp"

using namespace jonq;
using namespace jt;

namespace {

template <class K>
RationalMap<K> map_of(const RingPtr<K>& src, const RingPtr<K>& tgt, std::initializer_list<const char*> coords) {
  std::vector<Polynomial<K>> c;
  for (auto s : coords) c.push_back(P(src, s));
  return make_map(src, tgt, c);
}

}  // namespace

TEST_CASE("composition and normalization of a plane quadratic map") {
  auto x = ring<Q>("x1,x2,x3");
  auto y = ring<Q>("y1,y2,y3");
  auto j = map_of(x, y, {"x1*x3", "x2*x3", "x1^2 - x2*x3"});
  auto g = map_of(y, x, {"(y2+y3)*y1", "(y2+y3)*y2", "y1^2"});
  auto comp = compose(g, j);
  CHECK(comp[0] == P(x, "x1^3*x3"));
  CHECK(comp[1] == P(x, "x1^2*x2*x3"));
  CHECK(comp[2] == P(x, "x1^2*x3^2"));
  auto n = normalize_map(make_map(x, x, comp));
  CHECK(n.coords == identity_map(x).coords);
  CHECK(normalize_map(n).coords == n.coords);
  CHECK(compose(identity_map(y), j) == j.coords);

  auto p1 = ring<Q>("u1,u2");
  auto proj = normalize_map(map_of(x, p1, {"x1*x3", "x2*x3"}));
  CHECK(proj.coords[0] == P(x, "x1"));
  CHECK(proj.coords[1] == P(x, "x2"));
}

TEST_CASE("inversion certificates") {
  auto x = ring<Q>("x1,x2,x3");
  auto y = ring<Q>("y1,y2,y3");
  auto j = map_of(x, y, {"x1*x3", "x2*x3", "x1^2 - x2*x3"});
  auto good = inversion_certificate(j, map_of(y, x, {"(y2+y3)*y1", "(y2+y3)*y2", "y1^2"}));
  REQUIRE(good);
  CHECK(good.certificate->factor == P(x, "x1^2*x3"));
  CHECK(good.certificate->factor_degree == 3);
  auto bad = inversion_certificate(j, map_of(y, x, {"(y2+y3)*y1", "(y2+y3)*y2", "-y1^2"}));
  CHECK(!bad);
  CHECK(bad.failed_coordinate == 3);

  auto id = inversion_certificate(identity_map(x), identity_map(x));
  REQUIRE(id);
  CHECK(id.certificate->factor == P(x, "1"));

  auto x4 = ring<Q>("x1,x2,x3,x4");
  auto y4 = ring<Q>("y1,y2,y3,y4");
  auto j2 = map_of(x4, y4, {"x1*x4", "x2*x4", "x3*x4", "x1*x2 - x3*x4"});
  auto g2 = map_of(y4, x4, {"(y3+y4)*y1", "(y3+y4)*y2", "(y3+y4)*y3", "y1*y2"});
  auto c2 = inversion_certificate(j2, g2);
  REQUIRE(c2);
  CHECK(c2.certificate->factor == P(x4, "x1*x2*x4"));
  CHECK(c2.certificate->factor_degree == 3);
  // and the other way round
  auto back = inversion_certificate(g2, j2);
  REQUIRE(back);
  CHECK(back.certificate->factor_degree == 3);
}

TEST_CASE("confluence") {
  auto x = ring<Q>("x1,x2,x3");
  auto y = ring<Q>("y1,y2,y3");
  auto s = ring<Q>("x1,x2");
  auto support = identity_map(s);
  CHECK(is_confluent(map_of(x, y, {"x1*x3", "x2*x3", "x1^2 - x2*x3"}), support));
  CHECK(!is_confluent(map_of(x, y, {"x1^2", "x2^2", "x3^2"}), support));
  CHECK(is_confluent(map_of(x, y, {"x1*(x1*x3 + x2^2)", "x2*(x1*x3 + x2^2)", "x1^2*x3 + x2^3"}), support));
  // common factor between f and g
  CHECK(!is_confluent(map_of(x, y, {"x1*x3", "x2*x3", "x3^2"}), support));
}

TEST_CASE("algebraic independence") {
  auto x = ring<Q>("x1,x2,x3");
  auto v = [&](std::initializer_list<const char*> fs) {
    std::vector<Polynomial<Q>> out;
    for (auto f : fs) out.push_back(P(x, f));
    return out;
  };
  CHECK(algebraically_independent(v({"x1", "x2", "x3"})).independent);
  CHECK(algebraically_independent(v({"x1*x3", "x2*x3", "x1^2 - x2*x3"})).independent);
  CHECK(!algebraically_independent(v({"x1", "x1^2"})).independent);
  CHECK(!algebraically_independent(v({"x1*x2", "x1^2", "x2^2"})).independent);

  auto f7 = ring<Fp>("x1,x2", PrimeField(7));
  auto r = algebraically_independent(std::vector<Polynomial<Fp>>{P(f7, "x1^7"), P(f7, "x2")});
  CHECK(r.independent);
  CHECK(r.used_elimination);
  auto big = ring<Fp>("x1,x2,x3");
  auto q = algebraically_independent(std::vector<Polynomial<Fp>>{P(big, "x1*x3"), P(big, "x2*x3"), P(big, "x1^2 - x2*x3")});
  CHECK(q.independent);
  CHECK(!q.used_elimination);
  // elimination agrees with the Jacobian where both apply
  auto k = presentation_kernel(v({"x1*x2", "x1^2", "x2^2"}), {"u1", "u2", "u3"});
  REQUIRE(k.gens.size() == 1);
  CHECK(k.gens[0] == P(k.ring, "u1^2 - u2*u3"));
}

TEST_CASE("fiber ideals") {
  auto x = ring<Q>("x1,x2,x3");
  auto y = ring<Q>("y1,y2,y3");
  using E = Q::Elem;
  std::vector<E> pt{1, 2, 3};
  auto id = fiber_ideal(identity_map(x), std::span<const E>(pt));
  CHECK(ideal_equal(id, I(x, {"2*x1 - x2", "3*x1 - x3", "3*x2 - 2*x3"})));

  auto j = map_of(x, y, {"x1*x3", "x2*x3", "x1^2 - x2*x3"});
  std::vector<E> alpha{1, 1, 1};
  auto img = image_point(j, std::span<const E>(alpha));
  CHECK(img == std::vector<E>{1, 1, 0});
  auto fib = fiber_ideal(j, std::span<const E>(img));
  auto gb = buchberger(fib);
  CHECK(gb.contains(P(x, "x1 - x2")));
  CHECK(gb.contains(P(x, "x1 - x3")));
  auto hn = hilbert_series_numerator(fib);
  CHECK(hn.dimension(3) == 1);
  CHECK(hn.multiplicity() == 1);

  auto sq = map_of(x, y, {"x1^2", "x2^2", "x3^2"});
  auto simg = image_point(sq, std::span<const E>(pt));
  auto sfib = hilbert_series_numerator(fiber_ideal(sq, std::span<const E>(simg)));
  CHECK(sfib.multiplicity() == 4);

  std::vector<E> zero{0, 0, 0};
  CHECK_THROWS(fiber_ideal(j, std::span<const E>(zero)));
}

TEST_CASE("downgrading with identity support") {
  auto r = x_ring(Q{}, 2);
  auto s = bigraded_ring(Q{}, 2);
  std::vector<Polynomial<Q>> h{P(s, "y1"), P(s, "y2")};
  std::vector<Polynomial<Q>> coords{P(r, "x1*(x1*x3 + x2^2)"), P(r, "x2*(x1*x3 + x2^2)"), P(r, "x1^2*x3 + x2^3")};
  // syzygy (-q1, -q2, f)
  std::vector<Polynomial<Q>> z{P(r, "-x1*x3"), P(r, "-x2^2"), P(r, "x1*x3 + x2^2")};
  auto seq = downgrade_general(z, h, 1, s);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0] == P(s, "(x1*x3 + x2^2)*y3 - x1*x3*y1 - x2^2*y2"));
  CHECK(seq[1] == P(s, "x3*y1*(y3 - y1) + x2*y2*(y3 - y2)"));
  for (const auto& f : seq) CHECK(on_graph(f, coords).is_zero());
  CHECK(degree_in(seq.back(), 2).value() >= 1);

  // Koszul syzygy of (x1 x3, g) for the plane quadratic map
  std::vector<Polynomial<Q>> e1{P(r, "x1*x3"), P(r, "x2*x3"), P(r, "x1^2 - x2*x3")};
  std::vector<Polynomial<Q>> kz{P(r, "x1^2 - x2*x3"), P(r, "0"), P(r, "-x1*x3")};
  auto ks = downgrade_general(kz, h, 1, s);
  REQUIRE(ks.size() == 2);
  CHECK(bidegree(ks[0]) == std::pair<int, int>{2, 1});
  CHECK(bidegree(ks[1]) == std::pair<int, int>{1, 2});
  for (const auto& f : ks) CHECK(on_graph(f, e1).is_zero());

  std::vector<Polynomial<Q>> z0{P(r, "-x1"), P(r, "x3"), P(r, "x3")};
  CHECK(downgrade_general(z0, h, 1, s).size() == 1);
}

TEST_CASE("downgrading with a quadratic support") {
  auto r = x_ring(Q{}, 3);
  auto s = bigraded_ring(Q{}, 3);
  std::vector<Polynomial<Q>> h{P(s, "y2*y3"), P(s, "y1*y3"), P(s, "y1*y2")};
  auto f = P(r, "x4");
  auto g = P(r, "x1*x2*x3 + x4*x1^2");
  std::vector<Polynomial<Q>> coords{multiply(f, P(r, "x2*x3")), multiply(f, P(r, "x1*x3")), multiply(f, P(r, "x1*x2")), g};
  std::vector<Polynomial<Q>> z{g, P(r, "0"), P(r, "0"), P(r, "-x4*x2*x3")};
  auto seq = downgrade_general(z, h, 2, s);
  REQUIRE(seq.size() == 3);
  for (std::size_t j = 0; j < seq.size(); ++j) {
    CHECK(on_graph(seq[j], coords).is_zero());
    CHECK(bidegree(seq[j]) == std::pair<int, int>{3 - static_cast<int>(j), 2 * static_cast<int>(j) + 1});
  }
}
