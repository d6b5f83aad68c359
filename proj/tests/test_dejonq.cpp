#include "doctest.h"
#include "examples.hpp"
#include "jonq/text.hpp"

using namespace jonq;
using namespace jt;

namespace {

template <class K>
void check_sequence(const DeJonquieres<K>& j) {
  auto seq = downgraded_sequence(j);
  const auto& s = j.graph_ring();
  const std::size_t n = j.n();
  const int d = j.d();
  REQUIRE(seq.forms.size() == static_cast<std::size_t>(d - 1));
  Polynomial<K> re(j.ring());
  for (std::size_t k = 0; k < n; ++k) re += multiply(seq.q[k], Polynomial<K>::variable(j.ring(), k));
  CHECK(re == j.g());
  std::vector<std::size_t> block;
  for (std::size_t k = 0; k < n; ++k) block.push_back(k);
  for (int i = 0; i < d - 1; ++i) {
    const auto& fi = seq.forms[i];
    CHECK(on_graph(fi, j.coords()).is_zero());
    CHECK(bidegree(fi) == std::pair<int, int>{d - 1 - i, i + 1});
    CHECK(degree_in(fi, 2 * n + 1).value() == 1);
    CHECK(xprime_order(fi, std::span<const std::size_t>(block)) >= d - (i + 2));
  }
  for (int i = 1; i <= d - 2; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      auto xj = Polynomial<K>::variable(s, jj);
      auto yj = Polynomial<K>::variable(s, n + 1 + jj);
      auto lhs = multiply(xj, seq.forms[i]) - multiply(yj, seq.forms[i - 1]);
      Polynomial<K> rhs(s);
      for (std::size_t k = 0; k < n; ++k) {
        auto p = multiply(xj, Polynomial<K>::variable(s, n + 1 + k)) - multiply(Polynomial<K>::variable(s, k), yj);
        rhs += multiply(p, seq.content[i - 1][k]);
      }
      CHECK(lhs == rhs);
    }
}

template <class K>
void check_inverse(const DeJonquieres<K>& j) {
  auto inv = inverse(j);
  CHECK(inv.certificate.factor_degree == j.d() * j.d() - 1);
  CHECK(inv.map.d() == j.d());
  auto back = inverse(inv.map);
  CHECK(back.certificate.factor_degree == j.d() * j.d() - 1);
  auto a = normalize_map(back.map.as_map());
  auto b = normalize_map(j.as_map());
  // equal up to a scalar
  const auto& F = j.ring()->field();
  auto ratio = F.div(a.coords.back().lc(), b.coords.back().lc());
  for (std::size_t i = 0; i < a.coords.size(); ++i) CHECK(a.coords[i] == b.coords[i].scaled(ratio));
}

template <class K>
void check_resolution(const DeJonquieres<K>& j) {
  auto c = resolution(j);
  CHECK(c.is_complex());
  CHECK(c.is_graded());
  CHECK(c.is_minimal());
  CHECK(c.betti() == predicted_betti(j.n(), j.d()));
  auto m = minimal_free_resolution(j.base_ideal());
  CHECK(m.betti == c.betti());
}

}  // namespace

TEST_CASE("construction accepts and rejects") {
  auto r = x_ring(Q{}, 2);
  auto e1 = DeJonquieres<Q>::construct(P(r, "x3"), P(r, "x1^2 - x2*x3"));
  REQUIRE(e1);
  CHECK(e1.map->d() == 2);
  auto bad = DeJonquieres<Q>::construct(P(r, "x3"), P(r, "x3^2"));
  CHECK(bad.violation == Violation::CommonFactor);
  CHECK(describe(bad.violation) == "gcd(f,g) ≠ 1");
  CHECK(DeJonquieres<Q>::construct(P(r, "x1"), P(r, "x1^2 + x2^2")).violation == Violation::NotDominant);
  CHECK(DeJonquieres<Q>::construct(P(r, "x3"), P(r, "x1^3")).violation == Violation::DegreeMismatch);
  CHECK(DeJonquieres<Q>::construct(P(r, "x3^2"), P(r, "x1^3")).violation == Violation::NotMonoid);
}

TEST_CASE("q-decompositions") {
  auto e1 = build<Q>(kE1);
  auto q1 = q_decomposition(e1);
  CHECK(q1[0] == P(e1.ring(), "x1"));
  CHECK(q1[1] == P(e1.ring(), "-x3"));
  auto e2 = build<Q>(kE2);
  auto q2 = q_decomposition(e2);
  CHECK(q2[0] == P(e2.ring(), "x2"));
  CHECK(q2[1].is_zero());
  CHECK(q2[2] == P(e2.ring(), "-x4"));
  auto e3 = build<Q>(kE3);
  auto q3 = q_decomposition(e3);
  CHECK(q3[0] == P(e3.ring(), "x1*x3"));
  CHECK(q3[1] == P(e3.ring(), "x2^2"));
}

TEST_CASE("downgraded sequences of the worked examples") {
  auto e1 = build<Q>(kE1);
  auto s1 = downgraded_sequence(e1);
  REQUIRE(s1.forms.size() == 1);
  CHECK(s1.forms[0] == P(e1.graph_ring(), "x3*y3 + x3*y2 - x1*y1"));
  auto e3 = build<Q>(kE3);
  auto s3 = downgraded_sequence(e3);
  REQUIRE(s3.forms.size() == 2);
  CHECK(s3.forms[0] == P(e3.graph_ring(), "(x1*x3 + x2^2)*y3 - x1*x3*y1 - x2^2*y2"));
  CHECK(s3.forms[1] == P(e3.graph_ring(), "x3*y1*(y3 - y1) + x2*y2*(y3 - y2)"));
  CHECK(s3.content[0][0] == P(e3.graph_ring(), "x3*y3 - x3*y1"));
  CHECK(s3.content[0][1] == P(e3.graph_ring(), "x2*y3 - x2*y2"));
  for (const auto& e : {kE1, kE2, kE3}) check_sequence(build<Q>(e));
}

TEST_CASE("inverses of the worked examples") {
  auto e1 = build<Q>(kE1);
  auto i1 = inverse(e1);
  auto y = e1.target();
  CHECK(i1.map.coords()[0] == P(y, "(y2+y3)*y1"));
  CHECK(i1.map.coords()[1] == P(y, "(y2+y3)*y2"));
  CHECK(i1.map.coords()[2] == P(y, "y1^2"));
  CHECK(i1.certificate.factor == P(e1.ring(), "x1^2*x3"));
  CHECK(i1.sign == -1);

  auto e2 = build<Q>(kE2);
  auto i2 = inverse(e2);
  CHECK(i2.map.coords()[3] == P(e2.target(), "y1*y2"));
  CHECK(i2.map.f() == P(e2.target(), "y3 + y4"));
  CHECK(i2.certificate.factor == P(e2.ring(), "x1*x2*x4"));

  auto e3 = build<Q>(kE3);
  auto i3 = inverse(e3);
  CHECK(i3.map.f() == P(e3.target(), "y1*(y3 - y1)"));
  auto g3 = P(e3.target(), "y2^2*(y3 - y2)");
  CHECK((i3.map.g() == g3 || i3.map.g() == -g3));
  CHECK(i3.certificate.factor_degree == 8);
  auto delta = P(e3.ring(), "x1*x2^2*(x2 - x1)*(x1*x3 + x2^2)^2");
  CHECK((i3.certificate.factor == delta || i3.certificate.factor == -delta));
  for (const auto& e : {kE1, kE2, kE3}) check_inverse(build<Q>(e));
}

TEST_CASE("explicit resolutions") {
  CHECK(predicted_betti(2, 2).shifts_string() == "0 | 2,2,2 | 3,3");
  CHECK(predicted_betti(3, 2).shifts_string() == "0 | 2,2,2,2 | 3,3,3,3 | 4");
  CHECK(predicted_betti(3, 3).shifts_string() == "0 | 3,3,3,3 | 4,4,4,5 | 5");
  for (const auto& e : {kE1, kE2, kE3}) check_resolution(build<Q>(e));
}

TEST_CASE("structural corollaries") {
  auto r1 = structural_checks(build<Q>(kE1));
  CHECK(r1.pass());
  CHECK(r1.multiplicity == 3);
  auto r2 = structural_checks(build<Q>(kE2));
  CHECK(r2.pass());
  CHECK(!r2.cohen_macaulay);
  auto r3 = structural_checks(build<Q>(kE3));
  CHECK(r3.pass());
  CHECK(r3.multiplicity == 7);
}

TEST_CASE("random maps over a prime field") {
  for (std::size_t n : {2, 3})
    for (int d : {2, 3, 4})
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        auto j = random_map(PrimeField(), n, d, seed * 1000 + n * 10 + static_cast<std::uint64_t>(d));
        CAPTURE(to_string(j.f()));
        CAPTURE(to_string(j.g()));
        check_sequence(j);
        check_inverse(j);
        check_resolution(j);
      }
}

TEST_CASE("random maps are reproducible") {
  auto a = random_map(PrimeField(), 3, 3, 42);
  auto b = random_map(PrimeField(), 3, 3, 42);
  CHECK(a.f() == b.f());
  CHECK(a.g() == b.g());
  auto q = random_map(RationalField(), 2, 3, 5);
  check_inverse(q);
}
