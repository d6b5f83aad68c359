#include "doctest.h"
#include "examples.hpp"
#include "jonq/rees.hpp"

using namespace jonq;
using namespace jt;

namespace {

template <class K>
void check_vanishing(const DeJonquieres<K>& j, const ReesPresentation<K>& p) {
  for (const auto& m : p.minors) CHECK(on_graph(m, j.coords()).is_zero());
  for (const auto& f : p.forms) CHECK(on_graph(f, j.coords()).is_zero());
  for (const auto& g : p.eliminated.gens) CHECK(on_graph(g, j.coords()).is_zero());
}

template <class K>
void check_all(const DeJonquieres<K>& j, std::uint64_t seed) {
  const std::size_t n = j.n();
  const int d = j.d();
  auto p = rees_presentation(j);
  check_vanishing(j, p);
  CHECK(rees_saturated(j, p));
  auto gb = buchberger(p.eliminated);
  for (const auto& f : p.forms) CHECK(gb.contains(f));

  auto thm = verify_main_theorem(j, p);
  INFO(thm.witness);
  CHECK(thm.equal);
  CHECK(thm.minimal);
  CHECK(thm.predicted_count == n * (n - 1) / 2 + static_cast<std::size_t>(d) - 1);
  CHECK(thm.minimal_count == thm.expected_count);
  CHECK(thm.linear_type == (d == 2));
  CHECK(thm.pass());

  auto col = colon_lemma_checks(j, p);
  INFO(col.witness);
  CHECK(col.chain.size() == static_cast<std::size_t>(d - 2));
  CHECK(col.pass());

  auto cone = cone_betti(j, p);
  CHECK(cone.hilbert_ok);
  CHECK(cone.actual.to_string() == cone.predicted.to_string());

  auto spec = specialization_check(j, seed);
  CHECK(spec.h.has_value());
  CHECK(spec.pass(d));
}

}  // namespace

TEST_CASE("cone tables by hand") {
  CHECK(cone_table(2, 2).shifts_string() == "0 | 2,2 | 4");
  CHECK(cone_table(2, 3).shifts_string() == "0 | 2,3,3 | 4,4,5 | 5");
  CHECK(cone_table(2, 2).alternating_numerator() ==
        HilbertNumerator::one_minus_t_pow(2) * HilbertNumerator::one_minus_t_pow(2));
  CHECK(cone_table(2, 3).alternating_numerator() == HilbertNumerator({1, 0, -1, -2, 2}));
  // Eagon-Northcott ranks for n = 4: 1, 6, 8, 3; d = 5 keeps the cones apart
  auto t = cone_table(4, 5);
  CHECK(t.count(1, 2) == 6);
  CHECK(t.count(2, 3) == 8);
  CHECK(t.count(3, 4) == 3);
  CHECK(t.count(1, 5) == 1 + 3);
  CHECK(t.length() == 5);
  CHECK(cone_table(4, 2).count(1, 2) == 7);
  CHECK(cone_table(3, 4).length() == 4);
  CHECK_THROWS(cone_table(1, 2));
}

TEST_CASE("minimal generator count") {
  auto r = ring<Q>("x1,x2,x3");
  CHECK(minimal_generator_count(I(r, {"x1^2", "x1*x2", "x1^2 + x1*x2", "x2^3", "x1^2*x2"})) == 3);
  CHECK(minimal_generator_count(I(r, {"x1", "x1*x2", "x2*x3"})) == 2);
  CHECK(minimal_generator_count(I(r, {"x1*x2 - x3^2", "x1^2*x2 - x1*x3^2", "x3^3"})) == 2);
}

TEST_CASE("E1 Rees ideal") {
  auto j = build<Q>(kE1);
  auto p = rees_presentation(j);
  const auto& s = p.ring;
  REQUIRE(p.minors.size() == 1);
  CHECK(p.minors[0] == P(s, "x2*y1 - x1*y2"));
  REQUIRE(p.forms.size() == 1);
  CHECK(p.forms[0] == P(s, "x3*y3 - x1*y1 + x3*y2"));
  CHECK(ideal_equal(p.eliminated, I(s, {"x2*y1 - x1*y2", "x3*y3 - x1*y1 + x3*y2"})));
  // complete intersection of two quadrics
  CHECK(hilbert_series_numerator(p.eliminated) ==
        HilbertNumerator::one_minus_t_pow(2) * HilbertNumerator::one_minus_t_pow(2));
  auto pd = projdim_probe(j, p);
  CHECK(pd.complete);
  CHECK(pd.projdim == 2);
  CHECK(pd.cohen_macaulay());
  CHECK(pd.betti.ranks_string() == "1 | 2 | 1");
}

TEST_CASE("E1 specialization needs a regular element") {
  auto j = build<Q>(kE1);
  CHECK_FALSE(is_regular_specialization(j, Polynomial<Q>(j.ring())));
  // V(I) is the two points (0:1:0), (0:0:1); x3 - x1 lies in (x1, x3)
  CHECK_FALSE(is_regular_specialization(j, P(j.ring(), "x1")));
  CHECK(is_regular_specialization(j, P(j.ring(), "x2")));
}

TEST_CASE("examples over QQ") {
  for (const auto* e : {&kE1, &kE2, &kE3}) {
    INFO(e->name);
    check_all(build<Q>(*e), 7);
  }
}

TEST_CASE("E3 presentation") {
  auto j = build<Q>(kE3);
  auto p = rees_presentation(j);
  std::vector<int> degrees;
  for (const auto& g : p.predicted().gens) degrees.push_back(g.total_degree());
  CHECK(degrees == std::vector<int>{2, 3, 3});
  CHECK(bidegree(p.forms[0]) == std::pair<int, int>{2, 1});
  CHECK(bidegree(p.forms[1]) == std::pair<int, int>{1, 2});
  auto pd = projdim_probe(j, p);
  CHECK(pd.complete);
  CHECK(pd.almost_cohen_macaulay());
}

TEST_CASE("random maps over GF(32003)") {
  for (std::size_t n : {2u, 3u})
    for (int d : {2, 3, 4})
      for (std::uint64_t seed : {1u, 2u, 3u}) {
        if (n == 3 && d == 4 && seed > 1) continue;
        INFO("n=" << n << " d=" << d << " seed=" << seed);
        auto j = random_map(Fp(), n, d, seed * 1000 + n * 10 + static_cast<std::uint64_t>(d));
        check_all(j, seed);
      }
}

TEST_CASE("projdim over random maps") {
  for (int d : {2, 3})
    for (std::uint64_t seed : {11u, 12u}) {
      auto j = random_map(Fp(), 2, d, seed);
      auto p = rees_presentation(j);
      auto pd = projdim_probe(j, p);
      INFO("d=" << d << " betti " << pd.betti.shifts_string());
      CHECK(pd.complete);
      CHECK(pd.almost_cohen_macaulay());
      CHECK(pd.betti.alternating_numerator() == hilbert_series_numerator(p.eliminated));
    }
}
