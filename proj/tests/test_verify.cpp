#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "starwalk/trees.hpp"
#include "starwalk/verify.hpp"

using namespace starwalk;

namespace {

MomentSequence seq(std::vector<long long> v) {
  MomentSequence m;
  for (long long x : v) m.values.emplace_back(x);
  return m;
}

void check_all_hold(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CAPTURE(r.instance);
    CHECK(r.holds);
    CHECK_FALSE(r.violation);
  }
}

}  // namespace

TEST_CASE("inequality primitive") {
  auto r = check_inequality("t", "x", seq({1, 0, 2, 0, 4}), seq({1, 0, 3, 0, 4}), true);
  CHECK(r.holds);
  CHECK(r.first_strict_witness == 2);
  CHECK_FALSE(r.strict_persistent);
  CHECK(r.horizon == 4);

  r = check_inequality("t", "x", seq({1, 0, 5}), seq({1, 0, 3}), false);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violation);
  CHECK(r.violation->k == 2);
  CHECK(r.violation->lhs == 5);

  r = check_inequality("t", "x", seq({1, 2}), seq({1, 2}), true);
  CHECK_FALSE(r.holds);
  REQUIRE(r.violation);
  CHECK(r.violation->k == -1);
  CHECK(check_inequality("t", "x", seq({1, 2}), seq({1, 2}), false).holds);

  CHECK(check_equality("e", "x", seq({3, 4}), seq({3, 4})).holds);
  CHECK(check_equality("e", "x", seq({3, 4}), seq({3, 5})).violation->k == 1);
}

TEST_CASE("path search") {
  const Graph s = make_starlike(Partition({1, 2, 3})).graph;
  CHECK(has_path_from(s, 0, 3));
  CHECK_FALSE(has_path_from(s, 0, 4));
  CHECK(has_path_from(s, 1, 4));
  CHECK_FALSE(has_path_from(s, 1, 5));
  CHECK(has_path_from(s, 6, 5));
  CHECK(has_path_from(make_path(1), 0, 0));
}

TEST_CASE("Li-Feng") {
  const auto r = check_li_feng(make_path(2), 0, 3, 1, 30);
  CHECK(r.holds);
  CHECK(r.first_strict_witness);
  CHECK(r.strict_required);
  CHECK_THROWS_AS(check_li_feng(make_path(2), 0, 2, 1, 30), std::invalid_argument);
  CHECK_THROWS_AS(check_li_feng(make_path(1), 0, 3, 1, 30), std::invalid_argument);
}

TEST_CASE("Cases I and III") {
  for (const Partition& alpha : {Partition({1, 1, 4}), Partition({1, 1, 1, 5}), Partition({1, 2, 2, 6}),
                                 Partition({1, 1, 1, 1, 4}), Partition({2, 3, 5})}) {
    const auto r = check_case1(alpha, 40);
    CAPTURE(r.instance);
    CHECK(r.holds);
    CHECK(r.first_strict_witness);
  }
  CHECK(check_case1(Partition({1, 1, 4}), 40).instance == "S(1,1,4) < S(1,2,3)");
  CHECK_THROWS_AS(check_case1(Partition({1, 2, 3}), 40), std::invalid_argument);

  const auto r3 = check_case3(Partition({2, 2, 2}), 40);
  CHECK(r3.holds);
  CHECK(r3.instance == "S(2,2,2) < S(1,1,1,3)");
  CHECK_THROWS_AS(check_case3(Partition({1, 1, 1}), 40), std::invalid_argument);
  CHECK_THROWS_AS(check_case3(Partition({2, 4}), 40), std::invalid_argument);
}

TEST_CASE("coalescence lemma") {
  // Longer pendent path rooted at a leaf dominates.
  const auto r = check_coalescence_lemma(make_path(3), 1, make_path(3), 0, make_path(4), 0, 30);
  CHECK(r.holds);
  CHECK_FALSE(r.vacuous);
  CHECK(r.strict_required);
  CHECK(r.first_strict_witness);
  REQUIRE(r.details.size() == 3);
  CHECK(r.details[2].name == "coalescence/conclusion");

  // Reversed roles fail a hypothesis, so the check is vacuous.
  const auto v = check_coalescence_lemma(make_path(3), 1, make_path(4), 0, make_path(3), 0, 30);
  CHECK(v.vacuous);
  CHECK(v.holds);
}

TEST_CASE("path difference") {
  const auto r = check_path_difference(make_path(3), 0, 1, 1, 10);
  CHECK(r.holds);
  CHECK(r.strict_required);
  CHECK(r.first_strict_witness == 6);

  // G is the path itself: no strict witness is demanded.
  const auto tight = check_path_difference(make_path(3), 0, 2, 1, 20);
  CHECK(tight.holds);
  CHECK_FALSE(tight.strict_required);
  CHECK_FALSE(tight.first_strict_witness);

  CHECK_THROWS_AS(check_path_difference(make_path(3), 0, 3, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(check_path_difference(make_path(3), 0, 0, 1, 10), std::invalid_argument);
}

TEST_CASE("corollaries") {
  const Graph p4 = make_path(4);
  const auto d = check_corollary(CorollaryShape::Disjoint, p4, 0, {{1, 1}, {2, 2}}, 30);
  CHECK(d.name == "corollary_disjoint");
  CHECK(d.holds);
  const auto s = check_corollary(CorollaryShape::Sequential, make_path(2), 0, {{1, 1}, {1, 1}}, 30);
  CHECK(s.name == "corollary_sequential");
  CHECK(s.holds);
  CHECK_THROWS_AS(check_corollary(CorollaryShape::Disjoint, p4, 0, {{4, 1}}, 30),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_corollary(CorollaryShape::Sequential, make_path(2), 0, {{2, 1}}, 30),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_corollary(CorollaryShape::Disjoint, p4, 0, {}, 30), std::invalid_argument);
}

TEST_CASE("identities") {
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      for (int pq = 2; pq <= 4; ++pq) CHECK(check_moment_canceling(a, b, pq, 30).holds);
    }
  }
  CHECK(check_factorization(2, 3, 3).holds);
  CHECK_THROWS_AS(check_moment_canceling(2, 2, 2, 10), std::invalid_argument);
}

TEST_CASE("Case II") {
  CHECK(case2_f(1, 2, 1, 1) == 2);
  CHECK(case2_f(1, 3, 1, 1) == 4);

  // (1,2,3): a = 1, b = 2, p = 1, q = 1 is the excluded case.
  const auto excluded = check_case2(1, 2, 1, 1, {}, 40);
  CHECK(excluded.holds);
  REQUIRE(excluded.details.size() == 2);
  CHECK(excluded.details[1].name == "case2/li_feng");
  CHECK(excluded.first_strict_witness);

  const auto r = check_case2(1, 3, 1, 1, {1}, 40);
  CHECK(r.holds);
  CHECK(r.strict_required);
  std::set<std::string> names;
  for (const auto& d : r.details) names.insert(d.name);
  CHECK(names == std::set<std::string>{"case2/center", "case2/total", "case2/bound_attached",
                                       "case2/bound_extended", "case2/composed"});
  CHECK(r.instance.find("S(1,1,3,4) < S(1,2,2,4)") != std::string::npos);
  CHECK_THROWS_AS(check_case2(2, 2, 1, 1, {}, 10), std::invalid_argument);
  CHECK_THROWS_AS(check_case2(1, 3, 1, 0, {}, 10), std::invalid_argument);
}

TEST_CASE("theorem sweep") {
  const auto consecutive = verify_theorem(7, 40, PairMode::Consecutive);
  const auto all = verify_theorem(7, 40, PairMode::All);
  check_all_hold(consecutive);
  check_all_hold(all);
  // Partitions of n - 1 with at least 3 parts: 1, 2, 4, 7 for n = 4..7.
  CHECK(consecutive.size() == 0 + 1 + 3 + 6);
  CHECK(all.size() == 0 + 1 + 6 + 21);
  for (const auto& r : all) {
    CHECK(r.name == "theorem");
    CHECK(r.first_strict_witness);
  }
  check_all_hold(check_all_walks_analogue(9, 40));
  CHECK(check_initial_chain(10, 40).holds);
  CHECK(check_initial_chain(10, 40).details.size() == 4);
}

TEST_CASE("suites hold and are deterministic across jobs") {
  const auto ineq = inequality_suite(40, 4);
  check_all_hold(ineq);
  std::set<std::string> families;
  for (const auto& r : ineq) families.insert(r.name);
  for (const char* f : {"li_feng", "case1", "case3", "case2", "coalescence", "path_difference",
                        "corollary_disjoint", "corollary_sequential"}) {
    CAPTURE(f);
    CHECK(families.count(f) == 1);
  }
  check_all_hold(identity_suite(40, 2));

  const auto q1 = run_suite(Suite::Quick, 9, 30, 1);
  const auto q4 = run_suite(Suite::Quick, 9, 30, 4);
  REQUIRE(q1.size() == q4.size());
  for (std::size_t i = 0; i < q1.size(); ++i) {
    CHECK(q1[i].instance == q4[i].instance);
    CHECK(q1[i].first_strict_witness == q4[i].first_strict_witness);
  }
  const SuiteSummary s = summarize(q1);
  CHECK(s.total == q1.size());
  CHECK(s.violations == 0);
  CHECK(s.holding == s.total);
}
