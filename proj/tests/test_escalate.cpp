#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qpu/data.hpp"
#include "qpu/escalate.hpp"

using namespace qpu;

TEST_CASE("criterion check and truants on pinned forms") {
  CHECK(criterion_check(DiagonalForm({1, 1, 2})));
  CHECK(criterion_check(DiagonalForm({2, 3, 4, 5})));
  CHECK_FALSE(criterion_check(DiagonalForm({2, 2, 2, 3})));

  CHECK(prime_truant(DiagonalForm({1})) == 2);
  CHECK(prime_truant(DiagonalForm({1, 1})) == 3);
  CHECK(prime_truant(DiagonalForm({1, 2})) == 5);
  CHECK_FALSE(prime_truant(DiagonalForm({1, 1, 2})).has_value());
  CHECK(is_prime_universal(DiagonalForm({1, 2, 5})));
}

TEST_CASE("sieve-backed truant search agrees with the criterion shortcut") {
  CHECK(prime_truant(DiagonalForm({2, 2, 2, 3}), 1000) == 17);
  CHECK(prime_truant(DiagonalForm({2, 2, 3, 17}), 100000) == 41);
  CHECK_FALSE(prime_truant(DiagonalForm({1, 1, 2}), 10000).has_value());
}

TEST_CASE("universality verdicts never contradict the audit") {
  auto good = universality_verdict(DiagonalForm({2, 3, 4, 5}), 10000);
  CHECK(good.criterion);
  CHECK(good.missed_criterion.empty());
  CHECK_FALSE(good.audit_miss.has_value());
  CHECK_FALSE(good.contradiction());

  auto bad = universality_verdict(DiagonalForm({2, 2, 2, 3}), 1000);
  CHECK_FALSE(bad.criterion);
  REQUIRE(!bad.missed_criterion.empty());
  CHECK(bad.missed_criterion.front() == 17);
  CHECK(bad.audit_miss == 17);
  CHECK_FALSE(bad.contradiction());
}

TEST_CASE("properness distinguishes minimal universal forms") {
  CHECK(is_proper(DiagonalForm({1, 1, 2})));
  CHECK_FALSE(is_proper(DiagonalForm({1, 1, 2, 5})));
  CHECK(is_proper(DiagonalForm({2, 3, 4, 5})));
  CHECK_THROWS_AS(is_proper(DiagonalForm({1})), Error);  // not universal
}

TEST_CASE("repetition resolution on pinned examples") {
  auto r1 = resolve_repetition(DiagonalForm({2, 3, 6, 7}), 19, 23);
  CHECK_FALSE(r1.k_found.has_value());
  CHECK(r1.b_raw == std::vector<int64_t>{20, 21, 23});
  CHECK(r1.b_allowed == std::vector<int64_t>{20});

  auto r2 = resolve_repetition(DiagonalForm({2, 2, 3}), 8, 17);
  CHECK_FALSE(r2.k_found.has_value());
  CHECK(r2.b_allowed == std::vector<int64_t>{17});

  auto r3 = resolve_repetition(DiagonalForm({4, 5}), 1, 2);
  CHECK(r3.k_found == 2);
}

TEST_CASE("escalation to rank 3 finds exactly the five proper ternaries") {
  auto tree = escalate_tree(3);
  CHECK(tree.proper(1).empty());
  CHECK(tree.proper(2).empty());
  auto p3 = tree.proper(3);
  std::vector<DiagonalForm> want = {DiagonalForm({1, 1, 2}), DiagonalForm({1, 1, 3}),
                                    DiagonalForm({1, 2, 3}), DiagonalForm({1, 2, 4}),
                                    DiagonalForm({1, 2, 5})};
  CHECK(p3 == want);
  CHECK(!tree.unresolved(3).empty());
}

TEST_CASE("tree nodes know their parents and statuses") {
  auto tree = escalate_tree(2);
  REQUIRE(!tree.nodes.empty());
  CHECK(tree.nodes[0].coeffs.empty());
  for (size_t i = 1; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    REQUIRE(n.parent >= 0);
    CHECK(n.coeffs.size() == tree.nodes[n.parent].coeffs.size() + 1);
    // child coefficient ranges: last parent coefficient up to parent truant
    const auto& parent = tree.nodes[n.parent];
    if (!parent.coeffs.empty()) CHECK(n.coeffs.back() >= parent.coeffs.back());
    REQUIRE(parent.truant.has_value());
    CHECK(n.coeffs.back() <= *parent.truant);
  }
  CHECK(status_name(NodeStatus::ProperLeaf) == "proper-leaf");
  CHECK(status_name(NodeStatus::TruantStuck) != status_name(NodeStatus::TruantAdvanced));
}

TEST_CASE("tree audit finds no criterion mismatch at small scale") {
  auto tree = escalate_tree(3);
  auto audit = audit_tree(tree, 2000);
  CHECK(audit.ok());
  CHECK(audit.nodes_checked > 0);
}

TEST_CASE("bundled tables are internally consistent") {
  CHECK(candidate_quaternaries().size() == 27);
  for (const auto& f : candidate_quaternaries()) CHECK(f.rank() == 4);

  CHECK(rank4_frontier().size() == 30);
  std::set<std::string> frontier;
  for (const auto& f : rank4_frontier()) frontier.insert(f.str());
  CHECK(frontier.size() == 30);

  auto higher = proper_rank5_6();
  int r5 = 0, r6 = 0;
  for (const auto& f : higher) {
    if (f.rank() == 5) ++r5;
    if (f.rank() == 6) ++r6;
    // every depth-4 prefix of a higher-rank proper form is a frontier form
    std::vector<int64_t> prefix(f.coeffs().begin(), f.coeffs().begin() + 4);
    CHECK(frontier.count(DiagonalForm(prefix).str()) == 1);
  }
  CHECK(r5 == 128);
  CHECK(r6 == 46);

  CHECK(single_exception_rows().size() == 19);
  CHECK(frontier_truants().size() == 11);
  CHECK(minimality_witnesses().size() == 10);
  CHECK(kGoodResidues30.size() == 16);
  CHECK(kGoodResidues42.size() == 18);
}
