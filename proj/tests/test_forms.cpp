#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <variant>

#include "qpu/forms.hpp"
#include "qpu/sieve.hpp"

using namespace qpu;

TEST_CASE("diagonal forms canonicalize to sorted coefficients") {
  DiagonalForm f({5, 2, 3});
  CHECK(f.str() == "2,3,5");
  CHECK(f.rank() == 3);
  CHECK(f.min_coeff() == 2);
  CHECK(f == DiagonalForm({2, 3, 5}));
  CHECK(DiagonalForm({2, 2, 3}) < DiagonalForm({2, 3, 3}));
  CHECK(DiagonalForm({9}) < DiagonalForm({1, 1}));  // rank before lex
}

TEST_CASE("nonpositive coefficients are rejected") {
  CHECK_THROWS_AS(DiagonalForm({2, 0, 3}), Error);
  CHECK_THROWS_AS(DiagonalForm({-1}), Error);
}

TEST_CASE("evaluation matches hand computation") {
  CHECK(evaluate(DiagonalForm({2, 2, 3}), {1, 1, 2}) == 16);
  CHECK(evaluate(DiagonalForm({1, 1, 30}), {2, 1, 1}) == 35);
  GramForm g(std::vector<std::vector<int64_t>>{{2, 1}, {1, 3}});
  CHECK(evaluate(g, {1, 1}) == 7);  // 2 + 3 + 2*1*1*1
  CHECK(evaluate(g, {1, -1}) == 3);
}

TEST_CASE("gram matrices validate symmetry and positivity") {
  CHECK_THROWS_AS(GramForm(std::vector<std::vector<int64_t>>{{1, 2}, {3, 1}}), Error);
  CHECK_THROWS_AS(GramForm(std::vector<std::vector<int64_t>>{{1, 2}, {2, 1}}), Error);
  GramForm ok(std::vector<std::vector<int64_t>>{{1, 0, 0}, {0, 10, 4}, {0, 4, 10}});
  CHECK(ok.determinant() == 84);
  CHECK_FALSE(ok.is_diagonal());
}

TEST_CASE("diagonal gram round trip") {
  GramForm g(DiagonalForm({2, 3, 7}));
  CHECK(g.is_diagonal());
  CHECK(g.diagonal() == std::vector<int64_t>{2, 3, 7});
  CHECK(g.determinant() == 42);
}

TEST_CASE("form parsing accepts both syntaxes") {
  auto d = parse_form("2,3,5");
  REQUIRE(std::holds_alternative<DiagonalForm>(d));
  CHECK(std::get<DiagonalForm>(d).str() == "2,3,5");

  auto m = parse_form("[[1,0,0],[0,10,4],[0,4,10]]");
  REQUIRE(std::holds_alternative<GramForm>(m));
  CHECK(std::get<GramForm>(m).determinant() == 84);

  CHECK_THROWS_AS(parse_form(""), Error);
  CHECK_THROWS_AS(parse_form("2,,3"), Error);
  CHECK_THROWS_AS(parse_form("[[1,2],[2,1]"), Error);
}

TEST_CASE("sub-multisets enumerate every proper nonempty deletion") {
  auto subs = sub_multisets(DiagonalForm({1, 2, 3}));
  REQUIRE(subs.size() == 6);
  CHECK(subs[0].str() == "1");
  CHECK(subs[1].str() == "2");
  CHECK(subs[2].str() == "3");
  CHECK(subs[3].str() == "1,2");
  CHECK(subs[4].str() == "1,3");
  CHECK(subs[5].str() == "2,3");

  auto rep = sub_multisets(DiagonalForm({2, 2, 3}));
  REQUIRE(rep.size() == 4);  // 2; 3; 2,2; 2,3
  CHECK(rep[0].str() == "2");
  CHECK(rep[1].str() == "3");
  CHECK(rep[2].str() == "2,2");
  CHECK(rep[3].str() == "2,3");
}

TEST_CASE("exact representation tests with witnesses") {
  auto hit = represents_direct(DiagonalForm({1, 1}), 2);
  REQUIRE(hit.has_value());
  CHECK(evaluate(DiagonalForm({1, 1}), hit->witness) == 2);
  CHECK_FALSE(represents_direct(DiagonalForm({1, 1}), 3).has_value());
  CHECK_FALSE(represents_direct(DiagonalForm({1, 2}), 7).has_value());

  GramForm mate(std::vector<std::vector<int64_t>>{{1, 0, 0}, {0, 10, 4}, {0, 4, 10}});
  auto h2 = represents_direct(mate, 10);
  REQUIRE(h2.has_value());
  CHECK(evaluate(mate, h2->witness) == 10);
}
