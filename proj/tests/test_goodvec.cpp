#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "qpu/goodvec.hpp"

using namespace qpu;

namespace {
GramForm diag(std::vector<int64_t> c) { return GramForm(DiagonalForm(std::move(c))); }
}  // namespace

TEST_CASE("all integer representations of small values") {
  auto sols = all_representations(diag({1, 1, 2}), 4);
  // (+-2,0,0), (0,+-2,0), (+-1,+-1,+-1)
  CHECK(sols.size() == 12);
  for (const auto& v : sols)
    CHECK(evaluate(DiagonalForm({1, 1, 2}), v) == 4);
  CHECK(std::is_sorted(sols.begin(), sols.end()));

  CHECK(all_representations(diag({1, 1, 1}), 7).empty());
  CHECK(all_representations(diag({2, 3, 5}), 0).size() == 1);  // origin only
}

TEST_CASE("residue vectors at d=2 match the hand enumeration") {
  auto r = residue_vectors(diag({2, 3, 5}), 2, 0);
  std::set<Vec3> got(r.begin(), r.end());
  std::set<Vec3> want = {{0, 0, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 1}};
  CHECK(got == want);
}

TEST_CASE("residue vectors at d=1 collapse to the single class") {
  auto r = residue_vectors(diag({2, 3, 7}), 1, 0);
  REQUIRE(r.size() == 1);
  CHECK(r[0] == Vec3{0, 0, 0});
}

TEST_CASE("residue classes partition the full cube") {
  for (auto [coeffs, d] : std::vector<std::pair<std::vector<int64_t>, int64_t>>{
           {{2, 3, 5}, 7}, {{2, 3, 5}, 2}, {{1, 3, 14}, 8}}) {
    int64_t total = 0;
    for (int64_t a = 0; a < d; ++a)
      total += (int64_t)residue_vectors(diag(coeffs), d, a).size();
    CHECK(total == d * d * d);
  }
}

TEST_CASE("transfer matrices exist and are closed under negation") {
  auto ts = transfer_matrices(diag({2, 3, 5}), diag({1, 1, 30}), 7);
  CHECK(!ts.empty());
  std::set<Mat3> pool(ts.begin(), ts.end());
  for (const auto& t : ts) {
    Mat3 neg;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) neg[i][j] = ((-t[i][j]) % 7 + 7) % 7;
    CHECK(pool.count(neg) == 1);
  }
}

TEST_CASE("transfer scale above the supported modulus is rejected") {
  CHECK_THROWS_AS(transfer_matrices(diag({2, 3, 5}), diag({1, 1, 30}), 65), Error);
}

TEST_CASE("asserted transfer relations hold") {
  for (int64_t a : {0, 3, 5, 6})
    CHECK(precedes(diag({1, 1, 30}), diag({2, 3, 5}), 7, a));
  GramForm mate14(std::vector<std::vector<int64_t>>{{1, 0, 0}, {0, 10, 4}, {0, 4, 10}});
  CHECK(precedes(mate14, diag({2, 3, 14}), 8, 3));
}

TEST_CASE("per-coset certificates agree with the mask-based relation test") {
  GramForm mate14(std::vector<std::vector<int64_t>>{{1, 0, 0}, {0, 10, 4}, {0, 4, 10}});
  for (auto [target, source, d] :
       std::vector<std::tuple<GramForm, GramForm, int64_t>>{
           {diag({2, 3, 5}), diag({1, 1, 30}), 7},
           {diag({2, 3, 14}), mate14, 8}}) {
    for (int64_t a = 0; a < d; ++a) {
      auto cert = good_vectors(target, source, d, a);
      CHECK(cert.relation() == precedes(source, target, d, a));
      CHECK((int64_t)cert.cosets.size() == cert.total_count);
      for (const auto& w : cert.cosets) {
        if (!w.good) continue;
        // T * coset = 0 (mod d) and T is a genuine scaling transfer
        for (int i = 0; i < 3; ++i) {
          int64_t s = 0;
          for (int j = 0; j < 3; ++j) s += w.witness[i][j] * w.coset[j];
          CHECK(s % d == 0);
        }
      }
    }
  }
}

TEST_CASE("exhaustive transfer check is clean on an asserted relation") {
  auto report = verify_transfer(diag({1, 1, 30}), diag({2, 3, 5}), 7, {0, 3, 5, 6}, 2000);
  CHECK(report.ok());
  CHECK(report.checked > 0);
}

TEST_CASE("exhaustive transfer check catches a false relation") {
  // 1 = 1 (mod 7) is represented by x^2+y^2+30z^2 but not by 2x^2+3y^2+5z^2
  auto report = verify_transfer(diag({1, 1, 30}), diag({2, 3, 5}), 7, {1}, 2000);
  CHECK_FALSE(report.ok());
}

TEST_CASE("good residue sets respect genus structure") {
  GenusData genus;
  genus.rep = DiagonalForm({2, 3, 5});
  genus.mates = {diag({1, 1, 30})};
  auto r7 = good_residue_set(genus, 7);
  for (int64_t a : {0, 3, 5, 6}) CHECK(r7.count(a) == 1);
  // d=1 would need a genuine isometry from the mate into the representative;
  // none exists here (2x^2+3y^2+5z^2 never takes the value 1), so no residue
  // class transfers.
  auto r1 = good_residue_set(genus, 1);
  CHECK(r1.empty());
}
