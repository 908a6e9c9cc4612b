#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "qpu/sieve.hpp"

using namespace qpu;

namespace {
std::set<int64_t> represented_set(const RepresentationSieve& s) {
  std::set<int64_t> out;
  for (int64_t n = 0; n <= s.bound(); ++n)
    if (s.test(n)) out.insert(n);
  return out;
}
}  // namespace

TEST_CASE("single-square sieve marks exactly the squares") {
  auto s = build_sieve(DiagonalForm({1}), 10);
  CHECK(represented_set(s) == std::set<int64_t>{0, 1, 4, 9});
}

TEST_CASE("three even squares miss exactly the doubled three-square gaps") {
  auto s = build_sieve(DiagonalForm({2, 2, 2}), 100);
  std::set<int64_t> missing_evens = {14, 30, 46, 56, 62, 78, 94};
  for (int64_t n = 0; n <= 100; ++n) {
    if (n % 2 == 1) {
      CHECK_FALSE(s.test(n));
    } else {
      CHECK(s.test(n) == (missing_evens.count(n) == 0));
    }
  }
}

TEST_CASE("sieve agrees with the direct representation test") {
  DiagonalForm f({2, 3, 4, 5});
  auto s = build_sieve(f, 500);
  for (int64_t n = 0; n <= 500; ++n)
    CHECK(s.test(n) == represents_direct(f, n).has_value());
}

TEST_CASE("thread count does not change the bits") {
  DiagonalForm f({2, 3, 5, 7});
  auto s1 = build_sieve(f, 20000, 1);
  auto s4 = build_sieve(f, 20000, 4);
  CHECK(s1.bits() == s4.bits());
}

TEST_CASE("sieve files round-trip byte for byte") {
  DiagonalForm f({1, 2, 5});
  auto s = build_sieve(f, 1234);
  const std::string path = "sieve_roundtrip.bin";
  write_sieve(s, path);
  int64_t bound = 0;
  auto bits = read_sieve_bits(path, bound);
  CHECK(bound == 1234);
  CHECK(bits == s.bits());

  write_sieve(RepresentationSieve(s.form(), bits), path + ".2");
  std::ifstream a(path, std::ios::binary), b(path + ".2", std::ios::binary);
  std::string ta((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string tb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(ta == tb);
  CHECK(ta.substr(0, 8) == "QPUSIEVE");
  std::remove(path.c_str());
  std::remove((path + ".2").c_str());
}

TEST_CASE("missed primes are exactly the clear prime bits") {
  auto s = build_sieve(DiagonalForm({2, 2, 2, 3}), 1000);
  auto missed = s.missed_primes();
  REQUIRE(!missed.empty());
  CHECK(missed.front() == 17);
}

TEST_CASE("family parsing and membership") {
  auto fam = parse_family("4^s(16t+14)");
  CHECK(fam.c == 4);
  CHECK(fam.m == 16);
  CHECK(fam.residues == std::vector<int64_t>{14});
  CHECK(fam.contains(14));
  CHECK(fam.contains(56));    // 4 * 14
  CHECK(fam.contains(224));   // 16 * 14
  CHECK_FALSE(fam.contains(28));
  CHECK_FALSE(fam.contains(7));
  CHECK(family_members(fam, 250) ==
        std::vector<int64_t>{14, 30, 46, 56, 62, 78, 94, 110, 120, 126, 142, 158,
                             174, 184, 190, 206, 222, 224, 238, 248});

  auto base_free = parse_family("8t+1");
  CHECK(base_free.contains(1));
  CHECK(base_free.contains(9));
  CHECK(base_free.contains(17));
  CHECK_FALSE(base_free.contains(3));
  CHECK_FALSE(base_free.contains(8));

  CHECK_THROWS_AS(parse_family("4^s(16t+)"), Error);
}

TEST_CASE("exclusion checking accepts a correct complement") {
  auto fam = parse_family("4^s(16t+14)");
  auto report = verify_excluded(DiagonalForm({2, 2, 2}), {fam},
                                ValueConstraint::Even, 5000);
  CHECK(report.ok());
}

TEST_CASE("exclusion checking rejects a wrong complement") {
  // stated complement pair for 2x^2+3y^2+6z^2; the second family is too wide
  auto f1 = parse_family("4^s(8t+7)");
  auto f2 = parse_family("9^s(3t+1)");
  auto report = verify_excluded(DiagonalForm({2, 3, 6}), {f1, f2},
                                ValueConstraint::All, 1000);
  CHECK_FALSE(report.ok());
  // 9 = 3 + 6 is represented yet lies in 9^s(3t+1)
  bool has9 = false;
  for (int64_t n : report.mismatches) has9 = has9 || (n == 9);
  CHECK(has9);

  // the true complement: residue 1 mod 3, union 4^s(8t+7)
  auto exact = verify_excluded(DiagonalForm({2, 3, 6}),
                               {parse_family("3t+1"), f1},
                               ValueConstraint::All, 20000);
  CHECK(exact.ok());
}

TEST_CASE("pinned missed-prime sets for two quaternary forms") {
  CHECK(build_sieve(DiagonalForm({2, 3, 7, 21}), 100000).missed_primes() ==
        std::vector<int64_t>{13, 17, 43, 47});
  CHECK(build_sieve(DiagonalForm({2, 3, 10, 21}), 100000).missed_primes() ==
        std::vector<int64_t>{7, 17, 19, 47});
}

TEST_CASE("random forms: sieve equals direct test") {
  std::mt19937 rng(987654);
  for (int trial = 0; trial < 12; ++trial) {
    int rank = 1 + (int)(rng() % 4);
    std::vector<int64_t> coeffs;
    for (int i = 0; i < rank; ++i) coeffs.push_back(1 + (int64_t)(rng() % 15));
    DiagonalForm f(coeffs);
    auto s = build_sieve(f, 300);
    for (int64_t n = 0; n <= 300; ++n)
      CHECK(s.test(n) == represents_direct(f, n).has_value());
  }
}
