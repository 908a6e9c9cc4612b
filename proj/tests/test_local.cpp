#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpu/local.hpp"
#include "qpu/sieve.hpp"

using namespace qpu;

TEST_CASE("three squares: 2-adic obstruction at 4^s(8t+7)") {
  GramForm f(DiagonalForm({1, 1, 1}));
  CHECK_FALSE(local_represents(f, 7, 2));
  CHECK_FALSE(local_represents(f, 15, 2));
  CHECK_FALSE(local_represents(f, 28, 2));  // 4 * 7
  CHECK(local_represents(f, 6, 2));
  CHECK(local_represents(f, 8, 2));
  CHECK(local_represents(f, 7, 3));  // odd places are unobstructed here
  CHECK(local_represents(f, 7, 5));
}

TEST_CASE("two squares: odd anisotropic place forces even valuation") {
  GramForm f(DiagonalForm({1, 1}));
  CHECK_FALSE(local_represents(f, 3, 3));
  CHECK(local_represents(f, 9, 3));  // 9 = 9 * unit, even valuation
  CHECK_FALSE(local_represents(f, 3, 2));  // x^2+y^2 is 0,1,2 mod 4
  CHECK(local_represents(f, 2, 2));
  CHECK(local_represents(f, 5, 5));
}

TEST_CASE("global representation implies local representation everywhere") {
  DiagonalForm f({2, 3, 4, 5});
  GramForm g(f);
  auto s = build_sieve(f, 300);
  for (int64_t n = 0; n <= 300; ++n) {
    if (!s.test(n)) continue;
    for (int64_t p : {2, 3, 5, 7, 11}) CHECK(local_represents(g, n, p));
    CHECK(locally_represented_everywhere(g, n));
  }
}

TEST_CASE("local cache agrees with the direct local solver") {
  GramForm g(DiagonalForm({2, 3, 6}));
  LocalCache cache(g);
  for (int64_t p : {2, 3})
    for (int64_t n = 0; n <= 500; ++n)
      CHECK(cache.represents(n, p) == local_represents(g, n, p));
}

TEST_CASE("class number one: local everywhere equals globally represented") {
  DiagonalForm f({2, 2, 3});
  GramForm g(f);
  auto s = build_sieve(f, 2000);
  for (int64_t n = 0; n <= 2000; ++n)
    CHECK(s.test(n) == locally_represented_everywhere(g, n));
}

TEST_CASE("a genus with two classes covers what one class misses") {
  GenusData genus;
  genus.rep = DiagonalForm({2, 3, 4});
  genus.mates = {GramForm(DiagonalForm({1, 2, 12}))};
  CHECK(genus.class_number() == 2);
  // 1 is represented by the mate but not by the representative
  CHECK_FALSE(represents_direct(DiagonalForm({2, 3, 4}), 1).has_value());
  CHECK(genus_represents(genus, 1));
  // representation by either class is locally sound, and on even values the
  // genus realizes exactly the complement of one square-scaled family
  auto s_rep = build_sieve(DiagonalForm({2, 3, 4}), 800);
  auto s_mate = build_sieve(DiagonalForm({1, 2, 12}), 800);
  GramForm g(DiagonalForm({2, 3, 4}));
  auto fam = parse_family("4^s(16t+10)");
  for (int64_t n = 0; n <= 800; ++n) {
    bool genus_hit = s_rep.test(n) || s_mate.test(n);
    if (genus_hit) CHECK(locally_represented_everywhere(g, n));
    if (n % 2 == 0) CHECK(genus_hit == !fam.contains(n));
  }
}
