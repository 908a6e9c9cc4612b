#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "qpu/prooflib.hpp"

using namespace qpu;

namespace {
const char* kDemoScript = R"(script demo
target 1,1,1,1
g 1,1,1
b0 3
exceptions none
mod 8
sub 1*d^2
d 0 : 1,3,5
d 1 : rest
guard family 4^s(8t+7)
end
)";
}  // namespace

TEST_CASE("script parsing fills every field") {
  auto scripts = parse_scripts_text(kDemoScript, "inline");
  REQUIRE(scripts.size() == 1);
  const auto& s = scripts[0];
  CHECK(s.name == "demo");
  CHECK(s.target.str() == "1,1,1,1");
  CHECK(s.g.str() == "1,1,1");
  CHECK(s.b0 == 3);
  CHECK(s.exceptions.empty());
  CHECK(s.mod == 8);
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].lead == 1);
  CHECK(s.terms[0].square_part == 1);
  CHECK(s.terms[0].var == 'd');
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0].assign == std::vector<int64_t>{0});
  CHECK(s.rows[0].residues == std::vector<int64_t>{1, 3, 5});
  CHECK_FALSE(s.rows[0].rest);
  CHECK(s.rows[1].rest);
  REQUIRE(s.guards.size() == 1);
  CHECK(s.guards[0].kind == Guard::Kind::Family);
}

TEST_CASE("malformed scripts are rejected") {
  // directive outside a block
  CHECK_THROWS_AS(parse_scripts_text("target 1,1,1\n", "inline"), Error);
  // nested blocks
  CHECK_THROWS_AS(parse_scripts_text("script x\nscript y\nend\n", "inline"), Error);
  // unterminated block
  CHECK_THROWS_AS(parse_scripts_text("script x\ntarget 1,1\n", "inline"), Error);
  // unknown directive
  CHECK_THROWS_AS(parse_scripts_text("script x\ntarget 1\nbogus line\nend\n", "inline"),
                  Error);
  // an empty block parses but cannot verify
  auto empties = parse_scripts_text("script x\nend\n", "inline");
  REQUIRE(empties.size() == 1);
  SieveCache cache;
  CHECK_FALSE(verify_proof_script(empties[0], 100, cache).ok);
}

TEST_CASE("a correct case-analysis script verifies end to end") {
  auto scripts = parse_scripts_text(kDemoScript, "inline");
  SieveCache cache;
  auto report = verify_proof_script(scripts[0], 100000, cache);
  CHECK(report.ok);
  CHECK(report.failures.empty());
  CHECK(report.primes_checked > 9000);  // primes in [3, 100000]
  CHECK(report.table.at(1) == std::vector<int64_t>{0});
  CHECK(report.table.at(7) == std::vector<int64_t>{1});
}

TEST_CASE("a derived table reproduces the explicit one") {
  const char* text = R"(script demo-derived
target 1,1,1,1
g 1,1,1
b0 3
exceptions none
mod 8
sub 1*d^2
derive d in 0..1
guard family 4^s(8t+7)
end
)";
  auto scripts = parse_scripts_text(text, "inline");
  SieveCache cache;
  auto report = verify_proof_script(scripts[0], 100000, cache);
  CHECK(report.ok);
  CHECK(report.table.at(1) == std::vector<int64_t>{0});
  CHECK(report.table.at(3) == std::vector<int64_t>{0});
  CHECK(report.table.at(5) == std::vector<int64_t>{0});
  CHECK(report.table.at(7) == std::vector<int64_t>{1});
}

TEST_CASE("an unsafe row is caught before any sieve check") {
  const char* text = R"(script demo-broken
target 1,1,1,1
g 1,1,1
b0 3
exceptions none
mod 8
sub 1*d^2
d 0 : 1,3,5,7
guard family 4^s(8t+7)
end
)";
  auto scripts = parse_scripts_text(text, "inline");
  SieveCache cache;
  auto report = verify_proof_script(scripts[0], 10000, cache);
  CHECK_FALSE(report.ok);
  CHECK(!report.failures.empty());
}

TEST_CASE("a represented exception is reported") {
  const char* text = R"(script demo-exc
target 1,1,1,1
g 1,1,1
b0 11
exceptions 7
mod 8
sub 1*d^2
d 0 : 1,3,5
d 1 : rest
guard family 4^s(8t+7)
end
)";
  auto scripts = parse_scripts_text(text, "inline");
  SieveCache cache;
  auto report = verify_proof_script(scripts[0], 10000, cache);
  CHECK_FALSE(report.ok);  // 7 = 4+1+1+1 is represented, so it is no exception
}

TEST_CASE("class and family intersection is exact over all scale levels") {
  auto fam = parse_family("4^s(16t+14)");
  CHECK(class_intersects_family(14, 64, fam));
  CHECK(class_intersects_family(30, 64, fam));
  CHECK(class_intersects_family(56, 64, fam));  // 4*(16t+14) = 64t+56
  CHECK_FALSE(class_intersects_family(1, 64, fam));
  CHECK_FALSE(class_intersects_family(16, 32, fam));

  auto odd_fam = parse_family("4^s(8t+7)");
  CHECK_FALSE(class_intersects_family(2, 4, odd_fam));
  CHECK(class_intersects_family(7, 8, odd_fam));
  CHECK(class_intersects_family(4, 8, odd_fam));  // 4*(8t+7) = 32t+28 = 4 (mod 8)
  CHECK_FALSE(class_intersects_family(6, 8, odd_fam));
}

TEST_CASE("class safety under each guard kind") {
  Guard even;
  even.kind = Guard::Kind::Even;
  CHECK(class_safe(2, 4, {even}));
  CHECK_FALSE(class_safe(3, 4, {even}));

  Guard mod_in;
  mod_in.kind = Guard::Kind::ModIn;
  mod_in.m = 3;
  mod_in.residues = {1, 2};
  CHECK(class_safe(1, 24, {mod_in}));   // 1, 25, 49, ... all = 1 (mod 3)
  CHECK_FALSE(class_safe(3, 24, {mod_in}));
  CHECK_FALSE(class_safe(1, 8, {mod_in}));  // class mixes residues mod 3

  Guard mod_not;
  mod_not.kind = Guard::Kind::ModNotIn;
  mod_not.m = 32;
  mod_not.residues = {0, 6, 22, 24};
  CHECK(class_safe(5, 32, {mod_not}));
  CHECK_FALSE(class_safe(6, 32, {mod_not}));

  Guard coprime;
  coprime.kind = Guard::Kind::Coprime;
  coprime.k = 35;
  CHECK(class_safe(3, 35, {coprime}));
  CHECK_FALSE(class_safe(5, 35, {coprime}));
}

TEST_CASE("sieve cache reuses and grows") {
  SieveCache cache;
  const auto& s1 = cache.get(DiagonalForm({1}), 100);
  CHECK(s1.bound() >= 100);
  CHECK(s1.test(49));
  CHECK_FALSE(s1.test(50));
  const auto& s2 = cache.get(DiagonalForm({1}), 50);
  CHECK(s2.bound() >= 50);
  const auto& s3 = cache.get(DiagonalForm({1}), 200);
  CHECK(s3.bound() >= 200);
  CHECK(s3.test(196));
}

TEST_CASE("genus table and mate transfer files parse and verify") {
  {
    std::ofstream out("genus_demo.txt");
    out << "genus 2,3,4\nclass 2\nmate 1,2,12\nfamily 4^s(16t+10)\nconstraint even\nend\n";
  }
  auto table = load_genus_table("genus_demo.txt");
  REQUIRE(table.count("2,3,4") == 1);
  const auto& rec = table.at("2,3,4");
  CHECK(rec.declared_class == 2);
  CHECK(rec.genus.class_number() == 2);
  REQUIRE(rec.families.size() == 1);
  CHECK(rec.families[0].str() == "4^s(16t+10)");
  CHECK(rec.constraint == ValueConstraint::Even);
  CHECK_FALSE(rec.inferred);
  std::remove("genus_demo.txt");

  {
    std::ofstream out("mates_demo.txt");
    out << "transfer g 2,3,4 mate 1,2,12 mod 2 in 0\n";
  }
  auto transfers = load_mate_transfers("mates_demo.txt");
  REQUIRE(transfers.size() == 1);
  CHECK(transfers[0].g.str() == "2,3,4");
  CHECK(transfers[0].mod == 2);
  CHECK(transfers[0].residues == std::vector<int64_t>{0});
  auto report = verify_mate_transfer(transfers[0], 2000);
  CHECK(report.ok());
  std::remove("mates_demo.txt");
}
