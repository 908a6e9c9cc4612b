#include "qpu/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "qpu/data.hpp"
#include "qpu/escalate.hpp"
#include "qpu/goodvec.hpp"
#include "qpu/local.hpp"
#include "qpu/primes.hpp"
#include "qpu/prooflib.hpp"
#include "qpu/sieve.hpp"

namespace qpu {

namespace {

constexpr int64_t kAuditBound = 100000;
constexpr int64_t kTransferBound = 10000;
constexpr int64_t kScriptBound = 1000000;
constexpr size_t kExpectedScriptCount = 52;

std::string join(const std::vector<int64_t>& xs) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ",";
    os << xs[i];
  }
  return os.str();
}

struct Ctx {
  VerifyOptions opts;
  std::string dir;
};

// The relations asserted alongside the bundled genus table: the mate at the
// given index transfers into the representative on these residues mod d.
struct Relation {
  std::string rep;  // genus key
  size_t mate = 0;
  int64_t d = 0;
  std::vector<int64_t> residues;
};

std::vector<Relation> asserted_relations() {
  return {
      {"2,3,5", 0, 7, {0, 3, 5, 6}},
      {"2,3,14", 0, 8, {3}},
      {"2,3,14", 0, 32, {12, 16}},
      {"2,3,7", 0, 3, {0}},
      {"2,3,7", 1, 3, {0}},
  };
}

std::vector<int64_t> missed_to(const DiagonalForm& f, int64_t bound, int threads) {
  return build_sieve(f, bound, threads).missed_primes();
}

void criterion_1(CriterionResult& r, const Ctx& ctx) {
  r.name = "candidate quaternaries pass the criterion and a full prime audit";
  const auto forms = candidate_quaternaries();
  int checked = 0;
  for (const auto& f : forms) {
    if (!criterion_check(f)) {
      r.details.push_back(f.str() + ": fails the criterion-prime check");
      continue;
    }
    const auto missed = missed_to(f, kAuditBound, ctx.opts.threads);
    if (!missed.empty())
      r.details.push_back(f.str() + ": misses prime " + std::to_string(missed.front()));
    ++checked;
  }
  r.pass = r.details.empty() && forms.size() == 27;
  if (forms.size() != 27)
    r.details.push_back("expected 27 candidate forms, have " + std::to_string(forms.size()));
  if (r.pass)
    r.details.push_back("27 forms verified to " + std::to_string(kAuditBound));
}

void criterion_2(CriterionResult& r, const Ctx& ctx) {
  r.name = "smallest missed primes of the frontier forms match the bundled values";
  const auto rows = frontier_truants();
  for (const auto& [f, expected] : rows) {
    const auto missed = missed_to(f, kAuditBound, ctx.opts.threads);
    if (missed.empty()) {
      r.details.push_back(f.str() + ": no missed prime found");
    } else if (missed.front() != expected) {
      r.details.push_back(f.str() + ": smallest missed prime " +
                          std::to_string(missed.front()) + ", bundled value " +
                          std::to_string(expected));
    }
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back(std::to_string(rows.size()) + " truants reproduced exactly");
}

void check_exact_exceptions(CriterionResult& r, const Ctx& ctx, const DiagonalForm& f,
                            const std::vector<int64_t>& expected) {
  auto missed = missed_to(f, kAuditBound, ctx.opts.threads);
  if (missed != expected)
    r.details.push_back(f.str() + ": expected missed set {" + join(expected) +
                        "}, sieve finds {" + join(missed) + "}");
}

void criterion_3(CriterionResult& r, const Ctx& ctx) {
  r.name = "exception table rows miss exactly the bundled primes";
  for (const auto& row : single_exception_rows())
    check_exact_exceptions(r, ctx, row.form, {row.exception});
  for (const auto& row : multi_exception_rows()) {
    if (row.form.str() == "2,3,6,7") continue;  // audited separately
    check_exact_exceptions(r, ctx, row.form, row.exceptions);
  }
  r.pass = r.details.empty();
  if (r.pass) r.details.push_back("all exception rows reproduced exactly");
}

void criterion_4(CriterionResult& r, const Ctx& ctx) {
  r.name = "the three-exception quaternary misses exactly its bundled primes";
  bool found = false;
  for (const auto& row : multi_exception_rows()) {
    if (row.form.str() != "2,3,6,7") continue;
    found = true;
    check_exact_exceptions(r, ctx, row.form, row.exceptions);
  }
  if (!found) r.details.push_back("bundled tables lack the 2,3,6,7 row");
  r.pass = r.details.empty();
  if (r.pass) r.details.push_back("2,3,6,7 misses exactly {23,47,67}");
}

void criterion_5(CriterionResult& r, const Ctx& ctx) {
  r.name = "asserted transfer relations hold and the good-residue sets match";
  const auto table = load_genus_table(ctx.dir + "/genus_table.txt");
  for (const auto& rel : asserted_relations()) {
    auto it = table.find(rel.rep);
    if (it == table.end()) {
      r.details.push_back("genus table lacks " + rel.rep);
      continue;
    }
    const auto& genus = it->second.genus;
    if (rel.mate >= genus.mates.size()) {
      r.details.push_back(rel.rep + ": mate " + std::to_string(rel.mate) + " missing");
      continue;
    }
    GramForm target(genus.rep);
    for (int64_t a : rel.residues) {
      if (!precedes(genus.mates[rel.mate], target, rel.d, a))
        r.details.push_back(rel.rep + ": mate " + std::to_string(rel.mate) +
                            " does not transfer at (" + std::to_string(rel.d) + "," +
                            std::to_string(a) + ")");
    }
  }
  auto it = table.find("2,3,7");
  if (it == table.end()) {
    r.details.push_back("genus table lacks 2,3,7");
  } else {
    const auto got30 = good_residue_set(it->second.genus, 30);
    if (got30 != kGoodResidues30)
      r.details.push_back("good residues mod 30 differ: computed {" +
                          join({got30.begin(), got30.end()}) + "}");
    const auto got42 = good_residue_set(it->second.genus, 42);
    if (got42 != kGoodResidues42)
      r.details.push_back("good residues mod 42 differ: computed {" +
                          join({got42.begin(), got42.end()}) + "}");
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back("all asserted relations verified; residue sets match");
}

void criterion_6(CriterionResult& r, const Ctx& ctx) {
  r.name = "every verified transfer relation is sound on an integer range";
  const auto table = load_genus_table(ctx.dir + "/genus_table.txt");
  auto run = [&](const GramForm& mate, const DiagonalForm& rep, int64_t d,
                 const std::vector<int64_t>& residues) {
    const auto report = verify_transfer(mate, GramForm(rep), d, residues, kTransferBound);
    if (!report.ok())
      r.details.push_back(rep.str() + " (d=" + std::to_string(d) + "): " +
                          std::to_string(report.mismatches.size()) +
                          " transfer mismatches, first " +
                          std::to_string(report.mismatches.front()));
  };
  for (const auto& rel : asserted_relations()) {
    auto it = table.find(rel.rep);
    if (it == table.end()) {
      r.details.push_back("genus table lacks " + rel.rep);
      continue;
    }
    if (rel.mate >= it->second.genus.mates.size()) continue;
    run(it->second.genus.mates[rel.mate], it->second.genus.rep, rel.d, rel.residues);
  }
  auto it = table.find("2,3,7");
  if (it != table.end()) {
    const std::vector<int64_t> r30(kGoodResidues30.begin(), kGoodResidues30.end());
    const std::vector<int64_t> r42(kGoodResidues42.begin(), kGoodResidues42.end());
    for (const auto& mate : it->second.genus.mates) {
      run(mate, it->second.genus.rep, 30, r30);
      run(mate, it->second.genus.rep, 42, r42);
    }
  }
  for (const auto& t : load_mate_transfers(ctx.dir + "/mate_transfers.txt")) {
    const auto report = verify_mate_transfer(t, kTransferBound);
    if (!report.ok())
      r.details.push_back("mate transfer for " + t.g.str() + ": " +
                          std::to_string(report.mismatches.size()) + " mismatches");
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back("zero mismatches across all transfers to " +
                        std::to_string(kTransferBound));
}

void criterion_7(CriterionResult& r, const Ctx& ctx) {
  r.name = "represented sets equal the complements of the bundled families";
  const auto table = load_genus_table(ctx.dir + "/genus_table.txt");
  const std::vector<std::string> keys = {"2,2,2",  "2,2,3",  "2,3,3",
                                         "2,3,6",  "2,4,4",  "2,4,6",
                                         "2,4,10", "2,4,12", "2,3,4"};
  for (const auto& key : keys) {
    auto it = table.find(key);
    if (it == table.end()) {
      r.details.push_back("genus table lacks " + key);
      continue;
    }
    const auto& rec = it->second;
    const auto report =
        verify_excluded(rec.genus.rep, rec.families, rec.constraint, kAuditBound);
    if (!report.ok())
      r.details.push_back(key + ": " + std::to_string(report.mismatches.size()) +
                          " members disagree with the bundled families, first " +
                          std::to_string(report.mismatches.front()));
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back("all bundled family descriptions exact to " +
                        std::to_string(kAuditBound));
}

void criterion_8(CriterionResult& r, const Ctx& ctx) {
  r.name = "every bundled case-analysis script verifies";
  const auto scripts = load_scripts_dir(ctx.dir + "/scripts");
  if (scripts.size() != kExpectedScriptCount)
    r.details.push_back("expected " + std::to_string(kExpectedScriptCount) +
                        " scripts, loaded " + std::to_string(scripts.size()));
  SieveCache cache;
  int64_t primes_checked = 0;
  for (const auto& s : scripts) {
    const auto report = verify_proof_script(s, kScriptBound, cache, ctx.opts.threads);
    primes_checked += report.primes_checked;
    if (!report.ok)
      for (const auto& msg : report.failures)
        r.details.push_back(s.name + ": " + msg);
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back(std::to_string(scripts.size()) + " scripts verified to " +
                        std::to_string(kScriptBound) + " (" +
                        std::to_string(primes_checked) + " large-prime checks)");
}

void criterion_9(CriterionResult& r, const Ctx& ctx) {
  (void)ctx;
  r.name = "escalation regenerates the bundled classification tables";
  const auto tree = escalate_tree(6);

  auto diff_sets = [&](const std::vector<DiagonalForm>& got,
                       const std::vector<DiagonalForm>& want, const std::string& what) {
    std::set<std::string> g, w;
    for (const auto& f : got) g.insert(f.str());
    for (const auto& f : want) w.insert(f.str());
    for (const auto& s : g)
      if (!w.count(s)) r.details.push_back(what + ": unexpected " + s);
    for (const auto& s : w)
      if (!g.count(s)) r.details.push_back(what + ": missing " + s);
  };

  diff_sets(tree.proper(3),
            {DiagonalForm({1, 1, 2}), DiagonalForm({1, 1, 3}), DiagonalForm({1, 2, 3}),
             DiagonalForm({1, 2, 4}), DiagonalForm({1, 2, 5})},
            "ternary proper forms");

  std::vector<DiagonalForm> want5, want6;
  for (const auto& f : proper_rank5_6())
    (f.rank() == 5 ? want5 : want6).push_back(f);
  diff_sets(tree.proper(5), want5, "rank-5 proper forms");
  diff_sets(tree.proper(6), want6, "rank-6 proper forms");

  // Frontier: the bundled quaternary blocks must all appear among the
  // unresolved rank-4 nodes, and every depth-4 prefix of a higher proper
  // form must be one of the bundled blocks.
  std::set<std::string> unresolved4;
  for (const auto& f : tree.unresolved(4)) unresolved4.insert(f.str());
  std::set<std::string> frontier;
  for (const auto& f : rank4_frontier()) frontier.insert(f.str());
  for (const auto& s : frontier)
    if (!unresolved4.count(s))
      r.details.push_back("frontier form " + s + " is not an unresolved rank-4 node");
  for (int rank : {5, 6}) {
    for (const auto& f : tree.proper(rank)) {
      std::vector<int64_t> prefix(f.coeffs().begin(), f.coeffs().begin() + 4);
      const std::string key = DiagonalForm(prefix).str();
      if (!frontier.count(key))
        r.details.push_back("proper form " + f.str() + " extends " + key +
                            ", absent from the bundled frontier");
    }
  }

  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back("tables regenerated exactly (" +
                        std::to_string(tree.nodes.size()) + " nodes explored)");
}

void criterion_10(CriterionResult& r, const Ctx& ctx) {
  r.name = "criterion check equals the full prime audit on every node; criterion set minimal";
  const auto tree = escalate_tree(6);
  const auto audit = audit_tree(tree, kAuditBound, ctx.opts.threads);
  for (const auto& label : audit.mismatches)
    r.details.push_back("criterion/audit mismatch at " + label);

  for (const auto& [p, f] : minimality_witnesses()) {
    for (int64_t q : kCriterionPrimes) {
      const bool rep = represents_direct(f, q).has_value();
      if (q == p && rep)
        r.details.push_back(f.str() + " represents " + std::to_string(q) +
                            ", so it does not witness its removal");
      if (q != p && !rep)
        r.details.push_back(f.str() + " misses " + std::to_string(q) +
                            " as well, so it does not isolate " + std::to_string(p));
    }
  }
  r.pass = r.details.empty();
  if (r.pass)
    r.details.push_back(std::to_string(audit.nodes_checked) +
                        " nodes audited; all ten removal witnesses verified");
}

void criterion_11(CriterionResult& r, const Ctx& ctx) {
  r.name = "property suites: sieve oracle, local conditions, genus collapse, partition";
  // Suite 1: bit-sieve vs direct representation test on random forms.
  {
    std::mt19937 rng(12345);
    const int64_t bound = 10000;
    for (int i = 0; i < 50; ++i) {
      const int rank = 1 + (int)(rng() % 4);
      std::vector<int64_t> coeffs;
      for (int j = 0; j < rank; ++j) coeffs.push_back(1 + (int64_t)(rng() % 20));
      DiagonalForm f(coeffs);
      const auto sieve = build_sieve(f, bound, ctx.opts.threads);
      std::vector<int64_t> samples;
      for (int64_t n = 0; n <= 100; ++n) samples.push_back(n);
      for (int j = 0; j < 256; ++j) samples.push_back((int64_t)(rng() % (bound + 1)));
      for (int64_t n : samples) {
        const bool direct = represents_direct(f, n).has_value();
        if (direct != sieve.test(n)) {
          r.details.push_back("sieve/direct disagreement: form " + f.str() + " at n=" +
                              std::to_string(n));
          break;
        }
      }
    }
  }
  // Suite 2: every represented number is represented in every completion.
  {
    const std::vector<DiagonalForm> forms = {
        DiagonalForm({1, 1, 2}), DiagonalForm({1, 1, 3}), DiagonalForm({1, 2, 3}),
        DiagonalForm({1, 2, 4}), DiagonalForm({1, 2, 5}), DiagonalForm({2, 3, 4}),
        DiagonalForm({2, 3, 5}), DiagonalForm({2, 3, 7}), DiagonalForm({2, 2, 3}),
        DiagonalForm({1, 1, 1})};
    for (const auto& f : forms) {
      GramForm m(f);
      const auto sieve = build_sieve(f, 1000, ctx.opts.threads);
      for (int64_t n = 0; n <= 1000; ++n) {
        if (!sieve.test(n)) continue;
        for (int64_t p : {2, 3, 5, 7, 11}) {
          if (!local_represents(m, n, p)) {
            r.details.push_back("represented " + std::to_string(n) + " of " + f.str() +
                                " not locally represented at " + std::to_string(p));
            break;
          }
        }
      }
    }
  }
  // Suite 3: one-class genera represent exactly their locally represented
  // numbers.
  {
    const auto table = load_genus_table(ctx.dir + "/genus_table.txt");
    for (const auto& key :
         {"2,2,2", "2,2,3", "2,3,3", "2,3,6", "2,4,4", "2,4,6", "2,4,10", "2,4,12"}) {
      auto it = table.find(key);
      if (it == table.end()) {
        r.details.push_back("genus table lacks " + std::string(key));
        continue;
      }
      const DiagonalForm& f = it->second.genus.rep;
      if (it->second.genus.class_number() != 1) {
        r.details.push_back(std::string(key) + ": expected a one-class genus");
        continue;
      }
      GramForm m(f);
      LocalCache cache(m);
      std::vector<int64_t> ps;
      {
        int64_t rest = 2 * m.determinant();
        for (int64_t p = 2; p * p <= rest; ++p)
          if (rest % p == 0) {
            ps.push_back(p);
            while (rest % p == 0) rest /= p;
          }
        if (rest > 1) ps.push_back(rest);
      }
      const auto sieve = build_sieve(f, 10000, ctx.opts.threads);
      for (int64_t n = 0; n <= 10000; ++n) {
        bool local = true;
        for (int64_t p : ps)
          if (!cache.represents(n, p)) {
            local = false;
            break;
          }
        if (local != sieve.test(n)) {
          r.details.push_back(std::string(key) + ": local and direct disagree at n=" +
                              std::to_string(n));
          break;
        }
      }
    }
  }
  // Suite 4: residue vectors partition (Z/d)^3.
  {
    const std::vector<std::pair<GramForm, int64_t>> cases = {
        {GramForm(DiagonalForm({2, 3, 5})), 7},
        {GramForm(DiagonalForm({2, 3, 5})), 2},
        {GramForm(DiagonalForm({1, 1, 30})), 7},
        {GramForm(DiagonalForm({2, 3, 7})), 12},
        {GramForm(DiagonalForm({1, 3, 14})), 8},
    };
    for (const auto& [g, d] : cases) {
      int64_t total = 0;
      for (int64_t a = 0; a < d; ++a) total += (int64_t)residue_vectors(g, d, a).size();
      if (total != d * d * d)
        r.details.push_back("partition failure for " + g.str() + " mod " +
                            std::to_string(d) + ": " + std::to_string(total));
    }
  }
  r.pass = r.details.empty();
  if (r.pass) r.details.push_back("all four property suites passed");
}

}  // namespace

CriterionResult run_criterion(int index, const VerifyOptions& opts) {
  Ctx ctx;
  ctx.opts = opts;
  if (ctx.opts.threads < 1) ctx.opts.threads = 1;
  ctx.dir = opts.data.empty() ? data_dir() : opts.data;
  CriterionResult r;
  r.index = index;
  switch (index) {
    case 1: criterion_1(r, ctx); break;
    case 2: criterion_2(r, ctx); break;
    case 3: criterion_3(r, ctx); break;
    case 4: criterion_4(r, ctx); break;
    case 5: criterion_5(r, ctx); break;
    case 6: criterion_6(r, ctx); break;
    case 7: criterion_7(r, ctx); break;
    case 8: criterion_8(r, ctx); break;
    case 9: criterion_9(r, ctx); break;
    case 10: criterion_10(r, ctx); break;
    case 11: criterion_11(r, ctx); break;
    default:
      throw Error(ErrorKind::Precondition, "criterion index must be in [1, 11]");
  }
  return r;
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opts) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= 11; ++i) out.push_back(run_criterion(i, opts));
  return out;
}

}  // namespace qpu
