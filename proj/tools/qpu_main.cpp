#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "qpu/certificate.hpp"
#include "qpu/data.hpp"
#include "qpu/escalate.hpp"
#include "qpu/goodvec.hpp"
#include "qpu/prooflib.hpp"
#include "qpu/sieve.hpp"
#include "qpu/verify.hpp"

namespace {

using nlohmann::ordered_json;

struct Globals {
  std::string json_path;
  std::string data_dir_flag;
  int threads = 1;
};

std::string data_dir_of(const Globals& g) {
  return g.data_dir_flag.empty() ? qpu::data_dir() : g.data_dir_flag;
}

void emit(const Globals& g, const std::string& command, ordered_json inputs,
          ordered_json result, ordered_json witnesses) {
  if (g.json_path.empty()) return;
  qpu::write_certificate(g.json_path,
                         qpu::make_certificate(command, std::move(inputs),
                                               std::move(result), std::move(witnesses)));
}

qpu::DiagonalForm parse_diagonal(const std::string& text) {
  auto parsed = qpu::parse_form(text);
  if (std::holds_alternative<qpu::DiagonalForm>(parsed))
    return std::get<qpu::DiagonalForm>(parsed);
  throw qpu::Error(qpu::ErrorKind::Precondition,
                   "this command needs a diagonal form (comma-separated coefficients)");
}

qpu::GramForm parse_gram(const std::string& text) {
  auto parsed = qpu::parse_form(text);
  if (std::holds_alternative<qpu::DiagonalForm>(parsed))
    return qpu::GramForm(std::get<qpu::DiagonalForm>(parsed));
  return std::get<qpu::GramForm>(parsed);
}

ordered_json form_json(const qpu::GramForm& f) {
  if (f.is_diagonal()) return qpu::DiagonalForm(f.diagonal()).str();
  return f.str();
}

int cmd_represents(const Globals& g, const std::string& form_str, int64_t n) {
  auto parsed = qpu::parse_form(form_str);
  std::optional<qpu::FormValue> hit;
  std::string canonical;
  if (std::holds_alternative<qpu::DiagonalForm>(parsed)) {
    const auto& f = std::get<qpu::DiagonalForm>(parsed);
    canonical = f.str();
    hit = qpu::represents_direct(f, n);
  } else {
    const auto& f = std::get<qpu::GramForm>(parsed);
    canonical = f.str();
    hit = qpu::represents_direct(f, n);
  }
  ordered_json witnesses = ordered_json::array();
  if (hit) {
    std::cout << n << " represented, witness (";
    for (size_t i = 0; i < hit->witness.size(); ++i)
      std::cout << (i ? "," : "") << hit->witness[i];
    std::cout << ")\n";
    witnesses.push_back(hit->witness);
  } else {
    std::cout << n << " not represented\n";
  }
  emit(g, "represents", {{"form", canonical}, {"n", n}},
       {{"represented", hit.has_value()}}, witnesses);
  return hit ? 0 : 1;
}

int cmd_sieve(const Globals& g, const std::string& form_str, int64_t bound,
              const std::string& out_path, const std::string& import_path) {
  const auto f = parse_diagonal(form_str);
  const auto sieve = qpu::build_sieve(f, bound, g.threads);
  const auto missed = sieve.missed_primes();
  std::cout << "form " << f.str() << ", bound " << bound << ": "
            << sieve.bits().count() << " represented values, " << missed.size()
            << " missed primes\n";
  bool import_ok = true;
  if (!out_path.empty()) {
    qpu::write_sieve(sieve, out_path);
    std::cout << "written to " << out_path << "\n";
  }
  if (!import_path.empty()) {
    int64_t file_bound = 0;
    const auto bits = qpu::read_sieve_bits(import_path, file_bound);
    import_ok = (file_bound == bound) && (bits == sieve.bits());
    std::cout << "import " << import_path << ": "
              << (import_ok ? "matches a fresh build" : "DIFFERS from a fresh build")
              << "\n";
  }
  emit(g, "sieve",
       {{"form", f.str()}, {"bound", bound}, {"out", out_path}, {"import", import_path}},
       {{"represented_count", sieve.bits().count()},
        {"missed_prime_count", missed.size()},
        {"import_ok", import_ok}},
       ordered_json(missed));
  return import_ok ? 0 : 1;
}

int cmd_truant(const Globals& g, const std::string& form_str, int64_t bound) {
  const auto f = parse_diagonal(form_str);
  const auto t = qpu::prime_truant(f, bound, g.threads);
  if (t)
    std::cout << *t << "\n";
  else
    std::cout << "none up to " << bound << "\n";
  ordered_json result;
  result["truant"] = t ? ordered_json(*t) : ordered_json(nullptr);
  result["bound"] = bound;
  emit(g, "truant", {{"form", f.str()}, {"bound", bound}}, result,
       ordered_json::array());
  return t ? 1 : 0;
}

int cmd_criterion(const Globals& g, const std::string& form_str) {
  const auto f = parse_diagonal(form_str);
  std::vector<int64_t> missed;
  for (int64_t p : qpu::kCriterionPrimes)
    if (!qpu::represents_direct(f, p)) missed.push_back(p);
  if (missed.empty()) {
    std::cout << "prime-universal (criterion S)\n";
  } else {
    std::cout << "fails criterion; missed primes:";
    for (int64_t p : missed) std::cout << " " << p;
    std::cout << "\n";
  }
  emit(g, "criterion", {{"form", f.str()}},
       {{"prime_universal", missed.empty()}}, ordered_json(missed));
  return missed.empty() ? 0 : 1;
}

int cmd_proper(const Globals& g, const std::string& form_str) {
  const auto f = parse_diagonal(form_str);
  const bool proper = qpu::is_proper(f);
  std::cout << (proper ? "proper" : "improper (a proper sub-multiset is prime-universal)")
            << "\n";
  emit(g, "proper", {{"form", f.str()}}, {{"proper", proper}}, ordered_json::array());
  return proper ? 0 : 1;
}

int table_candidates(const Globals& g, const qpu::EscalationTree& tree) {
  std::set<std::string> proper4;
  for (const auto& f : tree.proper(4)) proper4.insert(f.str());
  bool ok = true;
  for (const auto& f : qpu::candidate_quaternaries()) {
    const bool present = proper4.count(f.str()) != 0;
    std::cout << f.str() << (present ? "" : "  [not regenerated]") << "\n";
    ok = ok && present;
  }
  emit(g, "escalate", {{"table", "candidates"}}, {{"all_regenerated", ok}},
       ordered_json::array());
  return ok ? 0 : 1;
}

int table_higher(const Globals& g, const qpu::EscalationTree& tree) {
  std::set<std::string> want;
  for (const auto& f : qpu::proper_rank5_6()) want.insert(f.str());
  std::set<std::string> got;
  for (int rank : {5, 6})
    for (const auto& f : tree.proper(rank)) got.insert(f.str());
  bool ok = want == got;
  for (const auto& s : got)
    std::cout << s << (want.count(s) ? "" : "  [unexpected]") << "\n";
  for (const auto& s : want)
    if (!got.count(s)) std::cout << s << "  [missing]\n";
  emit(g, "escalate", {{"table", "1"}}, {{"matches", ok}}, ordered_json::array());
  return ok ? 0 : 1;
}

int table_exceptions(const Globals& g, int threads) {
  bool ok = true;
  ordered_json rows = ordered_json::array();
  for (const auto& row : qpu::single_exception_rows()) {
    const auto missed = qpu::build_sieve(row.form, 100000, threads).missed_primes();
    const bool match = missed.size() == 1 && missed[0] == row.exception;
    ok = ok && match;
    std::cout << row.form.str() << " -> " << row.exception
              << (match ? "" : "  [audit disagrees]") << "\n";
    rows.push_back({{"form", row.form.str()},
                    {"exception", row.exception},
                    {"verified", match}});
  }
  emit(g, "escalate", {{"table", "2"}}, {{"all_verified", ok}}, rows);
  return ok ? 0 : 1;
}

int table_truants(const Globals& g, int threads) {
  bool ok = true;
  for (const auto& [f, expected] : qpu::frontier_truants()) {
    const auto missed = qpu::build_sieve(f, 100000, threads).missed_primes();
    const bool match = !missed.empty() && missed.front() == expected;
    ok = ok && match;
    std::cout << f.str() << " -> " << expected << (match ? "" : "  [audit disagrees]")
              << "\n";
  }
  emit(g, "escalate", {{"table", "truants"}}, {{"all_verified", ok}},
       ordered_json::array());
  return ok ? 0 : 1;
}

int cmd_escalate(const Globals& g, int max_rank, const std::string& table) {
  if (table == "2") return table_exceptions(g, g.threads);
  if (table == "truants") return table_truants(g, g.threads);
  const auto tree = qpu::escalate_tree(max_rank);
  if (table == "candidates") return table_candidates(g, tree);
  if (table == "1") return table_higher(g, tree);
  for (int rank = 1; rank <= max_rank; ++rank) {
    std::cout << "rank " << rank << ": " << tree.proper(rank).size() << " proper, "
              << tree.unresolved(rank).size() << " unresolved\n";
  }
  ordered_json nodes = ordered_json::array();
  for (const auto& n : tree.nodes) {
    ordered_json jn;
    jn["form"] = n.coeffs.empty() ? std::string("") : qpu::DiagonalForm(n.coeffs).str();
    jn["truant"] = n.truant ? ordered_json(*n.truant) : ordered_json(nullptr);
    jn["status"] = qpu::status_name(n.status);
    jn["children"] = n.children;
    nodes.push_back(std::move(jn));
  }
  emit(g, "escalate", {{"max_rank", max_rank}},
       {{"node_count", tree.nodes.size()}}, nodes);
  return 0;
}

int cmd_goodvec(const Globals& g, const std::string& f_str, const std::string& g_str,
                int64_t d, int64_t a) {
  const auto target = parse_gram(f_str);
  const auto source = parse_gram(g_str);
  const auto cert = qpu::good_vectors(target, source, d, a);
  std::cout << "good " << cert.good_count << " of " << cert.total_count
            << " cosets\nprecedes: " << (cert.relation() ? "true" : "false") << "\n";
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : cert.cosets) {
    ordered_json jw;
    jw["coset"] = w.coset;
    jw["good"] = w.good;
    if (w.good) jw["witness"] = w.witness;
    witnesses.push_back(std::move(jw));
  }
  emit(g, "goodvec",
       {{"f", form_json(target)}, {"g", form_json(source)}, {"d", d}, {"a", a}},
       {{"good_count", cert.good_count},
        {"total_count", cert.total_count},
        {"precedes", cert.relation()}},
       witnesses);
  return cert.relation() ? 0 : 1;
}

int cmd_good_residues(const Globals& g, const std::string& f_str, int64_t d) {
  const auto table = qpu::load_genus_table(data_dir_of(g) + "/genus_table.txt");
  const auto f = parse_diagonal(f_str);
  auto it = table.find(f.str());
  if (it == table.end())
    throw qpu::Error(qpu::ErrorKind::Data, "genus table has no entry for " + f.str());
  const auto residues = qpu::good_residue_set(it->second.genus, d);
  for (int64_t r : residues) std::cout << r << " ";
  std::cout << "\n";
  emit(g, "good-residues", {{"f", f.str()}, {"d", d}},
       {{"count", residues.size()}},
       ordered_json(std::vector<int64_t>(residues.begin(), residues.end())));
  return 0;
}

int cmd_proof_script(const Globals& g, const std::string& name, bool all, int64_t bound) {
  const auto scripts = qpu::load_scripts_dir(data_dir_of(g) + "/scripts");
  qpu::SieveCache cache;
  bool ok = true;
  bool matched = false;
  ordered_json reports = ordered_json::array();
  for (const auto& s : scripts) {
    if (!all && s.name != name) continue;
    matched = true;
    const auto report = qpu::verify_proof_script(s, bound, cache, g.threads);
    ok = ok && report.ok;
    std::cout << s.name << ": " << (report.ok ? "verified" : "FAILED") << " ("
              << report.primes_checked << " large primes, "
              << report.small_primes_checked << " small primes)\n";
    for (const auto& msg : report.failures) std::cout << "  " << msg << "\n";
    ordered_json jr;
    jr["name"] = s.name;
    jr["ok"] = report.ok;
    jr["failures"] = report.failures;
    jr["primes_checked"] = report.primes_checked;
    reports.push_back(std::move(jr));
  }
  if (!matched)
    throw qpu::Error(qpu::ErrorKind::Data,
                     all ? "no scripts found" : "no script named " + name);
  emit(g, "proof-script", {{"name", name}, {"all", all}, {"bound", bound}},
       {{"ok", ok}}, reports);
  return ok ? 0 : 1;
}

int cmd_mate_transfer(const Globals& g, int64_t bound) {
  const auto transfers = qpu::load_mate_transfers(data_dir_of(g) + "/mate_transfers.txt");
  bool ok = true;
  for (const auto& t : transfers) {
    const auto report = qpu::verify_mate_transfer(t, bound);
    ok = ok && report.ok();
    std::cout << t.g.str() << " mate transfer: "
              << (report.ok() ? "sound" : "MISMATCHES") << " (" << report.checked
              << " values)\n";
  }
  emit(g, "mate-transfer", {{"bound", bound}}, {{"ok", ok}}, ordered_json::array());
  return ok ? 0 : 1;
}

int cmd_verify_paper(const Globals& g, bool all, int criterion) {
  qpu::VerifyOptions opts;
  opts.data = data_dir_of(g);
  opts.threads = g.threads;
  std::vector<qpu::CriterionResult> results;
  if (all)
    results = qpu::run_all_criteria(opts);
  else
    results.push_back(qpu::run_criterion(criterion, opts));
  bool ok = true;
  ordered_json jr = ordered_json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.index << ": "
              << r.name << "\n";
    for (const auto& d : r.details) std::cout << "  " << d << "\n";
    jr.push_back({{"index", r.index}, {"name", r.name}, {"pass", r.pass},
                  {"details", r.details}});
  }
  emit(g, "verify-paper", {{"all", all}, {"criterion", criterion}}, {{"ok", ok}}, jr);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  if (const char* env = std::getenv("QPU_THREADS"); env != nullptr && *env != '\0')
    g.threads = std::max(1, std::atoi(env));

  CLI::App app{"exact verification toolkit for prime-universal diagonal quadratic forms"};
  app.require_subcommand(1);
  app.fallthrough();  // let global options appear after the subcommand too
  app.add_option("--json", g.json_path, "write a JSON certificate to this path");
  app.add_option("--threads", g.threads, "worker threads (default: QPU_THREADS or 1)");
  app.add_option("--data", g.data_dir_flag, "directory with the bundled data files");

  std::string form_str, f_str, g_str, table, name, out_path, import_path;
  int64_t n = 0, bound = 100000, d = 1, a = 0;
  int64_t ps_bound = 1000000, mt_bound = 10000;
  int max_rank = 6, criterion = 0;
  bool all = false;

  auto* c_rep = app.add_subcommand("represents", "test one value");
  c_rep->add_option("--form", form_str)->required();
  c_rep->add_option("--n", n)->required();

  auto* c_sieve = app.add_subcommand("sieve", "build a represented-value bit sieve");
  c_sieve->add_option("--form", form_str)->required();
  c_sieve->add_option("--bound", bound)->required();
  c_sieve->add_option("--out", out_path, "write the sieve file here");
  c_sieve->add_option("--import", import_path, "read this sieve file and compare");

  auto* c_truant = app.add_subcommand("truant", "smallest missed prime");
  c_truant->add_option("--form", form_str)->required();
  c_truant->add_option("--bound", bound);

  auto* c_crit = app.add_subcommand("criterion", "criterion-prime check");
  c_crit->add_option("--form", form_str)->required();

  auto* c_proper = app.add_subcommand("proper", "properness of a prime-universal form");
  c_proper->add_option("--form", form_str)->required();

  auto* c_esc = app.add_subcommand("escalate", "regenerate the classification");
  c_esc->add_option("--max-rank", max_rank);
  c_esc->add_option("--table", table)
      ->check(CLI::IsMember({"1", "2", "candidates", "truants"}));

  auto* c_gv = app.add_subcommand("goodvec", "transfer relation between two forms");
  c_gv->add_option("--f", f_str, "target form")->required();
  c_gv->add_option("--g", g_str, "source form")->required();
  c_gv->add_option("--d", d)->required();
  c_gv->add_option("--a", a)->required();

  auto* c_gr = app.add_subcommand("good-residues", "residues where a genus transfers");
  c_gr->add_option("--f", f_str, "genus representative")->required();
  c_gr->add_option("--d", d)->required();

  auto* c_ps = app.add_subcommand("proof-script", "verify bundled case-analysis scripts");
  c_ps->add_option("--name", name, "script name");
  c_ps->add_flag("--all", all, "verify every bundled script");
  c_ps->add_option("--bound", ps_bound);

  auto* c_mt = app.add_subcommand("mate-transfer", "verify bundled mate transfers");
  c_mt->add_option("--bound", mt_bound);

  auto* c_vp = app.add_subcommand("verify-paper", "run the numbered verification checks");
  c_vp->add_flag("--all", all);
  c_vp->add_option("--criterion", criterion)->check(CLI::Range(1, 11));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_rep) return cmd_represents(g, form_str, n);
    if (*c_sieve) return cmd_sieve(g, form_str, bound, out_path, import_path);
    if (*c_truant) return cmd_truant(g, form_str, bound);
    if (*c_crit) return cmd_criterion(g, form_str);
    if (*c_proper) return cmd_proper(g, form_str);
    if (*c_esc) return cmd_escalate(g, max_rank, table);
    if (*c_gv) return cmd_goodvec(g, f_str, g_str, d, a);
    if (*c_gr) return cmd_good_residues(g, f_str, d);
    if (*c_ps) {
      if (!all && name.empty())
        throw qpu::Error(qpu::ErrorKind::Precondition, "pass --name or --all");
      return cmd_proof_script(g, name, all, ps_bound);
    }
    if (*c_mt) return cmd_mate_transfer(g, mt_bound);
    if (*c_vp) {
      if (!all && criterion == 0)
        throw qpu::Error(qpu::ErrorKind::Precondition, "pass --criterion N or --all");
      return cmd_verify_paper(g, all, criterion);
    }
  } catch (const qpu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
