#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <variant>

#include "qpu/data.hpp"
#include "qpu/escalate.hpp"
#include "qpu/goodvec.hpp"
#include "qpu/prooflib.hpp"
#include "qpu/sieve.hpp"
#include "qpu/verify.hpp"

namespace py = pybind11;

namespace {

qpu::GramForm as_gram(const std::string& text) {
  auto parsed = qpu::parse_form(text);
  if (std::holds_alternative<qpu::DiagonalForm>(parsed))
    return qpu::GramForm(std::get<qpu::DiagonalForm>(parsed));
  return std::get<qpu::GramForm>(parsed);
}

qpu::DiagonalForm as_diagonal(const std::string& text) {
  auto parsed = qpu::parse_form(text);
  if (!std::holds_alternative<qpu::DiagonalForm>(parsed))
    throw qpu::Error(qpu::ErrorKind::Precondition, "expected a diagonal form");
  return std::get<qpu::DiagonalForm>(parsed);
}

}  // namespace

PYBIND11_MODULE(_qpu, m) {
  m.doc() = "exact arithmetic of prime-universal diagonal quadratic forms";

  py::register_exception<qpu::Error>(m, "QpuError");

  m.def(
      "represents",
      [](const std::string& form, int64_t n) -> std::optional<std::vector<int64_t>> {
        auto hit = qpu::represents_direct(as_gram(form), n);
        if (!hit) return std::nullopt;
        return hit->witness;
      },
      py::arg("form"), py::arg("n"),
      "Witness vector if the form represents n, else None.");

  m.def(
      "missed_primes",
      [](const std::string& form, int64_t bound, int threads) {
        return qpu::build_sieve(as_diagonal(form), bound, threads).missed_primes();
      },
      py::arg("form"), py::arg("bound"), py::arg("threads") = 1,
      "All primes <= bound the form fails to represent, ascending.");

  m.def(
      "prime_truant",
      [](const std::string& form, int64_t bound,
         int threads) -> std::optional<int64_t> {
        return qpu::prime_truant(as_diagonal(form), bound, threads);
      },
      py::arg("form"), py::arg("bound") = 100000, py::arg("threads") = 1,
      "Smallest missed prime <= bound, or None.");

  m.def(
      "criterion_check",
      [](const std::string& form) { return qpu::criterion_check(as_diagonal(form)); },
      py::arg("form"),
      "Does the form represent 2, 3, 5, 7, 13, 17, 23, 41, 43 and 67?");

  m.def(
      "is_proper",
      [](const std::string& form) { return qpu::is_proper(as_diagonal(form)); },
      py::arg("form"),
      "No proper sub-multiset of the coefficients is prime-universal.");

  m.def(
      "proper_forms",
      [](int rank, int max_rank) {
        const auto tree = qpu::escalate_tree(max_rank);
        std::vector<std::string> out;
        for (const auto& f : tree.proper(rank)) out.push_back(f.str());
        return out;
      },
      py::arg("rank"), py::arg("max_rank") = 6,
      "Proper prime-universal forms of the given rank, regenerated by escalation.");

  m.def(
      "precedes",
      [](const std::string& source, const std::string& target, int64_t d, int64_t a) {
        return qpu::precedes(as_gram(source), as_gram(target), d, a);
      },
      py::arg("source"), py::arg("target"), py::arg("d"), py::arg("a"),
      "Good-vector transfer: n = a (mod d) represented by source implies "
      "represented by target.");

  m.def(
      "good_residues",
      [](const std::string& representative, int64_t d, const std::string& data) {
        const auto dir = data.empty() ? qpu::data_dir() : data;
        const auto table = qpu::load_genus_table(dir + "/genus_table.txt");
        auto it = table.find(as_diagonal(representative).str());
        if (it == table.end())
          throw qpu::Error(qpu::ErrorKind::Data, "no such genus representative");
        const auto s = qpu::good_residue_set(it->second.genus, d);
        return std::vector<int64_t>(s.begin(), s.end());
      },
      py::arg("representative"), py::arg("d"), py::arg("data") = std::string(),
      "Residues mod d on which every genus mate transfers to the representative.");

  m.def(
      "verify_criterion",
      [](int index, const std::string& data, int threads) {
        qpu::VerifyOptions opts;
        opts.data = data;
        opts.threads = threads;
        const auto r = qpu::run_criterion(index, opts);
        return py::make_tuple(r.pass, r.name, r.details);
      },
      py::arg("index"), py::arg("data") = std::string(), py::arg("threads") = 1,
      "Run one numbered verification check; returns (pass, name, details).");

  m.def("candidate_forms", [] {
    std::vector<std::string> out;
    for (const auto& f : qpu::candidate_quaternaries()) out.push_back(f.str());
    return out;
  });

  m.attr("CRITERION_PRIMES") =
      std::vector<int64_t>(qpu::kCriterionPrimes.begin(), qpu::kCriterionPrimes.end());
  m.attr("__version__") = "1.0.0";
}
