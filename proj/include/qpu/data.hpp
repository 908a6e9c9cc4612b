#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qpu/forms.hpp"

namespace qpu {

// The 27 quaternary escalations singled out for the deep analysis.
std::vector<DiagonalForm> candidate_quaternaries();

// The quaternary escalation frontier: the seven printed blocks of
// non-prime-universal rank-4 forms, flattened in block order.
std::vector<DiagonalForm> rank4_frontier();

// Expansion of the higher-rank classification table: all proper
// prime-universal diagonal forms of rank 5 and rank 6.
std::vector<DiagonalForm> proper_rank5_6();

struct ExceptionRow {
  DiagonalForm form{{1}};
  int64_t exception = 0;
};

// Bundled table of forms representing every prime except exactly one.
std::vector<ExceptionRow> single_exception_rows();

struct MultiExceptionRow {
  DiagonalForm form{{1}};
  std::vector<int64_t> exceptions;
};

// Bundled table of forms missing a small finite set of primes.
std::vector<MultiExceptionRow> multi_exception_rows();

// (form, smallest missed prime) for the frontier forms whose truant is
// part of the bundled classification data.
std::vector<std::pair<DiagonalForm, int64_t>> frontier_truants();

// Residues mod 30 / mod 42 at which every genus mate of <2,3,7>
// transfers into it.
extern const std::set<int64_t> kGoodResidues30;
extern const std::set<int64_t> kGoodResidues42;

// For each criterion prime p, a form representing every other criterion
// prime but not p (so no proper subset of the criterion set suffices).
std::vector<std::pair<int64_t, DiagonalForm>> minimality_witnesses();

// Directory holding the bundled data files (genus table, transfer list,
// proof scripts): QPU_DATA environment variable when set, otherwise the
// compile-time default.
std::string data_dir();

}  // namespace qpu
