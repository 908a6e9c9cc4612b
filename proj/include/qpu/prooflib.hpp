#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpu/forms.hpp"
#include "qpu/goodvec.hpp"
#include "qpu/local.hpp"
#include "qpu/sieve.hpp"

namespace qpu {

// One additive term of a script subtrahend: lead * square_part * var^2,
// where `lead` must match a coefficient of the target form and square_part
// must be a perfect square (the substitution x -> k*var).
struct SubTerm {
  int64_t lead = 0;
  int64_t square_part = 1;
  char var = 'd';
};

struct Guard {
  enum class Kind { Even, ModIn, ModNotIn, Coprime, Family };
  Kind kind = Kind::Even;
  int64_t m = 0;                   // ModIn / ModNotIn
  std::vector<int64_t> residues;   // ModIn / ModNotIn
  int64_t k = 0;                   // Coprime
  std::optional<ExcludedFamily> family;
  std::string str() const;
};

struct ScriptRow {
  std::vector<int64_t> assign;     // one value per subtrahend variable
  std::vector<int64_t> residues;   // residues mod script modulus
  bool rest = false;               // true: all not-yet-covered unit residues
};

struct DeriveSpec {
  std::vector<char> vars;
  std::vector<std::vector<int64_t>> ranges;  // candidate values, in search order
};

struct ProofScript {
  std::string name;
  DiagonalForm target{{1}};
  DiagonalForm g{{1}};
  int64_t b0 = 0;
  std::vector<int64_t> exceptions;
  int64_t mod = 1;
  std::vector<SubTerm> terms;
  std::vector<ScriptRow> rows;          // explicit table (possibly empty)
  std::optional<DeriveSpec> derive;     // or derived table
  std::vector<Guard> guards;
};

// Parses a script file (one or more `script ... end` blocks).
std::vector<ProofScript> parse_scripts_text(const std::string& text,
                                            const std::string& origin);
std::vector<ProofScript> load_scripts(const std::string& path);
// All *.qps files in a directory, scripts in file-name order.
std::vector<ProofScript> load_scripts_dir(const std::string& dir);

// Does the residue class {n : n = c (mod mod)} contain any member of the
// family? Exact: checks c = base^s * r0 (mod gcd(mod, base^s * m)) over all
// s, with cycle detection.
bool class_intersects_family(int64_t c, int64_t mod, const ExcludedFamily& fam);

// True when every integer in the class {n = c (mod mod)} satisfies all
// guards (so membership in the guarded set is certain from the class alone).
bool class_safe(int64_t c, int64_t mod, const std::vector<Guard>& guards);

// Reusable bit-sieves keyed by form, grown on demand.
class SieveCache {
 public:
  const RepresentationSieve& get(const DiagonalForm& f, int64_t bound, int threads = 1);

 private:
  std::map<std::string, RepresentationSieve> store_;
};

struct ScriptReport {
  std::string name;
  bool ok = true;
  std::vector<std::string> failures;
  // residue mod script modulus -> chosen variable assignment
  std::map<int64_t, std::vector<int64_t>> table;
  int64_t primes_checked = 0;
  int64_t small_primes_checked = 0;
};

// Four-part verification:
//  1. the rows (explicit or derived) cover each unit residue mod M exactly once;
//  2. each covered residue, after subtraction, lands in a class certified
//     safe for every guard;
//  3. every prime p in [b0, bound] has n = p - subtrahend >= 0 with n
//     represented by g (checked against a bit-sieve);
//  4. every prime p < b0 is represented by the target unless listed as an
//     exception, and listed exceptions are genuinely not represented.
ScriptReport verify_proof_script(const ProofScript& s, int64_t bound,
                                 SieveCache& cache, int threads = 1);

struct GenusRecord {
  GenusData genus;
  int declared_class = 1;
  std::vector<ExcludedFamily> families;  // stated complement of the represented set
  ValueConstraint constraint = ValueConstraint::All;
  bool inferred = false;  // representative reconstructed rather than stated
};

// genus_table.txt: keyed by the representative's canonical coefficient string.
std::map<std::string, GenusRecord> load_genus_table(const std::string& path);

struct MateTransfer {
  DiagonalForm g{{1}};
  GramForm mate{std::vector<std::vector<int64_t>>{{1}}};
  int64_t mod = 1;
  std::vector<int64_t> residues;
};

std::vector<MateTransfer> load_mate_transfers(const std::string& path);

// Checks that every n <= bound in the given classes represented by the mate
// is represented by g.
TransferReport verify_mate_transfer(const MateTransfer& t, int64_t bound);

}  // namespace qpu
