#pragma once
#include <optional>
#include <string>
#include <vector>

#include "qpu/bitset.hpp"
#include "qpu/forms.hpp"

namespace qpu {

// Exact membership test: is n represented? Returns a witness vector on success.
// Diagonal matrices of any supported rank; non-diagonal matrices up to dim 3.
std::optional<FormValue> represents_direct(const GramForm& f, int64_t n);
std::optional<FormValue> represents_direct(const DiagonalForm& f, int64_t n);

// Bit array marking every represented value in [0, bound].
class RepresentationSieve {
 public:
  RepresentationSieve(GramForm form, BitArray bits)
      : form_(std::move(form)), bits_(std::move(bits)) {}
  const GramForm& form() const { return form_; }
  int64_t bound() const { return bits_.bound(); }
  bool test(int64_t n) const {
    if (n < 0 || n > bound()) throw Error(ErrorKind::Precondition, "value outside sieve range");
    return bits_.test(n);
  }
  const BitArray& bits() const { return bits_; }
  // All primes <= bound whose bit is clear, ascending.
  std::vector<int64_t> missed_primes() const;

 private:
  GramForm form_;
  BitArray bits_;
};

RepresentationSieve build_sieve(const GramForm& f, int64_t bound, int threads = 1);
RepresentationSieve build_sieve(const DiagonalForm& f, int64_t bound, int threads = 1);

// Binary round-trip: 8-byte magic "QPUSIEVE", u64 little-endian bound,
// then the bit words little-endian.
void write_sieve(const RepresentationSieve& s, const std::string& path);
// Reads bound + bits; the caller supplies which form the file is for.
BitArray read_sieve_bits(const std::string& path, int64_t& bound_out);

// Arithmetic family c^s(m*t + r), s,t >= 0, with one or more residues r.
// Membership: some s >= 0 with c^s | n and (n / c^s) mod m in residues.
// Base-free families "m*t + r" are encoded with c = m + 1 (c = 1 mod m makes
// every power collapse onto the same residue class).
struct ExcludedFamily {
  int64_t c;  // >= 2
  int64_t m;
  std::vector<int64_t> residues;

  bool contains(int64_t n) const;
  std::string str() const;
};

// Parses "4^s(16t+14)", "25^s(50t+20)", or base-free "8t+1".
ExcludedFamily parse_family(const std::string& text);

// Ascending members of the family within [0, bound].
std::vector<int64_t> family_members(const ExcludedFamily& fam, int64_t bound);

// Optional scope restriction for complement checks.
enum class ValueConstraint { All, Even };

struct ExclusionReport {
  // Values n <= bound, within the constraint scope, where predicted
  // membership (not in any family) disagrees with the sieve.
  std::vector<int64_t> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Checks that within the constraint scope the represented set is exactly the
// complement of the family union.
ExclusionReport verify_excluded(const DiagonalForm& f, const std::vector<ExcludedFamily>& fams,
                                ValueConstraint constraint, int64_t bound);

}  // namespace qpu
