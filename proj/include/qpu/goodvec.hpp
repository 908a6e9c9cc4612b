#pragma once
#include <array>
#include <set>
#include <vector>

#include "qpu/forms.hpp"
#include "qpu/local.hpp"

namespace qpu {

using Vec3 = std::array<int64_t, 3>;
using Mat3 = std::array<std::array<int64_t, 3>, 3>;

// Every integer solution of f(x) = n, all sign/permutation variants included,
// for forms of dimension <= 3. Ordered lexicographically.
std::vector<std::vector<int64_t>> all_representations(const GramForm& f, int64_t n);

// Residue vectors R(f, d, a): all v in (Z/d)^3 with f(v) = a (mod d).
// Requires dim(f) == 3.
std::vector<Vec3> residue_vectors(const GramForm& f, int64_t d, int64_t a);

// Scaling transfer matrices from source into target: all T (mod d) with
// T^t * M_target * T == d^2 * M_source. Requires both forms ternary.
std::vector<Mat3> transfer_matrices(const GramForm& target, const GramForm& source,
                                    int64_t d);

// mask[v1 + d*(v2 + d*v3)] == true when some transfer matrix T sends v to
// 0 (mod d); such v are the residues from which a representation by `source`
// descends to one by `target`.
std::vector<bool> good_vector_mask(const GramForm& target, const GramForm& source,
                                   int64_t d);

// True when every v in R(source, d, a) is good for the pair (target, source):
// any n = a (mod d) represented by `source` is then represented by `target`.
bool precedes(const GramForm& source, const GramForm& target, int64_t d, int64_t a);

struct TransferWitness {
  Vec3 coset{0, 0, 0};
  bool good = false;
  Mat3 witness{};  // some T with T*coset = 0 (mod d); valid only when good
};

struct TransferCertificateData {
  int64_t d = 1;
  int64_t a = 0;
  int64_t good_count = 0;
  int64_t total_count = 0;
  std::vector<TransferWitness> cosets;  // one entry per vector of R(source, d, a)
  bool relation() const { return good_count == total_count; }
};

// Per-coset record of the precedes test, with one explicit witness matrix
// for every good coset. relation() reproduces precedes(source, target, d, a).
TransferCertificateData good_vectors(const GramForm& target, const GramForm& source,
                                     int64_t d, int64_t a);

// Residues a mod d for which every genus mate precedes the distinguished
// representative: n = a (mod d) represented by any genus member is then
// represented by the representative itself.
std::set<int64_t> good_residue_set(const GenusData& genus, int64_t d);

struct TransferReport {
  int64_t checked = 0;
  std::vector<int64_t> mismatches;  // n represented by source but not target
  bool ok() const { return mismatches.empty(); }
};

// Exhaustive check to `bound`: every n = a (mod d), a in residues, that the
// source form represents must be represented by the target form.
TransferReport verify_transfer(const GramForm& source, const GramForm& target,
                               int64_t d, const std::vector<int64_t>& residues,
                               int64_t bound);

}  // namespace qpu
