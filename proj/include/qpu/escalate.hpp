#pragma once
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpu/forms.hpp"

namespace qpu {

// A diagonal form represents every prime if and only if it represents these.
inline constexpr std::array<int64_t, 10> kCriterionPrimes = {2, 3, 5, 7, 13, 17, 23, 41, 43, 67};

// Does f represent every entry of kCriterionPrimes?
bool criterion_check(const DiagonalForm& f);

// Smallest prime f fails to represent, or nullopt when f represents every
// prime. Any diagonal form missing some prime misses one of the criterion
// primes, so the search space is finite.
std::optional<int64_t> prime_truant(const DiagonalForm& f);

// Smallest missed prime <= prime_bound, found by an exhaustive sieve scan
// (no reliance on the criterion set). prime_bound must be at least 67.
std::optional<int64_t> prime_truant(const DiagonalForm& f, int64_t prime_bound,
                                    int threads = 1);

bool is_prime_universal(const DiagonalForm& f);

struct UniversalityVerdict {
  bool criterion = false;                  // represents all criterion primes
  std::vector<int64_t> missed_criterion;   // criterion primes not represented
  std::optional<int64_t> audit_miss;       // smallest missed prime <= audit bound
  // A passing criterion alongside a missed prime would falsify the
  // classification; it must never occur.
  bool contradiction() const { return criterion && audit_miss.has_value(); }
};

UniversalityVerdict universality_verdict(const DiagonalForm& f, int64_t audit_bound,
                                         int threads = 1);

// No proper sub-multiset of the coefficients is itself prime-universal.
// Throws Precondition when f is not prime-universal.
bool is_proper(const DiagonalForm& f);

struct RepetitionResult {
  // Smallest count k of extra copies of `a` that makes the prefix represent p.
  std::optional<int64_t> k_found;
  // If no such k: coefficients b in (a, p] with p represented by prefix+{a,b}.
  std::vector<int64_t> b_raw;
  // b_raw entries whose extended form has no prime-universal proper
  // sub-multiset (extensions that stay proper candidates).
  std::vector<int64_t> b_allowed;
};

// Preconditions: prefix and prefix+{a} share the same prime truant p.
RepetitionResult resolve_repetition(const DiagonalForm& prefix, int64_t a, int64_t p);

enum class NodeStatus {
  ProperLeaf,      // prime-universal, no prime-universal proper sub-multiset
  ImproperLeaf,    // prime-universal with a prime-universal proper sub-multiset
  TruantAdvanced,  // not prime-universal; truant exceeds the parent's
  TruantStuck,     // not prime-universal; truant equals the parent's
};
std::string status_name(NodeStatus s);

struct EscalationNode {
  std::vector<int64_t> coeffs;  // sorted ascending; empty at the root
  std::optional<int64_t> truant;
  NodeStatus status = NodeStatus::TruantAdvanced;
  int parent = -1;
  std::vector<int> children;
  int rank() const { return (int)coeffs.size(); }
};

struct EscalationTree {
  std::vector<EscalationNode> nodes;  // breadth-first order; nodes[0] is the root
  int max_rank = 0;
  // Prime-universal proper leaves of the given rank, sorted.
  std::vector<DiagonalForm> proper(int rank) const;
  // Non-universal nodes of the given rank, sorted.
  std::vector<DiagonalForm> unresolved(int rank) const;
};

// Breadth-first escalation from the empty form: every node failing
// universality gains children a in [last coefficient, truant]. Every sorted
// coefficient multiset is generated at most once, and every prime-universal
// diagonal form of rank <= max_rank has its sorted prefix chain in the tree.
EscalationTree escalate_tree(int max_rank);

struct AuditResult {
  int64_t nodes_checked = 0;
  // Forms where the criterion-primes check and an exhaustive sieve scan to
  // `bound` disagree about missing primes.
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Rebuilds each node's represented set incrementally (one bit-sieve layer per
// added coefficient) and cross-checks criterion_check against all primes to
// `bound` for every node.
AuditResult audit_tree(const EscalationTree& tree, int64_t bound, int threads = 1);

}  // namespace qpu
