#include "qpu/escalate.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "qpu/bitset.hpp"
#include "qpu/primes.hpp"
#include "qpu/sieve.hpp"

namespace qpu {

namespace {

const std::vector<int64_t>& primes_through_67() {
  static const std::vector<int64_t> ps = primes_upto(67);
  return ps;
}

std::optional<int64_t> truant_of(const std::vector<int64_t>& coeffs) {
  if (coeffs.empty()) return 2;
  DiagonalForm f(coeffs);
  for (int64_t p : primes_through_67())
    if (!represents_direct(f, p)) return p;
  return std::nullopt;
}

}  // namespace

bool criterion_check(const DiagonalForm& f) {
  for (int64_t p : kCriterionPrimes)
    if (!represents_direct(f, p)) return false;
  return true;
}

std::optional<int64_t> prime_truant(const DiagonalForm& f) {
  return truant_of(f.coeffs());
}

std::optional<int64_t> prime_truant(const DiagonalForm& f, int64_t prime_bound,
                                    int threads) {
  if (prime_bound < 67)
    throw Error(ErrorKind::Precondition, "prime bound must be at least 67");
  const auto sieve = build_sieve(f, prime_bound, threads);
  const auto missed = sieve.missed_primes();
  if (missed.empty()) return std::nullopt;
  return missed.front();
}

bool is_prime_universal(const DiagonalForm& f) { return !prime_truant(f).has_value(); }

UniversalityVerdict universality_verdict(const DiagonalForm& f, int64_t audit_bound,
                                         int threads) {
  UniversalityVerdict v;
  v.criterion = true;
  for (int64_t p : kCriterionPrimes) {
    if (!represents_direct(f, p)) {
      v.criterion = false;
      v.missed_criterion.push_back(p);
    }
  }
  v.audit_miss = prime_truant(f, audit_bound, threads);
  return v;
}

bool is_proper(const DiagonalForm& f) {
  if (!is_prime_universal(f))
    throw Error(ErrorKind::Precondition, "properness is defined for prime-universal forms");
  for (const auto& sub : sub_multisets(f))
    if (is_prime_universal(sub)) return false;
  return true;
}

RepetitionResult resolve_repetition(const DiagonalForm& prefix, int64_t a, int64_t p) {
  if (a < 1) throw Error(ErrorKind::Precondition, "appended coefficient must be positive");
  auto t0 = prime_truant(prefix);
  if (!t0 || *t0 != p)
    throw Error(ErrorKind::Precondition, "prefix truant is not " + std::to_string(p));
  {
    std::vector<int64_t> c = prefix.coeffs();
    c.push_back(a);
    auto t1 = truant_of(c);
    if (!t1 || *t1 != p)
      throw Error(ErrorKind::Precondition, "prefix with appended coefficient does not keep truant " +
                                               std::to_string(p));
  }
  RepetitionResult result;
  const int64_t kmax = (p + a - 1) / a;
  for (int64_t k = 1; k <= kmax; ++k) {
    std::vector<int64_t> c = prefix.coeffs();
    for (int64_t i = 0; i < k; ++i) c.push_back(a);
    if ((int)c.size() > kMaxRank)
      throw Error(ErrorKind::Capacity, "repetition chain exceeds supported rank");
    if (represents_direct(DiagonalForm(c), p)) {
      result.k_found = k;
      return result;
    }
  }
  for (int64_t b = a + 1; b <= p; ++b) {
    std::vector<int64_t> c = prefix.coeffs();
    c.push_back(a);
    c.push_back(b);
    if ((int)c.size() > kMaxRank)
      throw Error(ErrorKind::Capacity, "extension exceeds supported rank");
    DiagonalForm f(c);
    if (!represents_direct(f, p)) continue;
    result.b_raw.push_back(b);
    bool improper = false;
    for (const auto& sub : sub_multisets(f))
      if (is_prime_universal(sub)) { improper = true; break; }
    if (!improper) result.b_allowed.push_back(b);
  }
  return result;
}

std::string status_name(NodeStatus s) {
  switch (s) {
    case NodeStatus::ProperLeaf: return "proper-leaf";
    case NodeStatus::ImproperLeaf: return "improper-leaf";
    case NodeStatus::TruantAdvanced: return "truant-advanced";
    case NodeStatus::TruantStuck: return "truant-stuck";
  }
  return "?";
}

EscalationTree escalate_tree(int max_rank) {
  if (max_rank < 1 || max_rank > kMaxRank)
    throw Error(ErrorKind::Precondition, "max rank must be in [1, " + std::to_string(kMaxRank) + "]");
  EscalationTree tree;
  tree.max_rank = max_rank;
  EscalationNode root;
  root.truant = 2;
  root.status = NodeStatus::TruantAdvanced;
  tree.nodes.push_back(std::move(root));
  for (size_t qi = 0; qi < tree.nodes.size(); ++qi) {
    // Copy what we need: growing the vector invalidates references.
    const std::vector<int64_t> coeffs = tree.nodes[qi].coeffs;
    const std::optional<int64_t> truant = tree.nodes[qi].truant;
    if (!truant) continue;                          // universal: leaf
    if ((int)coeffs.size() >= max_rank) continue;   // rank cap
    const int64_t a_lo = coeffs.empty() ? 1 : coeffs.back();
    for (int64_t a = a_lo; a <= *truant; ++a) {
      EscalationNode child;
      child.coeffs = coeffs;
      child.coeffs.push_back(a);
      child.parent = (int)qi;
      child.truant = truant_of(child.coeffs);
      if (!child.truant) {
        child.status = is_proper(DiagonalForm(child.coeffs)) ? NodeStatus::ProperLeaf
                                                             : NodeStatus::ImproperLeaf;
      } else {
        child.status = (*child.truant > *truant) ? NodeStatus::TruantAdvanced
                                                 : NodeStatus::TruantStuck;
      }
      tree.nodes.push_back(std::move(child));
      tree.nodes[qi].children.push_back((int)tree.nodes.size() - 1);
      if (tree.nodes.size() > 2000000)
        throw Error(ErrorKind::Capacity, "escalation tree exceeds supported size");
    }
  }
  return tree;
}

std::vector<DiagonalForm> EscalationTree::proper(int rank) const {
  std::vector<DiagonalForm> out;
  for (const auto& n : nodes)
    if (n.status == NodeStatus::ProperLeaf && n.rank() == rank && !n.truant)
      out.emplace_back(n.coeffs);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiagonalForm> EscalationTree::unresolved(int rank) const {
  std::vector<DiagonalForm> out;
  for (const auto& n : nodes)
    if (n.truant && n.rank() == rank) out.emplace_back(n.coeffs);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// dst |= { existing + a*x^2 } for all x with a*x^2 <= bound.
void add_square_layer(BitArray& dst, const BitArray& src, int64_t a) {
  const int64_t bound = dst.bound();
  for (int64_t x = 1; ; ++x) {
    i128 shift = (i128)a * x * x;
    if (shift > bound) break;
    dst.or_shifted(src, (int64_t)shift);
  }
}

struct AuditShared {
  const EscalationTree* tree;
  const std::vector<int64_t>* primes;
  int64_t bound;
  std::mutex mu;
  std::vector<std::string> mismatches;
  int64_t checked = 0;
};

void audit_node(AuditShared& shared, int node_index, const BitArray& bits,
                std::vector<std::string>& local_mismatch, int64_t& local_checked) {
  const EscalationNode& node = shared.tree->nodes[(size_t)node_index];
  bool crit = node.coeffs.empty() ? false : criterion_check(DiagonalForm(node.coeffs));
  bool missed = false;  // stays false only after scanning every prime to the bound
  for (int64_t p : *shared.primes) {
    if (!bits.test(p)) {
      missed = true;
      break;
    }
  }
  if (crit == missed) {
    std::string label = node.coeffs.empty() ? std::string("<empty>") : DiagonalForm(node.coeffs).str();
    local_mismatch.push_back(label);
  }
  ++local_checked;
  for (int child : node.children) {
    const auto& ccoeffs = shared.tree->nodes[(size_t)child].coeffs;
    BitArray cbits = bits;
    add_square_layer(cbits, bits, ccoeffs.back());
    audit_node(shared, child, cbits, local_mismatch, local_checked);
  }
}

}  // namespace

AuditResult audit_tree(const EscalationTree& tree, int64_t bound, int threads) {
  if (bound < 67) throw Error(ErrorKind::Precondition, "audit bound must cover the criterion primes");
  AuditShared shared;
  shared.tree = &tree;
  const std::vector<int64_t> primes = primes_upto(bound);
  shared.primes = &primes;
  shared.bound = bound;

  // Split the walk at depth 2: audit shallow nodes serially, then farm the
  // depth-2 subtrees out to worker threads.
  struct Job {
    int node;
    BitArray bits;
  };
  std::vector<Job> jobs;
  std::vector<std::string> mismatches;
  int64_t checked = 0;

  BitArray root_bits(bound);
  root_bits.set(0);
  {
    // root: the empty form misses every prime and fails the criterion
    const EscalationNode& root = tree.nodes[0];
    bool missed = true;
    bool crit = false;
    if (crit == missed) mismatches.push_back("<empty>");
    ++checked;
    for (int c1 : root.children) {
      const EscalationNode& n1 = tree.nodes[(size_t)c1];
      BitArray b1 = root_bits;
      add_square_layer(b1, root_bits, n1.coeffs.back());
      bool crit1 = criterion_check(DiagonalForm(n1.coeffs));
      bool missed1 = false;
      for (int64_t p : primes)
        if (!b1.test(p)) { missed1 = true; break; }
      if (crit1 == missed1) mismatches.push_back(DiagonalForm(n1.coeffs).str());
      ++checked;
      for (int c2 : n1.children) {
        const EscalationNode& n2 = tree.nodes[(size_t)c2];
        BitArray b2 = b1;
        add_square_layer(b2, b1, n2.coeffs.back());
        jobs.push_back(Job{c2, std::move(b2)});
      }
    }
  }

  const int nthreads = std::max(1, threads);
  std::vector<std::thread> pool;
  std::mutex take_mutex;
  size_t next_job = 0;
  auto worker = [&]() {
    std::vector<std::string> local_mismatch;
    int64_t local_checked = 0;
    while (true) {
      size_t mine;
      {
        std::lock_guard<std::mutex> lock(take_mutex);
        if (next_job >= jobs.size()) break;
        mine = next_job++;
      }
      audit_node(shared, jobs[mine].node, jobs[mine].bits, local_mismatch, local_checked);
    }
    std::lock_guard<std::mutex> lock(shared.mu);
    shared.mismatches.insert(shared.mismatches.end(), local_mismatch.begin(), local_mismatch.end());
    shared.checked += local_checked;
  };
  if (nthreads == 1) {
    worker();
  } else {
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  AuditResult result;
  result.mismatches = std::move(mismatches);
  result.mismatches.insert(result.mismatches.end(), shared.mismatches.begin(),
                           shared.mismatches.end());
  std::sort(result.mismatches.begin(), result.mismatches.end());
  result.nodes_checked = checked + shared.checked;
  return result;
}

}  // namespace qpu
