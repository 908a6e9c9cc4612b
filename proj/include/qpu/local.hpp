#pragma once
#include <map>
#include <string>
#include <vector>

#include "qpu/forms.hpp"

namespace qpu {

// Solvability of x M x^t = n over the p-adic integers. Exact: candidate
// solutions are refined modulo increasing powers of p and accepted once the
// standard quadratic lifting criterion applies; the search depth is bounded
// by the valuation of 2*det(M), which caps the valuation of the gradient at
// any primitive solution.
bool local_represents(const GramForm& f, int64_t n, int64_t p);

// True when n is represented by the p-adic completions for every prime
// dividing 2*det (all other completions are automatically universal for
// values of a positive-definite integral form).
bool locally_represented_everywhere(const GramForm& f, int64_t n);

struct GenusData {
  DiagonalForm rep{{1}};            // diagonal representative
  std::vector<GramForm> mates;      // other classes in the genus
  int class_number() const { return 1 + (int)mates.size(); }
};

// Represented by the representative or by any mate (exact search).
bool genus_represents(const GenusData& g, int64_t n);

// Per-prime memo so sieve-scale scans stay fast.
class LocalCache {
 public:
  explicit LocalCache(GramForm f);
  bool represents(int64_t n, int64_t p);

 private:
  GramForm f_;
  std::map<int64_t, std::vector<int8_t>> memo_;  // p -> table over m mod p^K
  std::map<int64_t, int64_t> modulus_;           // p -> p^K
};

}  // namespace qpu
