#pragma once
#include <cstdint>
#include <vector>

#include "qpu/common.hpp"

namespace qpu {

// All primes <= bound, ascending. bound may be 0 or 1 (empty result).
std::vector<int64_t> primes_upto(int64_t bound);

bool is_prime(int64_t n);

// Smallest prime strictly greater than n.
int64_t next_prime(int64_t n);

}  // namespace qpu
