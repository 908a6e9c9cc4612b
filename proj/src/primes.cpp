#include "qpu/primes.hpp"

namespace qpu {

std::vector<int64_t> primes_upto(int64_t bound) {
  std::vector<int64_t> out;
  if (bound < 2) return out;
  if (bound > (int64_t)1 << 32)
    throw Error(ErrorKind::Capacity, "prime sieve bound too large");
  std::vector<bool> comp((size_t)bound + 1, false);
  for (int64_t i = 2; i <= bound; ++i) {
    if (!comp[(size_t)i]) {
      out.push_back(i);
      for (int64_t j = i * i; j <= bound; j += i) comp[(size_t)j] = true;
    }
  }
  return out;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (int64_t d = 3; (i128)d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

int64_t next_prime(int64_t n) {
  int64_t c = n < 2 ? 2 : n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

}  // namespace qpu
