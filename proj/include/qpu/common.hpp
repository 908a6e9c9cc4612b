#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qpu {

using std::int64_t;
using i128 = __int128;

enum class ErrorKind {
  Malformed,               // unparseable input text
  NonpositiveCoefficient,  // diagonal coefficient <= 0
  Asymmetric,              // matrix input not symmetric
  NotPositiveDefinite,     // matrix input fails positivity
  DimensionMismatch,       // vector/matrix size disagreement
  Precondition,            // argument outside documented domain
  Capacity,                // request exceeds supported size
  Io,                      // file read/write failure
  Data,                    // embedded or on-disk data inconsistent
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Exact floor(sqrt(n)) for n >= 0; throws Precondition on negative input.
int64_t isqrt(int64_t n);

int64_t gcd64(int64_t a, int64_t b);
int64_t lcm64(int64_t a, int64_t b);

// Exponent of p in n (n != 0, p >= 2). ord_p(0) is defined as a large
// sentinel (1 << 30) so "p^k divides n" tests are uniform.
int ord_p(int64_t n, int64_t p);

// b^e with overflow check; throws Capacity on overflow.
int64_t pow_i64(int64_t b, int e);

std::string i128_to_string(i128 v);

}  // namespace qpu
