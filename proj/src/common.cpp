#include "qpu/common.hpp"

#include <numeric>

namespace qpu {

int64_t isqrt(int64_t n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "isqrt of negative value");
  if (n < 2) return n;
  // Newton iteration on integers; converges from above.
  int64_t x = n;
  int64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  while ((i128)(x + 1) * (x + 1) <= n) ++x;
  while ((i128)x * x > n) --x;
  return x;
}

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

int64_t lcm64(int64_t a, int64_t b) {
  if (a == 0 || b == 0) return 0;
  int64_t g = std::gcd(a, b);
  i128 r = (i128)(a / g) * b;
  if (r > INT64_MAX || r < -(i128)INT64_MAX)
    throw Error(ErrorKind::Capacity, "lcm overflow");
  int64_t v = (int64_t)r;
  return v < 0 ? -v : v;
}

int ord_p(int64_t n, int64_t p) {
  if (p < 2) throw Error(ErrorKind::Precondition, "ord_p needs p >= 2");
  if (n == 0) return 1 << 30;
  if (n < 0) n = -n;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

int64_t pow_i64(int64_t b, int e) {
  if (e < 0) throw Error(ErrorKind::Precondition, "negative exponent");
  i128 r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > INT64_MAX || r < INT64_MIN)
      throw Error(ErrorKind::Capacity, "pow_i64 overflow");
  }
  return (int64_t)r;
}

std::string i128_to_string(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // Avoid overflow on the most negative value by peeling one digit first.
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  std::string s;
  while (u > 0) {
    s.push_back((char)('0' + (int)(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  std::string out(s.rbegin(), s.rend());
  return out;
}

}  // namespace qpu
