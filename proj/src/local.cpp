#include "qpu/local.hpp"

#include <algorithm>

#include "qpu/primes.hpp"
#include "qpu/sieve.hpp"

namespace qpu {

namespace {

struct State {
  std::array<int64_t, kMaxRank> u;
};

int ord_or_k(int64_t value, int64_t p, int k) {
  if (value == 0) return k;
  int v = 0;
  while (value % p == 0) { value /= p; ++v; }
  return std::min(v, k);
}

// Primitive solvability of Q(u) = m over the p-adic integers: breadth-first
// refinement of primitive solutions modulo p^k with quadratic-lifting
// acceptance. Depth is capped via the valuation of det, which bounds the
// gradient valuation at any primitive vector.
bool primitive_represents(const GramForm& f, int64_t m, int64_t p) {
  const int dim = f.dim();
  const int64_t det = f.determinant();
  const int extra = (p == 2) ? 2 : 0;
  const int cap = 2 * ord_p(det, p) + 1 + extra;

  std::vector<State> states;
  int64_t pk = p;
  // Level 1: primitive residues with Q = m (mod p).
  {
    std::vector<int64_t> u(dim, 0);
    while (true) {
      bool zero = true;
      for (int i = 0; i < dim; ++i)
        if (u[(size_t)i] % p != 0) { zero = false; break; }
      if (!zero) {
        i128 q = 0;
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) q += (i128)f.at(i, j) * u[(size_t)i] * u[(size_t)j];
        if ((int64_t)(((q - m) % p + p) % p) == 0) {
          State s{};
          for (int i = 0; i < dim; ++i) s.u[(size_t)i] = u[(size_t)i];
          states.push_back(s);
        }
      }
      int i = 0;
      while (i < dim && ++u[(size_t)i] == p) u[(size_t)i++] = 0;
      if (i == dim) break;
    }
  }

  for (int k = 1; k <= cap; ++k, pk *= p) {
    std::vector<State> next;
    for (const State& s : states) {
      // Gradient valuation from M*u mod p^k.
      int v = k;
      for (int i = 0; i < dim; ++i) {
        i128 w = 0;
        for (int j = 0; j < dim; ++j) w += (i128)f.at(i, j) * s.u[(size_t)j];
        int64_t wm = (int64_t)(((w % pk) + pk) % pk);
        v = std::min(v, ord_or_k(wm, p, k));
      }
      if (v < k && k >= 2 * v + 1 + extra) return true;
      if (k == cap) continue;  // undecidable states past the cap cannot be primitive
      // Children u + p^k * e, filtered by the congruence mod p^{k+1}.
      const int64_t pk1 = pk * p;
      std::vector<int64_t> e((size_t)dim, 0);
      while (true) {
        State c = s;
        for (int i = 0; i < dim; ++i) c.u[(size_t)i] += pk * e[(size_t)i];
        i128 q = 0;
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) q += (i128)f.at(i, j) * c.u[(size_t)i] * c.u[(size_t)j];
        if ((int64_t)(((q - m) % pk1 + pk1) % pk1) == 0) next.push_back(c);
        int i = 0;
        while (i < dim && ++e[(size_t)i] == p) e[(size_t)i++] = 0;
        if (i == dim) break;
      }
    }
    if (next.size() > 2000000) throw Error(ErrorKind::Capacity, "local solver state explosion");
    states = std::move(next);
    if (states.empty()) return false;
  }
  return false;
}

}  // namespace

bool local_represents(const GramForm& f, int64_t n, int64_t p) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  if (p < 2 || !is_prime(p)) throw Error(ErrorKind::Precondition, "p must be prime");
  if (n == 0) return true;
  int64_t m = n;
  while (true) {
    if (primitive_represents(f, m, p)) return true;
    if (m % (p * p) == 0) m /= p * p; else return false;
  }
}

bool locally_represented_everywhere(const GramForm& f, int64_t n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  if (n == 0) return true;
  int64_t d = 2 * f.determinant();
  for (int64_t p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    if (!local_represents(f, n, p)) return false;
  }
  if (d > 1 && !local_represents(f, n, d)) return false;
  return true;
}

bool genus_represents(const GenusData& g, int64_t n) {
  if (represents_direct(g.rep, n)) return true;
  for (const auto& mate : g.mates)
    if (represents_direct(mate, n)) return true;
  return false;
}

LocalCache::LocalCache(GramForm f) : f_(std::move(f)) {}

bool LocalCache::represents(int64_t n, int64_t p) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  if (n == 0) return true;
  auto mod_it = modulus_.find(p);
  if (mod_it == modulus_.end()) {
    const int extra = (p == 2) ? 2 : 0;
    int cap = 2 * ord_p(f_.determinant(), p) + 1 + extra;
    int64_t pk = 1;
    for (int i = 0; i < cap; ++i) pk *= p;
    mod_it = modulus_.emplace(p, pk).first;
    memo_.emplace(p, std::vector<int8_t>((size_t)pk, -1));
  }
  const int64_t pK = mod_it->second;
  auto& table = memo_[p];
  int64_t m = n;
  while (true) {
    int64_t key = m % pK;
    if (table[(size_t)key] < 0)
      table[(size_t)key] = primitive_represents(f_, key, p) ? 1 : 0;
    if (table[(size_t)key]) return true;
    if (m % (p * p) == 0) m /= p * p; else return false;
  }
}

}  // namespace qpu
