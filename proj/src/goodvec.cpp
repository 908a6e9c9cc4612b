#include "qpu/goodvec.hpp"

#include <algorithm>
#include <map>

#include "qpu/sieve.hpp"

namespace qpu {

namespace {

// Cofactor bound: x_i^2 <= n * adj(M)_ii / det(M) for any x with x M x^t = n.
int64_t coord_bound(const GramForm& f, int i, int64_t n) {
  const int dim = f.dim();
  i128 adj = 0;
  if (dim == 1) {
    adj = 1;
  } else if (dim == 2) {
    adj = f.at(1 - i, 1 - i);
  } else {
    int r[2], c[2], k = 0;
    for (int j = 0; j < 3; ++j)
      if (j != i) { r[k] = j; c[k] = j; ++k; }
    adj = (i128)f.at(r[0], c[0]) * f.at(r[1], c[1]) -
          (i128)f.at(r[0], c[1]) * f.at(r[1], c[0]);
  }
  i128 num = (i128)n * adj;
  int64_t det = f.determinant();
  int64_t q = (int64_t)(num / det);
  return isqrt(q) + 1;
}

}  // namespace

namespace {

// Exact integer roots of a*x^2 + b*x + c = 0 with a > 0.
void quadratic_roots(i128 a, i128 b, i128 c, std::vector<int64_t>& roots) {
  roots.clear();
  i128 disc = b * b - 4 * a * c;
  if (disc < 0) return;
  i128 s = 0;
  {
    // floor sqrt of a nonnegative i128
    i128 x = 1;
    while (x * x < disc) x <<= 1;
    i128 lo = x >> 1, hi = x;
    while (lo < hi) {
      i128 mid = lo + (hi - lo + 1) / 2;
      if (mid * mid <= disc) lo = mid; else hi = mid - 1;
    }
    s = lo;
  }
  if (s * s != disc) return;
  for (i128 sg : {s, -s}) {
    i128 num = -b + sg;
    if (num % (2 * a) == 0) roots.push_back((int64_t)(num / (2 * a)));
    if (sg == 0) break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
}

}  // namespace

std::vector<std::vector<int64_t>> all_representations(const GramForm& f, int64_t n) {
  if (f.dim() > 3) throw Error(ErrorKind::Precondition, "dimension above 3 unsupported");
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  const int dim = f.dim();
  std::vector<std::vector<int64_t>> out;
  std::vector<int64_t> roots;
  if (dim == 1) {
    quadratic_roots(f.at(0, 0), 0, -n, roots);
    for (int64_t x : roots) out.push_back({x});
  } else if (dim == 2) {
    const int64_t by = coord_bound(f, 1, n);
    for (int64_t y = -by; y <= by; ++y) {
      quadratic_roots(f.at(0, 0), 2 * ((i128)f.at(0, 1) * y),
                      (i128)f.at(1, 1) * y * y - n, roots);
      for (int64_t x : roots) out.push_back({x, y});
    }
  } else {
    const int64_t by = coord_bound(f, 1, n);
    const int64_t bz = coord_bound(f, 2, n);
    for (int64_t z = -bz; z <= bz; ++z) {
      for (int64_t y = -by; y <= by; ++y) {
        i128 b = 2 * ((i128)f.at(0, 1) * y + (i128)f.at(0, 2) * z);
        i128 c = (i128)f.at(1, 1) * y * y + (i128)f.at(2, 2) * z * z +
                 2 * (i128)f.at(1, 2) * y * z - n;
        quadratic_roots(f.at(0, 0), b, c, roots);
        for (int64_t x : roots) out.push_back({x, y, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vec3> residue_vectors(const GramForm& f, int64_t d, int64_t a) {
  if (f.dim() != 3) throw Error(ErrorKind::Precondition, "residue vectors need a ternary form");
  if (d < 1) throw Error(ErrorKind::Precondition, "modulus must be positive");
  const int64_t aa = ((a % d) + d) % d;
  std::vector<Vec3> out;
  Vec3 v{0, 0, 0};
  while (true) {
    i128 q = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) q += (i128)f.at(i, j) * v[(size_t)i] * v[(size_t)j];
    if ((int64_t)(((q - aa) % d + d) % d) == 0) out.push_back(v);
    int i = 0;
    while (i < 3 && ++v[(size_t)i] == d) v[(size_t)i++] = 0;
    if (i == 3) break;
  }
  return out;
}

std::vector<Mat3> transfer_matrices(const GramForm& target, const GramForm& source,
                                    int64_t d) {
  if (target.dim() != 3 || source.dim() != 3)
    throw Error(ErrorKind::Precondition, "transfer matrices need ternary forms");
  if (d < 1 || d > 64)
    throw Error(ErrorKind::Capacity, "transfer modulus above 64 unsupported");
  std::map<int64_t, std::vector<std::vector<int64_t>>> reps;
  auto columns_for = [&](int64_t value) -> const std::vector<std::vector<int64_t>>& {
    auto it = reps.find(value);
    if (it == reps.end()) it = reps.emplace(value, all_representations(target, value)).first;
    return it->second;
  };
  auto dot = [&](const std::vector<int64_t>& x, const std::vector<int64_t>& y) {
    i128 s = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += (i128)target.at(i, j) * x[(size_t)i] * y[(size_t)j];
    return s;
  };
  const i128 dd = (i128)d * d;
  std::set<Mat3> seen;
  std::vector<Mat3> out;
  const auto& c1 = columns_for(d * d * source.at(0, 0));
  const auto& c2 = columns_for(d * d * source.at(1, 1));
  const auto& c3 = columns_for(d * d * source.at(2, 2));
  for (const auto& t1 : c1) {
    for (const auto& t2 : c2) {
      if (dot(t1, t2) != dd * source.at(0, 1)) continue;
      for (const auto& t3 : c3) {
        if (dot(t1, t3) != dd * source.at(0, 2)) continue;
        if (dot(t2, t3) != dd * source.at(1, 2)) continue;
        Mat3 m;
        for (int i = 0; i < 3; ++i) {
          m[(size_t)i][0] = ((t1[(size_t)i] % d) + d) % d;
          m[(size_t)i][1] = ((t2[(size_t)i] % d) + d) % d;
          m[(size_t)i][2] = ((t3[(size_t)i] % d) + d) % d;
        }
        if (seen.insert(m).second) out.push_back(m);
      }
    }
  }
  return out;
}

std::vector<bool> good_vector_mask(const GramForm& target, const GramForm& source,
                                   int64_t d) {
  const auto mats = transfer_matrices(target, source, d);
  std::vector<bool> mask((size_t)(d * d * d), false);
  // Factor d; solve T v = 0 prime-by-prime and recombine.
  std::vector<int64_t> ps;
  {
    int64_t m = d;
    for (int64_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        ps.push_back(p);
        while (m % p == 0) m /= p;
      }
    if (m > 1) ps.push_back(m);
  }
  for (const auto& T : mats) {
    // Prime-power kernels; d is squarefree in every use here, but handle
    // prime powers directly for safety.
    std::vector<std::vector<Vec3>> kernels;
    std::vector<int64_t> moduli;
    for (int64_t p : ps) {
      int64_t q = 1;
      int64_t m = d;
      while (m % p == 0) { m /= p; q *= p; }
      std::vector<Vec3> ker;
      Vec3 w{0, 0, 0};
      while (true) {
        bool zero = true;
        for (int i = 0; i < 3 && zero; ++i) {
          i128 s = 0;
          for (int j = 0; j < 3; ++j) s += (i128)T[(size_t)i][(size_t)j] * w[(size_t)j];
          if (s % q != 0) zero = false;
        }
        if (zero) ker.push_back(w);
        int i = 0;
        while (i < 3 && ++w[(size_t)i] == q) w[(size_t)i++] = 0;
        if (i == 3) break;
      }
      kernels.push_back(std::move(ker));
      moduli.push_back(q);
    }
    // CRT-recombine one choice from each kernel into a vector mod d.
    std::vector<size_t> idx(kernels.size(), 0);
    while (true) {
      Vec3 v{0, 0, 0};
      for (int c = 0; c < 3; ++c) {
        // CRT: find v_c mod d congruent to each kernel choice mod its q.
        int64_t x = 0, mod = 1;
        for (size_t t = 0; t < kernels.size(); ++t) {
          int64_t q = moduli[t];
          int64_t r = kernels[t][idx[t]][(size_t)c];
          // solve x' = x (mod mod), x' = r (mod q)
          int64_t step = mod;
          while (x % q != r % q) x += step;
          mod *= q;
        }
        v[(size_t)c] = x % d;
      }
      mask[(size_t)(v[0] + d * (v[1] + d * v[2]))] = true;
      size_t t = 0;
      while (t < kernels.size() && ++idx[t] == kernels[t].size()) idx[t++] = 0;
      if (t == kernels.size()) break;
    }
  }
  return mask;
}

bool precedes(const GramForm& source, const GramForm& target, int64_t d, int64_t a) {
  const auto mask = good_vector_mask(target, source, d);
  for (const auto& v : residue_vectors(source, d, a))
    if (!mask[(size_t)(v[0] + d * (v[1] + d * v[2]))]) return false;
  return true;
}

TransferCertificateData good_vectors(const GramForm& target, const GramForm& source,
                                     int64_t d, int64_t a) {
  TransferCertificateData cert;
  cert.d = d;
  cert.a = ((a % d) + d) % d;
  const auto mats = transfer_matrices(target, source, d);
  for (const auto& v : residue_vectors(source, d, cert.a)) {
    TransferWitness w;
    w.coset = v;
    for (const auto& T : mats) {
      bool zero = true;
      for (int i = 0; i < 3 && zero; ++i) {
        i128 s = 0;
        for (int j = 0; j < 3; ++j) s += (i128)T[(size_t)i][(size_t)j] * v[(size_t)j];
        if (((s % d) + d) % d != 0) zero = false;
      }
      if (zero) {
        w.good = true;
        w.witness = T;
        break;
      }
    }
    ++cert.total_count;
    if (w.good) ++cert.good_count;
    cert.cosets.push_back(w);
  }
  return cert;
}

std::set<int64_t> good_residue_set(const GenusData& genus, int64_t d) {
  GramForm target(genus.rep);
  std::set<int64_t> good;
  for (int64_t a = 0; a < d; ++a) good.insert(a);
  for (const auto& mate : genus.mates) {
    const auto mask = good_vector_mask(target, mate, d);
    std::vector<bool> bad((size_t)d, false);
    Vec3 v{0, 0, 0};
    while (true) {
      i128 q = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) q += (i128)mate.at(i, j) * v[(size_t)i] * v[(size_t)j];
      int64_t a = (int64_t)(((q % d) + d) % d);
      if (!mask[(size_t)(v[0] + d * (v[1] + d * v[2]))]) bad[(size_t)a] = true;
      int i = 0;
      while (i < 3 && ++v[(size_t)i] == d) v[(size_t)i++] = 0;
      if (i == 3) break;
    }
    for (int64_t a = 0; a < d; ++a)
      if (bad[(size_t)a]) good.erase(a);
  }
  return good;
}

TransferReport verify_transfer(const GramForm& source, const GramForm& target,
                               int64_t d, const std::vector<int64_t>& residues,
                               int64_t bound) {
  TransferReport report;
  std::set<int64_t> rs;
  for (int64_t r : residues) rs.insert(((r % d) + d) % d);
  RepresentationSieve src = build_sieve(source, bound);
  RepresentationSieve tgt = build_sieve(target, bound);
  for (int64_t n = 0; n <= bound; ++n) {
    if (!rs.count(n % d)) continue;
    if (!src.test(n)) continue;
    ++report.checked;
    if (!tgt.test(n)) report.mismatches.push_back(n);
  }
  return report;
}

}  // namespace qpu
