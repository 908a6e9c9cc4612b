#include "qpu/sieve.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <thread>

#include "qpu/primes.hpp"

namespace qpu {

namespace {

// Exact floor sqrt for unsigned __int128.
i128 isqrt128(i128 n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "isqrt of negative value");
  if (n == 0) return 0;
  int bits = 0;
  for (i128 v = n; v > 0; v >>= 1) ++bits;
  i128 x = (i128)1 << ((bits + 1) / 2);  // starts at or above the true root
  for (int i = 0; i < 200; ++i) {
    i128 nx = (x + n / x) / 2;
    if (nx >= x) break;
    x = nx;
  }
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

bool dfs_diagonal(const std::vector<int64_t>& coeffs, int idx, int64_t rem,
                  std::vector<int64_t>& witness) {
  if (idx < 0) return rem == 0;
  const int64_t a = coeffs[(size_t)idx];
  for (int64_t x = isqrt(rem / a); x >= 0; --x) {
    witness[(size_t)idx] = x;
    if (dfs_diagonal(coeffs, idx - 1, rem - a * x * x, witness)) return true;
  }
  return false;
}

std::optional<FormValue> direct_diagonal(const std::vector<int64_t>& coeffs, int64_t n) {
  std::vector<int64_t> witness(coeffs.size(), 0);
  if (dfs_diagonal(coeffs, (int)coeffs.size() - 1, n, witness))
    return FormValue{n, witness};
  return std::nullopt;
}

// Solves a*x^2 + b*x + c == 0 over the integers; appends solutions to out.
void solve_quadratic(int64_t a, i128 b, i128 c, std::vector<int64_t>& out) {
  i128 disc = b * b - 4 * (i128)a * c;
  if (disc < 0) return;
  i128 t = isqrt128(disc);
  if (t * t != disc) return;
  for (int sign = 0; sign < (t == 0 ? 1 : 2); ++sign) {
    i128 num = -b + (sign == 0 ? t : -t);
    if (num % (2 * (i128)a) == 0) {
      i128 x = num / (2 * (i128)a);
      out.push_back((int64_t)x);
    }
  }
}

std::optional<FormValue> direct_gram3(const GramForm& f, int64_t n) {
  const int64_t a = f.at(0, 0), b = f.at(0, 1), c = f.at(0, 2);
  const int64_t d = f.at(1, 1), e = f.at(1, 2), g = f.at(2, 2);
  const int64_t A2 = a * d - b * b;                 // positive (leading minor)
  const int64_t detM = f.determinant();             // positive
  const i128 an = (i128)a * n;
  int64_t zmax = (int64_t)isqrt128((i128)n * A2 / detM) + 1;
  for (int64_t z = -zmax; z <= zmax; ++z) {
    // Range of y with R(y,z) <= a*n, padded by 1 on both sides.
    const i128 B2 = 2 * ((i128)a * e - (i128)b * c) * z;
    const i128 C2 = ((i128)a * g - (i128)c * c) * z * z - an;
    i128 D2 = B2 * B2 - 4 * (i128)A2 * C2;
    if (D2 < 0) continue;
    i128 t = isqrt128(D2);
    int64_t ylo = (int64_t)((-B2 - t) / (2 * (i128)A2)) - 1;
    int64_t yhi = (int64_t)((-B2 + t) / (2 * (i128)A2)) + 1;
    for (int64_t y = ylo; y <= yhi; ++y) {
      const i128 B1 = 2 * ((i128)b * y + (i128)c * z);
      const i128 C1 = (i128)d * y * y + 2 * (i128)e * y * z + (i128)g * z * z - n;
      std::vector<int64_t> xs;
      solve_quadratic(a, B1, C1, xs);
      if (!xs.empty()) return FormValue{n, {xs.front(), y, z}};
    }
  }
  return std::nullopt;
}

std::optional<FormValue> direct_gram2(const GramForm& f, int64_t n) {
  const int64_t a = f.at(0, 0), b = f.at(0, 1), d = f.at(1, 1);
  const int64_t A2 = a * d - b * b;
  int64_t ymax = (int64_t)isqrt128((i128)n * a / A2) + 1;
  for (int64_t y = -ymax; y <= ymax; ++y) {
    std::vector<int64_t> xs;
    solve_quadratic(a, 2 * (i128)b * y, (i128)d * y * y - n, xs);
    if (!xs.empty()) return FormValue{n, {xs.front(), y}};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FormValue> represents_direct(const DiagonalForm& f, int64_t n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  return direct_diagonal(f.coeffs(), n);
}

std::optional<FormValue> represents_direct(const GramForm& f, int64_t n) {
  if (n < 0) throw Error(ErrorKind::Precondition, "negative target value");
  if (f.is_diagonal()) return direct_diagonal(f.diagonal(), n);
  switch (f.dim()) {
    case 1: return direct_diagonal(f.diagonal(), n);
    case 2: return direct_gram2(f, n);
    case 3: return direct_gram3(f, n);
    default:
      throw Error(ErrorKind::Capacity, "non-diagonal matrices supported up to dimension 3");
  }
}

std::vector<int64_t> RepresentationSieve::missed_primes() const {
  std::vector<int64_t> out;
  for (int64_t p : primes_upto(bound()))
    if (!bits_.test(p)) out.push_back(p);
  return out;
}

namespace {

// One diagonal layer: result = union over x >= 0 of (prev shifted by a*x^2).
void layer_diagonal(const BitArray& prev, BitArray& next, int64_t a, int threads) {
  next.or_with(prev);  // x = 0
  const int64_t bound = prev.bound();
  if (threads <= 1) {
    for (int64_t x = 1; a * x * x <= bound; ++x) next.or_shifted(prev, a * x * x);
    return;
  }
  std::vector<BitArray> parts;
  parts.reserve((size_t)threads);
  for (int t = 0; t < threads; ++t) parts.emplace_back(bound);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (int64_t x = 1 + t; a * x * x <= bound; x += threads)
        parts[(size_t)t].or_shifted(prev, a * x * x);
    });
  }
  for (auto& th : pool) th.join();
  for (auto& part : parts) next.or_with(part);
}

BitArray sieve_bits_diagonal(const std::vector<int64_t>& coeffs, int64_t bound, int threads) {
  BitArray cur(bound);
  cur.set(0);
  for (int64_t a : coeffs) {
    if (a > bound) continue;  // the layer can only add values past the bound
    BitArray next(bound);
    layer_diagonal(cur, next, a, threads);
    cur = std::move(next);
  }
  cur.mask_tail();
  return cur;
}

BitArray sieve_bits_gram3(const GramForm& f, int64_t bound) {
  const int64_t a = f.at(0, 0), b = f.at(0, 1), c = f.at(0, 2);
  const int64_t d = f.at(1, 1), e = f.at(1, 2), g = f.at(2, 2);
  const int64_t A2 = a * d - b * b;
  const int64_t detM = f.determinant();
  BitArray bits(bound);
  const i128 abound = (i128)a * bound;
  int64_t zmax = (int64_t)isqrt128((i128)bound * A2 / detM) + 1;
  for (int64_t z = -zmax; z <= zmax; ++z) {
    const i128 B2 = 2 * ((i128)a * e - (i128)b * c) * z;
    const i128 C2 = ((i128)a * g - (i128)c * c) * z * z - abound;
    i128 D2 = B2 * B2 - 4 * (i128)A2 * C2;
    if (D2 < 0) continue;
    i128 t = isqrt128(D2);
    int64_t ylo = (int64_t)((-B2 - t) / (2 * (i128)A2)) - 1;
    int64_t yhi = (int64_t)((-B2 + t) / (2 * (i128)A2)) + 1;
    for (int64_t y = ylo; y <= yhi; ++y) {
      const i128 B1 = 2 * ((i128)b * y + (i128)c * z);
      const i128 C1 = (i128)d * y * y + 2 * (i128)e * y * z + (i128)g * z * z;
      i128 D1 = B1 * B1 - 4 * (i128)a * (C1 - bound);
      if (D1 < 0) continue;
      i128 tx = isqrt128(D1);
      int64_t xlo = (int64_t)((-B1 - tx) / (2 * (i128)a)) - 1;
      int64_t xhi = (int64_t)((-B1 + tx) / (2 * (i128)a)) + 1;
      // Incremental evaluation along x: val(x+1) - val(x) = a(2x+1) + B1.
      i128 val = (i128)a * xlo * xlo + B1 * xlo + C1;
      i128 step = (i128)a * (2 * xlo + 1) + B1;
      for (int64_t x = xlo; x <= xhi; ++x) {
        if (val >= 0 && val <= bound) bits.set((int64_t)val);
        val += step;
        step += 2 * a;
      }
    }
  }
  bits.mask_tail();
  return bits;
}

BitArray sieve_bits_gram2(const GramForm& f, int64_t bound) {
  const int64_t a = f.at(0, 0), b = f.at(0, 1), d = f.at(1, 1);
  const int64_t A2 = a * d - b * b;
  BitArray bits(bound);
  int64_t ymax = (int64_t)isqrt128((i128)bound * a / A2) + 1;
  for (int64_t y = -ymax; y <= ymax; ++y) {
    const i128 B1 = 2 * (i128)b * y;
    const i128 C1 = (i128)d * y * y;
    i128 D1 = B1 * B1 - 4 * (i128)a * (C1 - bound);
    if (D1 < 0) continue;
    i128 tx = isqrt128(D1);
    int64_t xlo = (int64_t)((-B1 - tx) / (2 * (i128)a)) - 1;
    int64_t xhi = (int64_t)((-B1 + tx) / (2 * (i128)a)) + 1;
    i128 val = (i128)a * xlo * xlo + B1 * xlo + C1;
    i128 step = (i128)a * (2 * xlo + 1) + B1;
    for (int64_t x = xlo; x <= xhi; ++x) {
      if (val >= 0 && val <= bound) bits.set((int64_t)val);
      val += step;
      step += 2 * a;
    }
  }
  bits.mask_tail();
  return bits;
}

}  // namespace

RepresentationSieve build_sieve(const DiagonalForm& f, int64_t bound, int threads) {
  if (bound < 0) throw Error(ErrorKind::Precondition, "negative bound");
  if (threads < 1) threads = 1;
  return RepresentationSieve(GramForm(f), sieve_bits_diagonal(f.coeffs(), bound, threads));
}

RepresentationSieve build_sieve(const GramForm& f, int64_t bound, int threads) {
  if (bound < 0) throw Error(ErrorKind::Precondition, "negative bound");
  if (threads < 1) threads = 1;
  if (f.is_diagonal()) {
    auto d = f.diagonal();
    std::sort(d.begin(), d.end());
    return RepresentationSieve(f, sieve_bits_diagonal(d, bound, threads));
  }
  switch (f.dim()) {
    case 2: return RepresentationSieve(f, sieve_bits_gram2(f, bound));
    case 3: return RepresentationSieve(f, sieve_bits_gram3(f, bound));
    default:
      throw Error(ErrorKind::Capacity, "non-diagonal matrices supported up to dimension 3");
  }
}

void write_sieve(const RepresentationSieve& s, const std::string& path) {
  std::FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  const char magic[8] = {'Q', 'P', 'U', 'S', 'I', 'E', 'V', 'E'};
  uint64_t bound = (uint64_t)s.bound();
  unsigned char hdr[16];
  std::memcpy(hdr, magic, 8);
  for (int i = 0; i < 8; ++i) hdr[8 + i] = (unsigned char)((bound >> (8 * i)) & 0xff);
  bool ok = std::fwrite(hdr, 1, 16, fp) == 16;
  for (uint64_t w : s.bits().words()) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = (unsigned char)((w >> (8 * i)) & 0xff);
    ok = ok && std::fwrite(buf, 1, 8, fp) == 8;
  }
  std::fclose(fp);
  if (!ok) throw Error(ErrorKind::Io, "short write to " + path);
}

BitArray read_sieve_bits(const std::string& path, int64_t& bound_out) {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw Error(ErrorKind::Io, "cannot open " + path);
  unsigned char hdr[16];
  if (std::fread(hdr, 1, 16, fp) != 16) {
    std::fclose(fp);
    throw Error(ErrorKind::Io, "truncated header in " + path);
  }
  if (std::memcmp(hdr, "QPUSIEVE", 8) != 0) {
    std::fclose(fp);
    throw Error(ErrorKind::Data, "bad magic in " + path);
  }
  uint64_t bound = 0;
  for (int i = 0; i < 8; ++i) bound |= (uint64_t)hdr[8 + i] << (8 * i);
  if (bound > (uint64_t)INT64_MAX) {
    std::fclose(fp);
    throw Error(ErrorKind::Data, "bound out of range in " + path);
  }
  BitArray bits((int64_t)bound);
  for (uint64_t& w : bits.words()) {
    unsigned char buf[8];
    if (std::fread(buf, 1, 8, fp) != 8) {
      std::fclose(fp);
      throw Error(ErrorKind::Io, "truncated bit data in " + path);
    }
    w = 0;
    for (int i = 0; i < 8; ++i) w |= (uint64_t)buf[i] << (8 * i);
  }
  std::fclose(fp);
  bound_out = (int64_t)bound;
  return bits;
}

bool ExcludedFamily::contains(int64_t n) const {
  if (n < 0) return false;
  int64_t v = n;
  while (true) {
    int64_t rem = v % m;
    for (int64_t r : residues)
      if (rem == r) return true;
    if (v == 0 || v % c != 0) return false;
    v /= c;
  }
}

std::string ExcludedFamily::str() const {
  std::string out;
  const bool base_free = (c == m + 1);
  if (!base_free) out += std::to_string(c) + "^s(";
  out += std::to_string(m) + "t+" + std::to_string(residues.front());
  for (size_t i = 1; i < residues.size(); ++i) out += "," + std::to_string(residues[(size_t)i]);
  if (!base_free) out += ")";
  return out;
}

ExcludedFamily parse_family(const std::string& text) {
  auto fail = [&]() -> ExcludedFamily {
    throw Error(ErrorKind::Malformed, "unrecognized family: " + text);
  };
  size_t pos = 0;
  auto read_int = [&](int64_t& v) {
    size_t start = pos;
    while (pos < text.size() && std::isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) return false;
    v = std::stoll(text.substr(start, pos - start));
    return true;
  };
  int64_t first = 0;
  if (!read_int(first)) return fail();
  ExcludedFamily fam{0, 0, {}};
  bool with_base = pos + 2 < text.size() && text.compare(pos, 3, "^s(") == 0;
  if (with_base) {
    fam.c = first;
    pos += 3;
    if (!read_int(fam.m)) return fail();
  } else {
    fam.m = first;
  }
  if (pos + 1 >= text.size() || text.compare(pos, 2, "t+") != 0) return fail();
  pos += 2;
  int64_t r = 0;
  if (!read_int(r)) return fail();
  fam.residues.push_back(r);
  if (with_base) {
    if (pos >= text.size() || text[pos] != ')') return fail();
    ++pos;
  } else {
    fam.c = fam.m + 1;
  }
  if (pos != text.size()) return fail();
  if (fam.c < 2 || fam.m < 1) return fail();
  for (int64_t res : fam.residues)
    if (res < 0 || res >= fam.m) return fail();
  return fam;
}

std::vector<int64_t> family_members(const ExcludedFamily& fam, int64_t bound) {
  std::vector<int64_t> out;
  for (i128 base = 1; base <= bound; base *= fam.c) {
    for (int64_t r : fam.residues) {
      for (i128 v = base * r; v <= bound; v += base * fam.m)
        if (v >= 0) out.push_back((int64_t)v);
    }
    if (fam.c == fam.m + 1) break;  // base-free families collapse across powers
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExclusionReport verify_excluded(const DiagonalForm& f, const std::vector<ExcludedFamily>& fams,
                                ValueConstraint constraint, int64_t bound) {
  RepresentationSieve sieve = build_sieve(f, bound);
  ExclusionReport report;
  for (int64_t n = 0; n <= bound; ++n) {
    if (constraint == ValueConstraint::Even && (n & 1)) continue;
    bool excluded = false;
    for (const auto& fam : fams)
      if (fam.contains(n)) { excluded = true; break; }
    if (!excluded != sieve.test(n)) report.mismatches.push_back(n);
  }
  return report;
}

}  // namespace qpu
