#include "qpu/forms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qpu {

DiagonalForm::DiagonalForm(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::Malformed, "diagonal form needs at least one coefficient");
  if ((int)coeffs_.size() > kMaxRank)
    throw Error(ErrorKind::Capacity, "rank exceeds supported maximum " + std::to_string(kMaxRank));
  for (int64_t a : coeffs_)
    if (a <= 0) throw Error(ErrorKind::NonpositiveCoefficient, "coefficient " + std::to_string(a) + " is not positive");
  std::sort(coeffs_.begin(), coeffs_.end());
}

std::string DiagonalForm::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out << ',';
    out << coeffs_[i];
  }
  return out.str();
}

bool DiagonalForm::operator<(const DiagonalForm& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size();
  return coeffs_ < o.coeffs_;
}

namespace {

// Fraction-free Gaussian elimination determinant of the leading k x k minor.
i128 leading_minor(const std::vector<i128>& m, int dim, int k) {
  std::vector<i128> a((size_t)k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[(size_t)(i * k + j)] = m[(size_t)(i * dim + j)];
  i128 prev = 1;
  for (int p = 0; p < k - 1; ++p) {
    if (a[(size_t)(p * k + p)] == 0) {
      // Pivot by row swap; sign tracked by negating a row.
      int r = -1;
      for (int i = p + 1; i < k; ++i)
        if (a[(size_t)(i * k + p)] != 0) { r = i; break; }
      if (r < 0) return 0;
      for (int j = 0; j < k; ++j) {
        i128 t = a[(size_t)(p * k + j)];
        a[(size_t)(p * k + j)] = a[(size_t)(r * k + j)];
        a[(size_t)(r * k + j)] = -t;
      }
    }
    for (int i = p + 1; i < k; ++i) {
      for (int j = p + 1; j < k; ++j) {
        a[(size_t)(i * k + j)] =
            (a[(size_t)(i * k + j)] * a[(size_t)(p * k + p)] - a[(size_t)(i * k + p)] * a[(size_t)(p * k + j)]) / prev;
      }
      a[(size_t)(i * k + p)] = 0;
    }
    prev = a[(size_t)(p * k + p)];
  }
  return a[(size_t)((k - 1) * k + (k - 1))];
}

}  // namespace

GramForm::GramForm(std::vector<std::vector<int64_t>> entries) {
  dim_ = (int)entries.size();
  if (dim_ == 0) throw Error(ErrorKind::Malformed, "empty matrix");
  if (dim_ > kMaxRank)
    throw Error(ErrorKind::Capacity, "dimension exceeds supported maximum " + std::to_string(kMaxRank));
  for (auto& row : entries)
    if ((int)row.size() != dim_) throw Error(ErrorKind::Malformed, "matrix is not square");
  m_.resize((size_t)dim_ * dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m_[(size_t)(i * dim_ + j)] = entries[(size_t)i][(size_t)j];
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if (at(i, j) != at(j, i)) throw Error(ErrorKind::Asymmetric, "matrix is not symmetric");
  std::vector<i128> wide(m_.begin(), m_.end());
  for (int k = 1; k <= dim_; ++k)
    if (leading_minor(wide, dim_, k) <= 0)
      throw Error(ErrorKind::NotPositiveDefinite, "matrix is not positive definite");
}

GramForm::GramForm(const DiagonalForm& d) : dim_(d.rank()) {
  m_.assign((size_t)dim_ * dim_, 0);
  for (int i = 0; i < dim_; ++i) m_[(size_t)(i * dim_ + i)] = d.coeffs()[(size_t)i];
}

bool GramForm::is_diagonal() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if (i != j && at(i, j) != 0) return false;
  return true;
}

std::vector<int64_t> GramForm::diagonal() const {
  std::vector<int64_t> d((size_t)dim_);
  for (int i = 0; i < dim_; ++i) d[(size_t)i] = at(i, i);
  return d;
}

int64_t GramForm::determinant() const {
  std::vector<i128> wide(m_.begin(), m_.end());
  i128 det = leading_minor(wide, dim_, dim_);
  if (det > (i128)INT64_MAX || det < -(i128)INT64_MAX)
    throw Error(ErrorKind::Capacity, "determinant overflows");
  return (int64_t)det;
}

std::string GramForm::str() const {
  std::ostringstream out;
  out << '[';
  for (int i = 0; i < dim_; ++i) {
    if (i) out << ',';
    out << '[';
    for (int j = 0; j < dim_; ++j) {
      if (j) out << ',';
      out << at(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

int64_t evaluate(const GramForm& f, const std::vector<int64_t>& x) {
  if ((int)x.size() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match dimension");
  i128 acc = 0;
  for (int i = 0; i < f.dim(); ++i)
    for (int j = 0; j < f.dim(); ++j) acc += (i128)f.at(i, j) * x[(size_t)i] * x[(size_t)j];
  if (acc > (i128)INT64_MAX) throw Error(ErrorKind::Capacity, "value overflows");
  return (int64_t)acc;
}

int64_t evaluate(const DiagonalForm& f, const std::vector<int64_t>& x) {
  if ((int)x.size() != f.rank()) throw Error(ErrorKind::DimensionMismatch, "vector length does not match rank");
  i128 acc = 0;
  for (int i = 0; i < f.rank(); ++i) acc += (i128)f.coeffs()[(size_t)i] * x[(size_t)i] * x[(size_t)i];
  if (acc > (i128)INT64_MAX) throw Error(ErrorKind::Capacity, "value overflows");
  return (int64_t)acc;
}

namespace {

int64_t parse_int(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
  size_t digits = 0;
  while (pos < s.size() && std::isdigit((unsigned char)s[pos])) { ++pos; ++digits; }
  if (digits == 0) throw Error(ErrorKind::Malformed, "expected integer at position " + std::to_string(start));
  try {
    return std::stoll(s.substr(start, pos - start));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Malformed, "integer out of range");
  }
}

void skip_ws(const std::string& s, size_t& pos) {
  while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
}

}  // namespace

std::variant<DiagonalForm, GramForm> parse_form(const std::string& text) {
  size_t pos = 0;
  skip_ws(text, pos);
  if (pos >= text.size()) throw Error(ErrorKind::Malformed, "empty form");
  if (text[pos] == '[') {
    ++pos;
    std::vector<std::vector<int64_t>> rows;
    skip_ws(text, pos);
    while (true) {
      skip_ws(text, pos);
      if (pos >= text.size() || text[pos] != '[') throw Error(ErrorKind::Malformed, "expected '[' starting a row");
      ++pos;
      std::vector<int64_t> row;
      while (true) {
        skip_ws(text, pos);
        row.push_back(parse_int(text, pos));
        skip_ws(text, pos);
        if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
        break;
      }
      if (pos >= text.size() || text[pos] != ']') throw Error(ErrorKind::Malformed, "expected ']' closing a row");
      ++pos;
      rows.push_back(std::move(row));
      skip_ws(text, pos);
      if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
      break;
    }
    if (pos >= text.size() || text[pos] != ']') throw Error(ErrorKind::Malformed, "expected ']' closing the matrix");
    ++pos;
    skip_ws(text, pos);
    if (pos != text.size()) throw Error(ErrorKind::Malformed, "trailing characters after matrix");
    return GramForm(std::move(rows));
  }
  std::vector<int64_t> coeffs;
  while (true) {
    skip_ws(text, pos);
    coeffs.push_back(parse_int(text, pos));
    skip_ws(text, pos);
    if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
    break;
  }
  if (pos != text.size()) throw Error(ErrorKind::Malformed, "trailing characters after coefficient list");
  return DiagonalForm(std::move(coeffs));
}

std::vector<DiagonalForm> sub_multisets(const DiagonalForm& f) {
  const auto& c = f.coeffs();
  int n = f.rank();
  std::set<std::vector<int64_t>> seen;
  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int64_t> sub;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(c[(size_t)i]);
    seen.insert(std::move(sub));
  }
  std::vector<DiagonalForm> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.emplace_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qpu
