#pragma once
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qpu/common.hpp"

namespace qpu {

inline constexpr int kMaxRank = 8;

// Diagonal positive-definite form a1*x1^2 + ... + an*xn^2, coefficients
// stored sorted ascending so equality is multiset equality.
class DiagonalForm {
 public:
  explicit DiagonalForm(std::vector<int64_t> coeffs);
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  int rank() const { return (int)coeffs_.size(); }
  int64_t min_coeff() const { return coeffs_.front(); }
  std::string str() const;  // canonical "a1,a2,...,an"
  bool operator==(const DiagonalForm& o) const { return coeffs_ == o.coeffs_; }
  bool operator<(const DiagonalForm& o) const;  // rank, then lex

 private:
  std::vector<int64_t> coeffs_;
};

// Symmetric positive-definite integer matrix M; form value is x * M * x^t
// (off-diagonal entries contribute twice via symmetry).
class GramForm {
 public:
  explicit GramForm(std::vector<std::vector<int64_t>> entries);
  explicit GramForm(const DiagonalForm& d);
  int dim() const { return dim_; }
  int64_t at(int i, int j) const { return m_[(size_t)(i * dim_ + j)]; }
  bool is_diagonal() const;
  // Diagonal coefficients if is_diagonal(), ascending not guaranteed here.
  std::vector<int64_t> diagonal() const;
  int64_t determinant() const;
  std::string str() const;  // "[[..],[..]]" row-major
  bool operator==(const GramForm& o) const { return dim_ == o.dim_ && m_ == o.m_; }

 private:
  int dim_;
  std::vector<int64_t> m_;  // row-major dim x dim
};

struct FormValue {
  int64_t value;
  std::vector<int64_t> witness;
};

int64_t evaluate(const GramForm& f, const std::vector<int64_t>& x);
int64_t evaluate(const DiagonalForm& f, const std::vector<int64_t>& x);

// Parses "2,3,5" (diagonal) or "[[1,0,0],[0,10,4],[0,4,10]]" (matrix).
std::variant<DiagonalForm, GramForm> parse_form(const std::string& text);

// Every form obtained by deleting a nonempty proper subset of coefficients,
// deduplicated, ordered by rank then lexicographically.
std::vector<DiagonalForm> sub_multisets(const DiagonalForm& f);

}  // namespace qpu
