#include "qpu/data.hpp"

#include <cstdlib>

namespace qpu {

namespace {

DiagonalForm df(std::vector<int64_t> c) { return DiagonalForm(std::move(c)); }

// Rows of the classification tables are given as a fixed prefix plus a
// range for the last coefficient with listed omissions.
void add_range(std::vector<DiagonalForm>& out, std::vector<int64_t> prefix,
               int64_t lo, int64_t hi, std::vector<int64_t> skip) {
  for (int64_t a = lo; a <= hi; ++a) {
    bool skipped = false;
    for (int64_t s : skip)
      if (s == a) skipped = true;
    if (skipped) continue;
    std::vector<int64_t> c = prefix;
    c.push_back(a);
    out.push_back(df(c));
  }
}

}  // namespace

std::vector<DiagonalForm> candidate_quaternaries() {
  std::vector<DiagonalForm> out;
  out.push_back(df({2, 3, 4, 5}));
  out.push_back(df({2, 3, 4, 11}));
  for (int64_t h : {5, 11, 13, 14, 16, 17, 20, 21, 22, 23, 24, 25, 26, 27,
                    29, 30, 31, 32, 33, 35, 36, 38, 40, 41, 43})
    out.push_back(df({2, 3, 5, h}));
  return out;
}

std::vector<DiagonalForm> rank4_frontier() {
  std::vector<DiagonalForm> out;
  add_range(out, {2, 2, 2}, 2, 3, {});
  for (int64_t a : {8, 11, 16, 17}) out.push_back(df({2, 2, 3, a}));
  for (int64_t a : {3, 4, 6}) out.push_back(df({2, 3, 3, a}));
  for (int64_t a : {4, 6, 7, 10, 12, 13}) out.push_back(df({2, 3, 4, a}));
  for (int64_t a : {7, 19, 28, 34, 37, 39, 42}) out.push_back(df({2, 3, 5, a}));
  for (int64_t a : {6, 7}) out.push_back(df({2, 3, 6, a}));
  for (int64_t a : {7, 9, 10, 11, 12, 13}) out.push_back(df({2, 3, 7, a}));
  return out;
}

std::vector<DiagonalForm> proper_rank5_6() {
  std::vector<DiagonalForm> out;
  // Rank 5.
  out.push_back(df({2, 2, 2, 2, 3}));
  add_range(out, {2, 2, 2, 3}, 8, 8, {});
  add_range(out, {2, 2, 2, 3}, 11, 11, {});
  add_range(out, {2, 2, 2, 3}, 17, 17, {});
  out.push_back(df({2, 2, 3, 8, 17}));
  out.push_back(df({2, 2, 3, 11, 17}));
  out.push_back(df({2, 2, 3, 16, 17}));
  add_range(out, {2, 2, 3, 17}, 17, 41, {26, 32, 35, 40});
  out.push_back(df({2, 3, 3, 3, 4}));
  add_range(out, {2, 3, 3, 4}, 4, 13, {5, 7, 8, 9, 11, 12});
  add_range(out, {2, 3, 4, 4}, 4, 17, {5, 8, 9, 11, 16});
  add_range(out, {2, 3, 4, 6}, 6, 23, {8, 9, 11, 22});
  add_range(out, {2, 3, 4, 7}, 7, 17, {8, 9, 11, 16});
  add_range(out, {2, 3, 4, 10}, 10, 23, {11, 22});
  out.push_back(df({2, 3, 4, 12, 13}));
  add_range(out, {2, 3, 4, 13}, 13, 23, {13, 22});
  for (int64_t a : {7, 19, 28, 34}) out.push_back(df({2, 3, 5, 7, a}));
  out.push_back(df({2, 3, 5, 19, 19}));
  out.push_back(df({2, 3, 6, 6, 7}));
  add_range(out, {2, 3, 6, 7}, 7, 23, {8, 19, 20, 22});
  add_range(out, {2, 3, 7, 7}, 7, 13, {7, 8, 9, 10, 12});
  add_range(out, {2, 3, 7, 9}, 9, 13, {9, 12});
  add_range(out, {2, 3, 7, 10}, 10, 23, {17, 19, 22});
  add_range(out, {2, 3, 7, 11}, 11, 17, {11, 13, 16});
  out.push_back(df({2, 3, 7, 12, 13}));
  add_range(out, {2, 3, 7, 13}, 13, 17, {13, 16});
  // Rank 6.
  out.push_back(df({2, 3, 6, 7, 19, 20}));
  add_range(out, {2, 3, 6, 7, 20}, 20, 67, {21, 23, 63, 66});
  out.push_back(df({2, 3, 7, 7, 7, 10}));
  return out;
}

std::vector<ExceptionRow> single_exception_rows() {
  std::vector<ExceptionRow> out;
  auto row = [&](std::vector<int64_t> c, int64_t p) {
    out.push_back(ExceptionRow{df(std::move(c)), p});
  };
  row({1, 3, 4}, 2);
  row({1, 1, 6}, 3);
  row({1, 2, 6, 10}, 5);
  row({1, 1, 1, 9}, 7);
  row({2, 3, 3, 4}, 13);
  row({2, 3, 4, 12}, 13);
  row({2, 2, 2, 3}, 17);
  row({2, 3, 4, 4}, 17);
  row({2, 3, 4, 7}, 17);
  row({2, 3, 7, 11}, 17);
  row({2, 3, 7, 13}, 17);
  row({2, 3, 4, 6}, 23);
  row({2, 3, 4, 10}, 23);
  row({2, 3, 4, 13}, 23);
  row({2, 3, 6, 7, 19}, 23);
  row({2, 3, 6, 7, 22}, 23);
  row({2, 2, 3, 17}, 41);
  row({2, 3, 5, 19}, 43);
  row({2, 3, 6, 7, 20}, 67);
  return out;
}

std::vector<MultiExceptionRow> multi_exception_rows() {
  std::vector<MultiExceptionRow> out;
  out.push_back(MultiExceptionRow{df({2, 3, 7, 9}), {13, 97}});
  out.push_back(MultiExceptionRow{df({2, 3, 10, 21}), {13, 17, 43, 47}});
  out.push_back(MultiExceptionRow{df({2, 3, 6, 7}), {23, 47, 67}});
  return out;
}

std::vector<std::pair<DiagonalForm, int64_t>> frontier_truants() {
  std::vector<std::pair<DiagonalForm, int64_t>> out;
  out.emplace_back(df({2, 2, 2, 3}), 17);
  out.emplace_back(df({2, 2, 3, 17}), 41);
  out.emplace_back(df({2, 3, 3, 4}), 13);
  out.emplace_back(df({2, 3, 4, 4}), 17);
  out.emplace_back(df({2, 3, 4, 6}), 23);
  out.emplace_back(df({2, 3, 4, 12}), 13);
  out.emplace_back(df({2, 3, 5, 19}), 43);
  out.emplace_back(df({2, 3, 6, 7}), 23);
  out.emplace_back(df({2, 3, 6, 7, 19}), 23);
  out.emplace_back(df({2, 3, 6, 7, 20}), 67);
  out.emplace_back(df({2, 3, 6, 7, 22}), 23);
  return out;
}

const std::set<int64_t> kGoodResidues30 = {0,  2,  3,  6,  8,  9,  10, 12,
                                           15, 18, 20, 21, 22, 24, 27, 28};
const std::set<int64_t> kGoodResidues42 = {0,  3,  6,  7,  9,  12, 14, 15, 18,
                                           21, 24, 27, 28, 30, 33, 35, 36, 39};

std::vector<std::pair<int64_t, DiagonalForm>> minimality_witnesses() {
  std::vector<std::pair<int64_t, DiagonalForm>> out;
  out.emplace_back(2, df({1, 3, 4}));
  out.emplace_back(3, df({1, 1, 6}));
  out.emplace_back(5, df({1, 2, 6, 10}));
  out.emplace_back(7, df({1, 1, 1, 9}));
  out.emplace_back(13, df({2, 3, 3, 4}));
  out.emplace_back(17, df({2, 2, 2, 3}));
  out.emplace_back(23, df({2, 3, 4, 6}));
  out.emplace_back(41, df({2, 2, 3, 17}));
  out.emplace_back(43, df({2, 3, 5, 19}));
  out.emplace_back(67, df({2, 3, 6, 7, 20}));
  return out;
}

std::string data_dir() {
  if (const char* env = std::getenv("QPU_DATA"); env != nullptr && *env != '\0')
    return env;
#ifdef QPU_DATA_DIR
  return QPU_DATA_DIR;
#else
  return ".";
#endif
}

}  // namespace qpu
