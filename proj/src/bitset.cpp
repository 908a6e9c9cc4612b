#include "qpu/bitset.hpp"

#include <bit>

namespace qpu {

void BitArray::or_shifted(const BitArray& src, int64_t k) {
  if (k < 0) throw Error(ErrorKind::Precondition, "negative shift");
  if (k > bound_) return;
  const size_t wk = (size_t)(k >> 6);
  const int bk = (int)(k & 63);
  const size_t n = words_.size();
  const size_t m = src.words_.size();
  if (bk == 0) {
    for (size_t i = 0; i + wk < n && i < m; ++i) words_[i + wk] |= src.words_[i];
  } else {
    for (size_t i = 0; i + wk < n && i < m; ++i) {
      words_[i + wk] |= src.words_[i] << bk;
      if (i + wk + 1 < n) words_[i + wk + 1] |= src.words_[i] >> (64 - bk);
    }
  }
  mask_tail();
}

void BitArray::or_with(const BitArray& src) {
  const size_t n = std::min(words_.size(), src.words_.size());
  for (size_t i = 0; i < n; ++i) words_[i] |= src.words_[i];
  mask_tail();
}

int64_t BitArray::count() const {
  int64_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

void BitArray::mask_tail() {
  const int used = (int)((bound_ & 63) + 1);
  if (used < 64) words_.back() &= (1ull << used) - 1;
}

}  // namespace qpu
