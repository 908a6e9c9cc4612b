#pragma once
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qpu/common.hpp"

namespace qpu {

// Fixed-size bit array over values 0..bound inclusive.
class BitArray {
 public:
  explicit BitArray(int64_t bound)
      : bound_(bound), words_((size_t)(bound / 64 + 1), 0) {
    if (bound < 0) throw Error(ErrorKind::Precondition, "negative bound");
  }
  int64_t bound() const { return bound_; }
  void set(int64_t i) { words_[(size_t)(i >> 6)] |= 1ull << (i & 63); }
  bool test(int64_t i) const {
    return (words_[(size_t)(i >> 6)] >> (i & 63)) & 1ull;
  }
  // this |= (src << k); bits shifted past bound are dropped.
  void or_shifted(const BitArray& src, int64_t k);
  void or_with(const BitArray& src);
  int64_t count() const;
  void mask_tail();  // clear bits beyond bound in the last word
  const std::vector<uint64_t>& words() const { return words_; }
  std::vector<uint64_t>& words() { return words_; }
  bool operator==(const BitArray& o) const {
    return bound_ == o.bound_ && words_ == o.words_;
  }

 private:
  int64_t bound_;
  std::vector<uint64_t> words_;
};

}  // namespace qpu
