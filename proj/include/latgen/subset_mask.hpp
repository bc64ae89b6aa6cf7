#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "latgen/error.hpp"

namespace latgen {

/** Fixed-width bit vector over element indices 0..width-1.
 *  Width is pinned at construction; all set algebra stays within it. */
class SubsetMask {
 public:
  SubsetMask() = default;

  explicit SubsetMask(int width) : width_(width), words_((width + 63) / 64, 0) {}

  static SubsetMask empty(int width) { return SubsetMask(width); }

  static SubsetMask full(int width) {
    SubsetMask m(width);
    for (int i = 0; i < width; ++i) m.set(i);
    return m;
  }

  static SubsetMask single(int width, int i) {
    SubsetMask m(width);
    m.set(i);
    return m;
  }

  static SubsetMask of(int width, std::initializer_list<int> bits) {
    SubsetMask m(width);
    for (int i : bits) m.set(i);
    return m;
  }

  static SubsetMask from_indices(int width, const std::vector<int>& idx) {
    SubsetMask m(width);
    for (int i : idx) m.set(i);
    return m;
  }

  static SubsetMask from_bits(int width, std::uint64_t bits) {
    SubsetMask m(width);
    if (!m.words_.empty()) m.words_[0] = bits;
    m.trim();
    return m;
  }

  int width() const { return width_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_full() const { return count() == width_; }

  bool is_subset_of(const SubsetMask& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  SubsetMask operator&(const SubsetMask& o) const {
    SubsetMask r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  SubsetMask operator|(const SubsetMask& o) const {
    SubsetMask r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  SubsetMask complement() const {
    SubsetMask r(width_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  bool operator==(const SubsetMask& o) const { return width_ == o.width_ && words_ == o.words_; }
  bool operator!=(const SubsetMask& o) const { return !(*this == o); }

  // Lexicographic on the index sequence; used only to order report output.
  bool operator<(const SubsetMask& o) const { return indices() < o.indices(); }

  std::vector<int> indices() const {
    std::vector<int> out;
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  template <class Fn>
  void for_each(Fn fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        fn(static_cast<int>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

 private:
  void trim() {
    if (width_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (width_ % 64)) - 1;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace latgen
