#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latkit {

// Dynamic bitset over 64-bit words. Capacity is fixed at construction and
// binary operations require both operands to share it.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int capacity() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear() { words_.assign(words_.size(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const Bitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.nbits_ == b.nbits_ && a.words_ == b.words_;
  }

  // Index of the lowest set bit, -1 when empty.
  int first() const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k * 64) + std::countr_zero(words_[k]);
    return -1;
  }

  // Lowest set bit strictly above i, -1 when exhausted.
  int next(int i) const {
    ++i;
    if (i >= nbits_) return -1;
    size_t k = size_t(i) >> 6;
    uint64_t w = words_[k] & (~uint64_t{0} << (i & 63));
    while (true) {
      if (w) return int(k * 64) + std::countr_zero(w);
      if (++k >= words_.size()) return -1;
      w = words_[k];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (int i = first(); i >= 0; i = next(i)) f(i);
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  size_t hash() const {
    size_t h = 0xcbf29ce484222325u;
    for (uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3u;
    }
    return h;
  }

private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace latkit
