#ifndef ROUGHREL_BITSET_HPP
#define ROUGHREL_BITSET_HPP

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace roughrel {

// Fixed-length bit vector packed into 64-bit words. Element 0 is the least
// significant bit of word 0; value order treats the whole vector as one wide
// unsigned integer.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static Bitset from_mask(std::size_t size, std::uint64_t mask) {
    assert(size <= 64);
    Bitset b(size);
    if (size > 0) b.words_[0] = mask & tail_mask(size);
    return b;
  }

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const {
    assert(i < size_);
    return (words_[i / 64] >> (i % 64)) & 1u;
  }

  void set(std::size_t i) {
    assert(i < size_);
    words_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  void reset(std::size_t i) {
    assert(i < size_);
    words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }

  bool is_subset_of(const Bitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  bool intersects(const Bitset& other) const {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & other.words_[i]) return true;
    return false;
  }

  Bitset& operator|=(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& other) {
    assert(size_ == other.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  // Complement within the fixed length; bits past size_ stay zero.
  Bitset complemented() const {
    Bitset r(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    if (!r.words_.empty()) r.words_.back() &= tail_mask(size_);
    return r;
  }

  friend Bitset operator~(const Bitset& b) { return b.complemented(); }

  bool operator==(const Bitset& other) const = default;

  // Ascending order by the value of the bit vector read as an integer.
  static bool value_less(const Bitset& a, const Bitset& b) {
    assert(a.size_ == b.size_);
    for (std::size_t i = a.words_.size(); i-- > 0;) {
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    }
    return false;
  }

  // First word; only meaningful when size ≤ 64.
  std::uint64_t low_mask() const {
    assert(size_ <= 64);
    return words_.empty() ? 0 : words_[0];
  }

  // Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i]));
    return size_;
  }

  template <class F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(w));
        f(i * 64 + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

 private:
  static std::uint64_t tail_mask(std::size_t size) {
    std::size_t rem = size % 64;
    return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace roughrel

#endif  // ROUGHREL_BITSET_HPP
