#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace heapkit {

/// Fixed-universe bit set over dense element ids 0..n-1.
///
/// Ordering compares the sets as binary numbers (bit i has weight 2^i), which
/// is the order used for split enumeration. Sets over the same universe size
/// are the only ones ever compared.
class ElementSet {
 public:
  using Word = std::uint64_t;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : size_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  std::size_t universe() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(Word{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (Word w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  /// True when every member of this set is also in `other`.
  bool is_subset_of(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) noexcept { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) noexcept { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) noexcept { return a -= b; }

  /// Complement within the universe.
  ElementSet complement() const {
    ElementSet c(size_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    if (size_ & 63) c.words_.back() &= (Word{1} << (size_ & 63)) - 1;
    return c;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  friend bool operator<(const ElementSet& a, const ElementSet& b) noexcept {
    for (std::size_t k = a.words_.size(); k-- > 0;) {
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    }
    return false;
  }

  /// Visits members in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      Word w = words_[k];
      while (w) {
        const int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64 + static_cast<std::size_t>(bit)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  /// Least member, or -1 when empty.
  int first() const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k])));
    return -1;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t size_ = 0;
  boost::container::small_vector<Word, 1> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace heapkit
