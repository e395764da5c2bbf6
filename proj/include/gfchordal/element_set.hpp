#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>

namespace gfc {

/// A subset of the elements of one matroid, as a bitmask over element indices.
/// Matroids are capped at 64 elements so a single word always suffices.
class ElementSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet first(int n) {
    return ElementSet(n >= kCapacity ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static constexpr ElementSet single(int i) { return ElementSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 63 - std::countl_zero(bits_); }

  constexpr ElementSet with(int i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(int i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr ElementSet operator^(ElementSet a, ElementSet b) { return ElementSet(a.bits_ ^ b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the sorted index sequences of two sets
/// ({0,2} < {0,3} < {1}); a proper prefix sorts first.
constexpr bool lex_less(ElementSet a, ElementSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const int p = std::countr_zero(diff);
  const std::uint64_t above = (p == 63) ? 0 : (~std::uint64_t{0} << (p + 1));
  if (a.contains(p)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

struct LexLess {
  constexpr bool operator()(ElementSet a, ElementSet b) const { return lex_less(a, b); }
};

}  // namespace gfc
