#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace dmm {

// Elements are canonical indices 0..n-1 into the operation tables.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxCarrier = 64;

// Set of elements of a carrier of at most 64 elements, stored as a bitmask.
class ElementSet {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(iterator const&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  constexpr ElementSet(std::initializer_list<Element> elems) {
    for (Element a : elems) {
      insert(a);
    }
  }

  template <typename Range>
  static ElementSet from(Range const& elems) {
    ElementSet s;
    for (auto a : elems) {
      s.insert(static_cast<Element>(a));
    }
    return s;
  }

  static constexpr ElementSet all(std::size_t n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(Element a) const { return (bits_ >> a) & 1U; }
  constexpr void insert(Element a) { bits_ |= std::uint64_t{1} << a; }
  constexpr void erase(Element a) { bits_ &= ~(std::uint64_t{1} << a); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> to_vector() const { return {begin(), end()}; }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  constexpr bool operator==(ElementSet const&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Size first, then lexicographic on the sorted member list.
inline bool size_lex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.to_vector() < b.to_vector();
}

}  // namespace dmm
