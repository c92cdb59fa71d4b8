#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "tropcrit/errors.hpp"

namespace tropcrit {

// A subset of a ground set {0,...,n} with n <= 63, stored as a bitmask.
class Subset {
 public:
  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint64_t bits) { return Subset(bits); }
  static constexpr Subset single(int e) { return Subset(std::uint64_t{1} << e); }
  // The full set {0,...,count-1}.
  static constexpr Subset full(int count) {
    return Subset(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }
  static Subset of(std::initializer_list<int> elems) {
    std::uint64_t b = 0;
    for (int e : elems) b |= std::uint64_t{1} << e;
    return Subset(b);
  }
  static Subset from_elements(const std::vector<int>& elems) {
    std::uint64_t b = 0;
    for (int e : elems) b |= std::uint64_t{1} << e;
    return Subset(b);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int count() const { return std::popcount(bits_); }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr Subset with(int e) const { return Subset(bits_ | (std::uint64_t{1} << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(std::uint64_t{1} << e)); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  // -1 on the empty set.
  int min_element() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
  int max_element() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  // Relabel every element e to e+k (resp. e-k). Used to move between the
  // ground sets {1..n} and {0..n-1} of a matroid minor.
  constexpr Subset shifted_up(int k = 1) const { return Subset(bits_ << k); }
  constexpr Subset shifted_down(int k = 1) const { return Subset(bits_ >> k); }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(Subset a, Subset b) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) = default;

 private:
  explicit constexpr Subset(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the increasing element sequences: {0,3} < {1,2}.
// Only meaningful for sets of equal cardinality (bases); the canonical order
// for reported basis lists.
inline bool lex_less(Subset a, Subset b) {
  std::uint64_t x = a.bits(), y = b.bits();
  if (x == y) return false;
  std::uint64_t diff = x ^ y;
  int e = std::countr_zero(diff);
  return a.contains(e);
}

}  // namespace tropcrit
