#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

#include "mondef/error.hpp"

namespace mondef {

// A subset of the vertex set [n] = {1,...,n}, packed into a 32-bit mask.
// Bit i-1 stands for vertex i.  The built-in comparison orders by mask
// value (useful for hashing and dedup); lex_less orders by the sorted
// vertex list, which is the order used for canonical facet lists.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t mask) : mask_(mask) {}

  static constexpr VertexSet single(int v) {
    return VertexSet(std::uint32_t{1} << (v - 1));
  }

  static constexpr VertexSet full(int n) {
    return VertexSet(n >= 32 ? ~std::uint32_t{0}
                             : (std::uint32_t{1} << n) - 1);
  }

  static VertexSet of(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) {
      if (v < 1 || v > 32) fail(ErrorCode::VertexOutOfRange, "vertex out of range: " + std::to_string(v));
      s = s.with(v);
    }
    return s;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int v) const { return (mask_ >> (v - 1)) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (mask_ & ~o.mask_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (mask_ & o.mask_) != 0; }

  constexpr VertexSet with(int v) const {
    return VertexSet(mask_ | (std::uint32_t{1} << (v - 1)));
  }
  constexpr VertexSet without(int v) const {
    return VertexSet(mask_ & ~(std::uint32_t{1} << (v - 1)));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.mask_ ^ b.mask_); }

  // Both require a nonempty set.
  int min_vertex() const { return std::countr_zero(mask_) + 1; }
  int max_vertex() const { return 32 - std::countl_zero(mask_); }

  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  // Iterates contained vertices in increasing order without allocating.
  class iterator {
  public:
    using value_type = int;
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr bool operator==(const iterator&) const = default;

  private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

  // Order by sorted vertex list: [1,3] < [2], [1] < [1,2].
  static constexpr bool lex_less(VertexSet a, VertexSet b) {
    const std::uint32_t d = a.mask_ ^ b.mask_;
    if (d == 0) return false;
    const std::uint32_t low = d & (~d + 1);
    if (a.mask_ & low) return b.mask_ > low;  // a owns the first differing vertex
    return a.mask_ < low;                     // b owns it; a wins only as a proper prefix
  }

private:
  std::uint32_t mask_ = 0;
};

}  // namespace mondef
