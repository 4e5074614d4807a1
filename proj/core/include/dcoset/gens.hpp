#ifndef DCOSET_GENS_HPP
#define DCOSET_GENS_HPP

#include <bit>
#include <compare>
#include <cstdint>

namespace dcoset {

// A subset of the simple generators {0, ..., rank-1}, stored as a bit
// mask. Generators are 0-indexed internally; every user-facing surface
// prints them 1-indexed.
class GenSet {
 public:
  constexpr GenSet() = default;
  static constexpr GenSet from_mask(std::uint32_t mask) { return GenSet(mask); }
  static constexpr GenSet single(int s) { return GenSet(std::uint32_t{1} << s); }
  static constexpr GenSet all(int rank) {
    return GenSet(rank >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << rank) - 1);
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int count() const { return std::popcount(mask_); }
  constexpr bool contains(int s) const { return (mask_ >> s) & 1u; }
  constexpr bool subset_of(GenSet o) const { return (mask_ & ~o.mask_) == 0; }

  constexpr GenSet with(int s) const { return GenSet(mask_ | (std::uint32_t{1} << s)); }
  constexpr GenSet without(int s) const { return GenSet(mask_ & ~(std::uint32_t{1} << s)); }

  friend constexpr GenSet operator|(GenSet a, GenSet b) { return GenSet(a.mask_ | b.mask_); }
  friend constexpr GenSet operator&(GenSet a, GenSet b) { return GenSet(a.mask_ & b.mask_); }
  friend constexpr GenSet operator-(GenSet a, GenSet b) { return GenSet(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(GenSet a, GenSet b) = default;
  friend constexpr auto operator<=>(GenSet a, GenSet b) { return a.mask_ <=> b.mask_; }

  // Iterates set bits in ascending order, so `for (int s : I)` visits
  // generators smallest first.
  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator a, iterator b) = default;

   private:
    std::uint32_t rest_;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  constexpr explicit GenSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

}  // namespace dcoset

#endif
