#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace facering {

/// A subset of the atom indices {0, ..., 63}. Atom i of a poset is its i-th
/// rank-one element in input order.
class AtomSet {
 public:
  static constexpr unsigned kCapacity = 64;

  constexpr AtomSet() = default;
  constexpr explicit AtomSet(std::uint64_t bits) : bits_(bits) {}

  static AtomSet of(std::initializer_list<unsigned> members) {
    AtomSet s;
    for (unsigned i : members) s.insert(i);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(unsigned i) const { return (bits_ >> i) & 1u; }
  constexpr void insert(unsigned i) { bits_ |= std::uint64_t{1} << i; }
  constexpr void erase(unsigned i) { bits_ &= ~(std::uint64_t{1} << i); }

  constexpr bool is_subset_of(AtomSet other) const { return (bits_ & ~other.bits_) == 0; }

  /// Number of members strictly below `i`.
  constexpr unsigned count_below(unsigned i) const {
    return static_cast<unsigned>(std::popcount(bits_ & ((std::uint64_t{1} << i) - 1)));
  }

  /// Members in increasing order.
  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<unsigned>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr AtomSet operator|(AtomSet a, AtomSet b) { return AtomSet(a.bits_ | b.bits_); }
  friend constexpr AtomSet operator&(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & b.bits_); }
  friend constexpr AtomSet operator-(AtomSet a, AtomSet b) { return AtomSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(AtomSet, AtomSet) = default;
  friend constexpr auto operator<=>(AtomSet, AtomSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace facering
