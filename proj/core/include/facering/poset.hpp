#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facering/atom_set.hpp"
#include "facering/error.hpp"

namespace facering {

using ElementId = std::uint32_t;

/// Name used for the least element of posets the library builds itself.
/// Input files never mention it and may not use it as an id.
inline constexpr const char* kBottomName = "<0>";

/// Unvalidated input: opaque ids plus (upper, lower) cover pairs.
struct RawPoset {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
};

/// A finite poset with least element whose lower intervals are boolean
/// algebras. Immutable once built by `validate`.
///
/// Elements are dense ids 0..size()-1 with 0 the least element; ids are
/// sorted by rank, ties broken by input order, so x < y implies id(x) <
/// id(y). Atoms are numbered in order of first appearance in the input.
class SimplicialPoset {
 public:
  std::size_t size() const { return names_.size(); }
  static constexpr ElementId bottom() { return 0; }

  /// rank P = max ρ(x).
  unsigned rank() const { return rank_; }
  unsigned rank(ElementId x) const { return support_[x].size(); }

  bool leq(ElementId x, ElementId y) const { return leq_[static_cast<std::size_t>(x) * size() + y]; }
  bool less(ElementId x, ElementId y) const { return x != y && leq(x, y); }
  bool comparable(ElementId x, ElementId y) const { return leq(x, y) || leq(y, x); }

  std::size_t atom_count() const { return atoms_.size(); }
  /// The element y_{i}, 0-based.
  ElementId atom(unsigned i) const { return atoms_[i]; }
  const std::vector<ElementId>& atoms() const { return atoms_; }
  /// Atom index of an atom element.
  unsigned atom_index(ElementId atom) const;

  /// U(x): the atoms below x.
  AtomSet support(ElementId x) const { return support_[x]; }

  const std::vector<ElementId>& lower_covers(ElementId x) const { return lower_covers_[x]; }
  const std::vector<ElementId>& upper_covers(ElementId x) const { return upper_covers_[x]; }
  bool covers(ElementId upper, ElementId lower) const;

  /// All y <= x, ascending.
  const std::vector<ElementId>& down_set(ElementId x) const { return down_sets_[x]; }
  /// All y >= x, ascending.
  std::vector<ElementId> up_set(ElementId x) const;

  /// The unique y <= x with U(y) = `subset`; requires subset ⊆ U(x).
  ElementId element_below(ElementId x, AtomSet subset) const;

  std::vector<ElementId> elements_of_rank(unsigned r) const;
  /// Elements not below any other element.
  std::vector<ElementId> maximal_elements() const;
  bool is_pure() const;

  const std::string& name(ElementId x) const { return names_[x]; }
  std::optional<ElementId> find(const std::string& name) const;

  /// Back to the unvalidated form; element order and atom order survive a
  /// round trip.
  RawPoset to_raw() const;

 private:
  friend SimplicialPoset validate(const RawPoset& raw);

  unsigned rank_ = 0;
  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<AtomSet> support_;
  std::vector<ElementId> atoms_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<std::vector<ElementId>> upper_covers_;
  std::vector<std::vector<ElementId>> down_sets_;
};

/// Checks the simplicial poset axioms. Throws `PosetError` naming the first
/// violation: NotAPoset (cycle, duplicate or unknown id), NoLeastElement,
/// NonBooleanInterval(x) or RankMismatch(x).
SimplicialPoset validate(const RawPoset& raw);

/// [x ∨ y]: minimal common upper bounds, ascending. Possibly empty.
std::vector<ElementId> join_set(const SimplicialPoset& p, ElementId x, ElementId y);

/// [x_1 ∨ ... ∨ x_m]; the empty list yields {0̂}.
std::vector<ElementId> multi_join_set(const SimplicialPoset& p, std::span<const ElementId> xs);

/// x ∧ y. Throws `kMeetUndefined` when [x ∨ y] is empty.
ElementId meet(const SimplicialPoset& p, ElementId x, ElementId y);

/// {x : ρ(x) <= i + 1} for 0 <= i <= rank - 1.
SimplicialPoset skeleton(const SimplicialPoset& p, int i);

/// Componentwise order on pairs. Atoms of `a` come first.
SimplicialPoset product(const SimplicialPoset& a, const SimplicialPoset& b);

/// Face poset of the simplicial complex generated by `facets` (vertex
/// labels), with ∅ as 0̂. Vertices become atoms in order of first appearance.
SimplicialPoset from_facets(const std::vector<std::vector<std::string>>& facets);
SimplicialPoset from_facets(const std::vector<std::vector<int>>& facets);

/// The boolean algebra 2^{[m]}.
SimplicialPoset boolean(unsigned m);

/// Wedge at 0̂: both posets share their least element. Names of `b` get a
/// prime appended when they collide with names of `a`.
SimplicialPoset disjoint_union(const SimplicialPoset& a, const SimplicialPoset& b);

/// The subposet on `keep` (must contain 0̂ and be closed downward).
SimplicialPoset induced_subposet(const SimplicialPoset& p, std::span<const ElementId> keep);

/// Poset isomorphism that respects atom supports under some bijection of
/// atoms. All atom bijections are tried when there are at most
/// `max_permuted_atoms` atoms, otherwise only the identity.
bool isomorphic(const SimplicialPoset& a, const SimplicialPoset& b,
                unsigned max_permuted_atoms = 7);

/// f_{i-1} = #{x : ρ(x) = i}, i = 0..d.
std::vector<long long> rank_counts(const SimplicialPoset& p);

}  // namespace facering
