#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "facering/atom_set.hpp"
#include "facering/poset.hpp"

namespace facering {

/// α(i, U) = #{j ∈ U : j < i}. Throws `kNotMember` if i ∉ U.
unsigned alpha(unsigned i, AtomSet u);

/// ε(x, x') = (-1)^{α(i, U(x))} where {i} = U(x) \ U(x'). Throws
/// `kNotACover` unless x covers x'.
int epsilon(const SimplicialPoset& p, ElementId x, ElementId x_lower);

/// Signs of all cover pairs of one poset, computed once at construction.
/// Read-only afterwards and safe to share between threads.
class IncidenceFunction {
 public:
  explicit IncidenceFunction(const SimplicialPoset& p);

  /// ε(x, y) for y a lower cover of x.
  int operator()(ElementId x, ElementId y) const;

  /// Signs aligned with `p.lower_covers(x)`.
  const std::vector<int>& lower_signs(ElementId x) const { return signs_[x]; }

 private:
  const SimplicialPoset* poset_;
  std::vector<std::vector<int>> signs_;
};

struct IncidenceReport {
  bool ok = true;
  std::size_t diamonds_checked = 0;
  /// First (x, y) with ρ(x) = ρ(y) + 2 whose signed sum is nonzero, or whose
  /// open interval does not have exactly two elements.
  std::optional<std::pair<ElementId, ElementId>> failing;
};

/// Checks ε(x,z)ε(z,y) + ε(x,z')ε(z',y) = 0 on every rank-two interval.
IncidenceReport verify_incidence(const SimplicialPoset& p);

}  // namespace facering
