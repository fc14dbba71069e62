#include "facering/incidence.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace facering {

unsigned alpha(unsigned i, AtomSet u) {
  if (!u.contains(i)) {
    throw Error(ErrorKind::kNotMember, "atom " + std::to_string(i) + " is not in the set");
  }
  return u.count_below(i);
}

int epsilon(const SimplicialPoset& p, ElementId x, ElementId x_lower) {
  if (!p.covers(x, x_lower)) {
    throw Error(ErrorKind::kNotACover, p.name(x) + " does not cover " + p.name(x_lower));
  }
  const AtomSet diff = p.support(x) - p.support(x_lower);
  const unsigned i = diff.members().front();
  return alpha(i, p.support(x)) % 2 == 0 ? 1 : -1;
}

IncidenceFunction::IncidenceFunction(const SimplicialPoset& p) : poset_(&p), signs_(p.size()) {
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) signs_[x].push_back(epsilon(p, x, y));
  }
}

int IncidenceFunction::operator()(ElementId x, ElementId y) const {
  const auto& lc = poset_->lower_covers(x);
  auto it = std::lower_bound(lc.begin(), lc.end(), y);
  if (it == lc.end() || *it != y) {
    throw Error(ErrorKind::kNotACover, poset_->name(x) + " does not cover " + poset_->name(y));
  }
  return signs_[x][static_cast<std::size_t>(it - lc.begin())];
}

IncidenceReport verify_incidence(const SimplicialPoset& p) {
  IncidenceFunction eps(p);
  IncidenceReport report;
  for (ElementId x = 0; x < p.size(); ++x) {
    // y ↦ Σ_z ε(x,z) ε(z,y) over the middle elements z, and their count.
    std::map<ElementId, std::pair<int, int>> sums;
    for (ElementId z : p.lower_covers(x)) {
      for (ElementId y : p.lower_covers(z)) {
        auto& [sum, count] = sums[y];
        sum += eps(x, z) * eps(z, y);
        ++count;
      }
    }
    for (const auto& [y, acc] : sums) {
      ++report.diamonds_checked;
      if (acc.first != 0 || acc.second != 2) {
        report.ok = false;
        report.failing = std::make_pair(x, y);
        return report;
      }
    }
  }
  return report;
}

}  // namespace facering
