#include "facering/classify.hpp"

#include <algorithm>
#include <set>

#include "facering/face_ring.hpp"

namespace facering {

KComplex k_complex(const SimplicialPoset& p, ElementId x) {
  KComplex k;
  k.base = x;
  k.first_degree = p.rank(x);
  k.basis.resize(p.rank() - k.first_degree + 1);
  for (ElementId z : p.up_set(x)) k.basis[p.rank(z) - k.first_degree].push_back(z);
  for (auto& b : k.basis) std::sort(b.begin(), b.end());
  return k;
}

LocalCohomologyTable local_cohomology_table(const SimplicialPoset& p, const FieldSpec& field) {
  LocalCohomologyTable table;
  table.field = field;
  table.d = p.rank();
  table.dims.assign(p.size(), std::vector<std::size_t>(table.d + 1, 0));
  with_field(field, [&](const auto& f) {
    for (ElementId x = 0; x < p.size(); ++x) {
      const auto c = k_complex(f, p, x);
      const auto h = cohomology_dims(f, c);
      for (std::size_t t = 0; t < h.size(); ++t) table.dims[x][p.rank(x) + t] = h[t];
    }
  });
  return table;
}

std::vector<std::size_t> reduced_cohomology_X(const LocalCohomologyTable& table) {
  // [H^i_m(A)]_0 = H̃^{i-1}(X)
  std::vector<std::size_t> out;
  for (unsigned i = 1; i <= table.d; ++i) out.push_back(table.at(SimplicialPoset::bottom(), i));
  return out;
}

std::vector<std::size_t> reduced_cohomology_X(const SimplicialPoset& p, const FieldSpec& field) {
  return reduced_cohomology_X(local_cohomology_table(p, field));
}

unsigned depth(const LocalCohomologyTable& table) {
  unsigned lowest = table.d + 1;
  unsigned highest = 0;
  bool any = false;
  for (const auto& row : table.dims) {
    for (unsigned i = 0; i <= table.d; ++i) {
      if (row[i] == 0) continue;
      lowest = std::min(lowest, i);
      highest = std::max(highest, i);
      any = true;
    }
  }
  if (!any || highest != table.d) {
    throw Error(ErrorKind::kInternal, "local cohomology does not reach the rank of P");
  }
  return lowest;
}

unsigned depth(const SimplicialPoset& p, const FieldSpec& field) {
  return depth(local_cohomology_table(p, field));
}

bool is_cohen_macaulay(const LocalCohomologyTable& table) { return depth(table) == table.d; }

bool is_cohen_macaulay(const SimplicialPoset& p, const FieldSpec& field) {
  return is_cohen_macaulay(local_cohomology_table(p, field));
}

bool is_buchsbaum(const LocalCohomologyTable& table) {
  for (ElementId x = 1; x < table.dims.size(); ++x)
    for (unsigned i = 0; i < table.d; ++i)
      if (table.dims[x][i] != 0) return false;
  return true;
}

bool is_buchsbaum(const SimplicialPoset& p, const FieldSpec& field) {
  return is_buchsbaum(local_cohomology_table(p, field));
}

namespace {

bool gorenstein_star_given_cm(const SimplicialPoset& p, const FieldSpec& field) {
  return with_field(field, [&](const auto& f) {
    const auto omega = canonical_module(f, p);
    for (auto dim : omega.dims)
      if (dim != 1) return false;
    for (const auto& [cover, m] : omega.cover_maps)
      if (m.is_zero()) return false;
    return true;
  });
}

}  // namespace

bool is_gorenstein_star(const SimplicialPoset& p, const FieldSpec& field) {
  return is_cohen_macaulay(p, field) && gorenstein_star_given_cm(p, field);
}

namespace {

/// Peels atom `i` (an index of `p`) if it is a cone point; returns the core.
std::optional<SimplicialPoset> peel(const SimplicialPoset& p, unsigned i) {
  const ElementId y = p.atom(i);
  std::vector<ElementId> q;
  std::vector<ElementId> partner(p.size(), 0);
  for (ElementId z = 0; z < p.size(); ++z) {
    const auto joins = join_set(p, y, z);
    if (joins.size() != 1) return std::nullopt;
    if (!p.support(z).contains(i)) {
      q.push_back(z);
      partner[z] = joins.front();
    }
  }
  // ψ: 2^{i} × Q -> P, (0, z) ↦ z, (1, z) ↦ y ∨ z.
  std::vector<char> hit(p.size(), 0);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::kFactorizationAssertFailed,
                "cone atom " + p.name(y) + ": " + why);
  };
  for (ElementId z : q) {
    const ElementId w = partner[z];
    if (hit[z] || hit[w]) fail("ψ is not injective");
    hit[z] = hit[w] = 1;
    if (p.rank(w) != p.rank(z) + 1 || !p.support(w).contains(i)) fail("ψ misranks " + p.name(z));
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) fail("ψ is not surjective");
  for (ElementId a : q)
    for (ElementId b : q)
      if (p.leq(a, b) != p.leq(partner[a], partner[b])) fail("ψ does not preserve the order");
  return induced_subposet(p, q);
}

}  // namespace

GorensteinFactorization gorenstein_factor(const SimplicialPoset& p,
                                          const std::vector<unsigned>& atom_order) {
  std::vector<unsigned> order = atom_order;
  if (order.empty()) {
    for (unsigned i = 0; i < p.atom_count(); ++i) order.push_back(i);
  }
  GorensteinFactorization out{{}, p};
  bool progress = true;
  while (progress) {
    progress = false;
    for (unsigned i : order) {
      if (std::find(out.cone_atoms.begin(), out.cone_atoms.end(), i) != out.cone_atoms.end()) continue;
      const auto here = out.core.find(p.name(p.atom(i)));
      if (!here) continue;
      auto next = peel(out.core, out.core.atom_index(*here));
      if (!next) continue;
      out.core = std::move(*next);
      out.cone_atoms.push_back(i);
      progress = true;
      break;
    }
  }
  std::sort(out.cone_atoms.begin(), out.cone_atoms.end());
  return out;
}

bool is_gorenstein(const SimplicialPoset& p, const FieldSpec& field) {
  return is_gorenstein_star(gorenstein_factor(p).core, field);
}

std::string SerreResult::to_string() const {
  switch (kind) {
    case Kind::kCohenMacaulay:
      return "CM";
    case Kind::kFailsS2:
      return "fails S_2";
    case Kind::kFinite:
      break;
  }
  return std::to_string(r);
}

std::vector<std::optional<unsigned>> dualizing_cohomology_dims(const SimplicialPoset& p,
                                                               const LocalCohomologyTable& table) {
  std::vector<std::optional<unsigned>> out(table.d + 1);
  for (ElementId x = 0; x < p.size(); ++x) {
    for (unsigned i = 0; i <= table.d; ++i) {
      if (table.dims[x][i] == 0) continue;
      if (!out[i] || *out[i] < p.rank(x)) out[i] = p.rank(x);
    }
  }
  return out;
}

SerreResult serre_max_r(const SimplicialPoset& p, const LocalCohomologyTable& table) {
  const auto dims = dualizing_cohomology_dims(p, table);
  std::optional<long long> bound;
  for (unsigned i = 0; i < table.d; ++i) {
    if (!dims[i]) continue;
    const long long r = static_cast<long long>(i) - static_cast<long long>(*dims[i]);
    bound = bound ? std::min(*bound, r) : r;
  }
  if (!bound) return {SerreResult::Kind::kCohenMacaulay, 0};
  if (*bound < 2) return {SerreResult::Kind::kFailsS2, 0};
  if (!p.is_pure()) throw Error(ErrorKind::kInternal, "(S_2) holds on a non-pure poset");
  return {SerreResult::Kind::kFinite, static_cast<unsigned>(*bound)};
}

SerreResult serre_max_r(const SimplicialPoset& p, const FieldSpec& field) {
  return serre_max_r(p, local_cohomology_table(p, field));
}

bool skeleton_depth_crosscheck(const SimplicialPoset& p, const FieldSpec& field) {
  const unsigned lhs = depth(p, field);
  int best = -1;  // {0̂} is Cohen-Macaulay
  for (int i = 0; i < static_cast<int>(p.rank()); ++i) {
    if (is_cohen_macaulay(skeleton(p, i), field)) best = i;
  }
  return static_cast<long long>(lhs) == 1 + best;
}

bool murai_terai_check(const SimplicialPoset& p, const FieldSpec& field) {
  const auto s = serre_max_r(p, field);
  unsigned r = p.rank();
  if (s.kind == SerreResult::Kind::kFailsS2) r = 1;
  if (s.kind == SerreResult::Kind::kFinite) r = s.r;
  const auto h = h_vector(p);
  for (unsigned i = 0; i <= std::min<unsigned>(r, p.rank()); ++i)
    if (h[i] < 0) return false;
  return true;
}

std::vector<std::vector<std::size_t>> jx_local_cohomology(const SimplicialPoset& p, ElementId x,
                                                          const LocalCohomologyTable& table) {
  std::vector<std::vector<std::size_t>> out(p.size(), std::vector<std::size_t>(table.d + 1, 0));
  for (ElementId y = 0; y < p.size(); ++y)
    for (ElementId z : join_set(p, x, y))
      for (unsigned i = 0; i <= table.d; ++i) out[y][i] += table.dims[z][i];
  return out;
}

std::vector<std::vector<std::size_t>> jx_local_cohomology(const SimplicialPoset& p, ElementId x,
                                                          const FieldSpec& field) {
  return jx_local_cohomology(p, x, local_cohomology_table(p, field));
}

ClassificationReport classify(const SimplicialPoset& p, const LocalCohomologyTable& table) {
  ClassificationReport r;
  r.field = table.field;
  r.d = p.rank();
  r.depth = depth(table);
  r.f_vector = f_vector(p);
  r.h_vector = h_vector(p);
  r.cohen_macaulay = is_cohen_macaulay(table);
  r.buchsbaum = is_buchsbaum(table);
  r.gorenstein_star = r.cohen_macaulay && gorenstein_star_given_cm(p, table.field);
  const auto factor = gorenstein_factor(p);
  for (unsigned i : factor.cone_atoms) r.cone_set.push_back(i + 1);
  r.gorenstein = factor.cone_atoms.empty() ? r.gorenstein_star
                                           : is_gorenstein_star(factor.core, table.field);
  r.serre = serre_max_r(p, table);
  r.dualizing_cohomology_dims = dualizing_cohomology_dims(p, table);
  return r;
}

ClassificationReport classify(const SimplicialPoset& p, const FieldSpec& field) {
  return classify(p, local_cohomology_table(p, field));
}

}  // namespace facering
