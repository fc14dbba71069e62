#pragma once

// Local cohomology of face rings through the cochain complexes K_x and the
// ring-theoretic properties read off from them.
//
// K_x has basis b_z for z >= x in degrees ρ(x)..d with
//   b_z ↦ Σ_{w ⋗ z} ε(w, z) b_w,
// and H^i(K_x) is the graded piece [H^i_m(A)]_{-ua} for every ua with
// s(ua) = x.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facering/field.hpp"
#include "facering/incidence.hpp"
#include "facering/lambda_module.hpp"
#include "facering/linalg.hpp"
#include "facering/poset.hpp"

namespace facering {

struct KComplex {
  ElementId base = 0;
  unsigned first_degree = 0;  // ρ(base)
  /// basis[i - first_degree] = {z >= base : ρ(z) = i}, ascending.
  std::vector<std::vector<ElementId>> basis;

  unsigned last_degree() const { return first_degree + static_cast<unsigned>(basis.size()) - 1; }
};

KComplex k_complex(const SimplicialPoset& p, ElementId x);

template <class F>
VectorSpaceComplex<F> to_vector_space_complex(const F& field, const SimplicialPoset& p,
                                              const KComplex& k) {
  const IncidenceFunction eps(p);
  VectorSpaceComplex<F> out;
  out.first_degree = static_cast<int>(k.first_degree);
  for (const auto& b : k.basis) out.dims.push_back(b.size());
  for (std::size_t t = 0; t + 1 < k.basis.size(); ++t) {
    const auto& src = k.basis[t];
    const auto& dst = k.basis[t + 1];
    SparseMatrix<F> m(dst.size(), src.size());
    for (std::size_t r = 0; r < dst.size(); ++r) {
      const ElementId w = dst[r];
      const auto& lower = p.lower_covers(w);
      const auto& signs = eps.lower_signs(w);
      for (std::size_t q = 0; q < lower.size(); ++q) {
        auto it = std::lower_bound(src.begin(), src.end(), lower[q]);
        if (it != src.end() && *it == lower[q]) {
          m.set(r, static_cast<std::size_t>(it - src.begin()), field.from_int(signs[q]));
        }
      }
    }
    out.differentials.push_back(std::move(m));
  }
  return out;
}

template <class F>
VectorSpaceComplex<F> k_complex(const F& field, const SimplicialPoset& p, ElementId x) {
  return to_vector_space_complex(field, p, k_complex(p, x));
}

/// The inclusion K_x ⊂ K_y for y <= x as a chain map.
template <class F>
ChainMap<F> k_inclusion(const F& field, const SimplicialPoset& p, const KComplex& kx,
                        const KComplex& ky, const VectorSpaceComplex<F>& cx,
                        const VectorSpaceComplex<F>& cy) {
  (void)p;
  ChainMap<F> map{&cx, &cy, {}};
  for (unsigned deg = kx.first_degree; deg <= kx.last_degree(); ++deg) {
    const auto& src = kx.basis[deg - kx.first_degree];
    const auto& dst = ky.basis[deg - ky.first_degree];
    SparseMatrix<F> m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      auto it = std::lower_bound(dst.begin(), dst.end(), src[c]);
      m.set(static_cast<std::size_t>(it - dst.begin()), c, field.one());
    }
    map.components.push_back(std::move(m));
  }
  return map;
}

/// dim_k H^i(K_x) for every x and every i in 0..d (zero outside ρ(x)..d).
struct LocalCohomologyTable {
  FieldSpec field;
  unsigned d = 0;
  std::vector<std::vector<std::size_t>> dims;  // [x][i]

  std::size_t at(ElementId x, unsigned i) const { return i <= d ? dims[x][i] : 0; }
};

LocalCohomologyTable local_cohomology_table(const SimplicialPoset& p, const FieldSpec& field);

/// (dim H̃^0(X), ..., dim H̃^{d-1}(X)) for X the underlying space of Γ(P).
std::vector<std::size_t> reduced_cohomology_X(const LocalCohomologyTable& table);
std::vector<std::size_t> reduced_cohomology_X(const SimplicialPoset& p, const FieldSpec& field);

/// min{i : some H^i(K_x) != 0}. Also asserts that the largest such i is d.
unsigned depth(const LocalCohomologyTable& table);
unsigned depth(const SimplicialPoset& p, const FieldSpec& field);

bool is_cohen_macaulay(const LocalCohomologyTable& table);
bool is_cohen_macaulay(const SimplicialPoset& p, const FieldSpec& field);

/// H^i(K_x) = 0 for all i < d and all x != 0̂.
bool is_buchsbaum(const LocalCohomologyTable& table);
bool is_buchsbaum(const SimplicialPoset& p, const FieldSpec& field);

/// ω with ω_x = H^d(K_x)^* and cover maps dual to the maps on top
/// cohomology induced by K_x ⊂ K_y.
template <class F>
LambdaModule<F> canonical_module(const F& field, const SimplicialPoset& p) {
  std::vector<KComplex> ks;
  std::vector<VectorSpaceComplex<F>> cs;
  ks.reserve(p.size());
  cs.reserve(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    ks.push_back(k_complex(p, x));
    cs.push_back(to_vector_space_complex(field, p, ks.back()));
  }
  const int top = static_cast<int>(p.rank());
  LambdaModule<F> omega;
  omega.dims.resize(p.size());
  for (ElementId x = 0; x < p.size(); ++x) omega.dims[x] = cohomology_basis(field, cs[x], top).dim();
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      const auto incl = k_inclusion(field, p, ks[x], ks[y], cs[x], cs[y]);
      omega.cover_maps[{x, y}] = induced_map_on_cohomology(field, incl, top).transpose();
    }
  }
  return omega;
}

/// Cohen-Macaulay, and ω has every piece one-dimensional with every cover
/// map nonzero (so ω is isomorphic to the module of A).
bool is_gorenstein_star(const SimplicialPoset& p, const FieldSpec& field);

struct GorensteinFactorization {
  std::vector<unsigned> cone_atoms;  // 0-based atom indices of P, ascending
  SimplicialPoset core;
};

/// Peels cone atoms (#[y_i ∨ z] = 1 for all z) in the given atom order
/// (default: increasing index) until none is left, checking each time that
/// (ε, z) ↦ ε ∨ z is a bijection 2^{i} × Q -> P. Throws
/// `kFactorizationAssertFailed` otherwise.
GorensteinFactorization gorenstein_factor(const SimplicialPoset& p,
                                          const std::vector<unsigned>& atom_order = {});

bool is_gorenstein(const SimplicialPoset& p, const FieldSpec& field);

/// Largest r >= 2 for which Serre's condition (S_r) holds.
struct SerreResult {
  enum class Kind { kCohenMacaulay, kFinite, kFailsS2 };
  Kind kind = Kind::kCohenMacaulay;
  unsigned r = 0;  // meaningful for kFinite

  std::string to_string() const;
  bool operator==(const SerreResult&) const = default;
};

/// dim H^{-i}(I_A) for i = 0..d as the largest ρ(x) with H^i(K_x) != 0;
/// nullopt stands for the zero module (dimension -∞).
std::vector<std::optional<unsigned>> dualizing_cohomology_dims(const SimplicialPoset& p,
                                                               const LocalCohomologyTable& table);

SerreResult serre_max_r(const SimplicialPoset& p, const LocalCohomologyTable& table);
SerreResult serre_max_r(const SimplicialPoset& p, const FieldSpec& field);

/// depth A = 1 + max{i : A^{(i)} Cohen-Macaulay}, both sides computed
/// from scratch. The (-1)-skeleton {0̂} counts as Cohen-Macaulay.
bool skeleton_depth_crosscheck(const SimplicialPoset& p, const FieldSpec& field);

/// With r from `serre_max_r` (d for Cohen-Macaulay rings, 1 when (S_2)
/// fails), checks h_i >= 0 for all i <= r.
bool murai_terai_check(const SimplicialPoset& p, const FieldSpec& field);

/// [y][i] ↦ dim H^i_m(J_x)_{-ua} with s(ua) = y, as Σ_{z ∈ [x∨y]} dim H^i(K_z).
std::vector<std::vector<std::size_t>> jx_local_cohomology(const SimplicialPoset& p, ElementId x,
                                                          const LocalCohomologyTable& table);
std::vector<std::vector<std::size_t>> jx_local_cohomology(const SimplicialPoset& p, ElementId x,
                                                          const FieldSpec& field);

struct ClassificationReport {
  FieldSpec field;
  unsigned d = 0;
  unsigned depth = 0;
  std::vector<long long> f_vector;
  std::vector<long long> h_vector;
  bool cohen_macaulay = false;
  bool buchsbaum = false;
  bool gorenstein_star = false;
  bool gorenstein = false;
  std::vector<unsigned> cone_set;  // 1-based atom indices
  SerreResult serre;
  std::vector<std::optional<unsigned>> dualizing_cohomology_dims;
};

ClassificationReport classify(const SimplicialPoset& p, const FieldSpec& field);
ClassificationReport classify(const SimplicialPoset& p, const LocalCohomologyTable& table);

}  // namespace facering
