#pragma once

// Bounded complexes of injective squarefree modules, i.e. finite direct
// sums of copies of A/p_x. Since Hom(A/p_x, A/p_y) is k (the canonical
// surjection) when y <= x and zero otherwise, a differential is a scalar
// matrix whose entry from a summand at x to a summand at y may be nonzero
// only when y <= x.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "facering/error.hpp"
#include "facering/incidence.hpp"
#include "facering/lambda_module.hpp"
#include "facering/linalg.hpp"
#include "facering/poset.hpp"

namespace facering {

template <class F>
struct InjComplex {
  int first_degree = 0;
  /// Carrier of each summand, per degree from `first_degree`.
  std::vector<std::vector<ElementId>> terms;
  /// differentials[i]: terms[i] -> terms[i+1]; rows index target summands.
  std::vector<SparseMatrix<F>> differentials;

  int last_degree() const { return first_degree + static_cast<int>(terms.size()) - 1; }

  const std::vector<ElementId>& term(int degree) const {
    static const std::vector<ElementId> kEmpty;
    if (degree < first_degree || degree > last_degree()) return kEmpty;
    return terms[static_cast<std::size_t>(degree - first_degree)];
  }

  std::size_t total_summands() const {
    std::size_t t = 0;
    for (const auto& term : terms) t += term.size();
    return t;
  }
};

/// Throws `kInvalidComplex` on a shape mismatch, an entry from x to y with
/// y not below x, or a nonzero composite of consecutive differentials.
template <class F>
void check_inj_complex(const F& field, const SimplicialPoset& p, const InjComplex<F>& j) {
  if (!j.terms.empty() && j.differentials.size() + 1 != j.terms.size()) {
    throw Error(ErrorKind::kInvalidComplex, "differential count does not match the terms");
  }
  for (std::size_t i = 0; i < j.differentials.size(); ++i) {
    const auto& d = j.differentials[i];
    if (d.rows() != j.terms[i + 1].size() || d.cols() != j.terms[i].size()) {
      throw Error(ErrorKind::kInvalidComplex, "differential has the wrong shape");
    }
    for (std::size_t r = 0; r < d.rows(); ++r) {
      for (const auto& [c, v] : d.row(r)) {
        if (!p.leq(j.terms[i + 1][r], j.terms[i][c])) {
          throw Error(ErrorKind::kInvalidComplex,
                      "nonzero map from A/p_" + p.name(j.terms[i][c]) + " to A/p_" +
                          p.name(j.terms[i + 1][r]));
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < j.differentials.size(); ++i) {
    if (!multiply(field, j.differentials[i + 1], j.differentials[i]).is_zero()) {
      throw Error(ErrorKind::kInvalidComplex,
                  "composite of differentials out of degree " +
                      std::to_string(j.first_degree + static_cast<int>(i)) + " is nonzero");
    }
  }
}

/// I_A: degree -i holds one A/p_x per x of rank i; the summand at x maps to
/// Σ_{y ⋖ x} ε(x,y) · (summand at y).
template <class F>
InjComplex<F> dualizing_complex(const F& field, const SimplicialPoset& p) {
  const int d = static_cast<int>(p.rank());
  const IncidenceFunction eps(p);
  InjComplex<F> out;
  out.first_degree = -d;
  std::vector<std::size_t> position(p.size());
  for (int i = d; i >= 0; --i) {
    auto elems = p.elements_of_rank(static_cast<unsigned>(i));
    for (std::size_t k = 0; k < elems.size(); ++k) position[elems[k]] = k;
    out.terms.push_back(std::move(elems));
  }
  for (std::size_t t = 0; t + 1 < out.terms.size(); ++t) {
    SparseMatrix<F> m(out.terms[t + 1].size(), out.terms[t].size());
    for (std::size_t c = 0; c < out.terms[t].size(); ++c) {
      const ElementId x = out.terms[t][c];
      const auto& signs = eps.lower_signs(x);
      const auto& lower = p.lower_covers(x);
      for (std::size_t k = 0; k < lower.size(); ++k) {
        m.set(position[lower[k]], c, field.from_int(signs[k]));
      }
    }
    out.differentials.push_back(std::move(m));
  }
  return out;
}

/// The complex of degree-ua(x) pieces: A/p_y contributes k iff y >= x.
template <class F>
VectorSpaceComplex<F> evaluate_at(const SimplicialPoset& p, const InjComplex<F>& j, ElementId x) {
  VectorSpaceComplex<F> out;
  out.first_degree = j.first_degree;
  std::vector<std::vector<std::size_t>> kept(j.terms.size());
  for (std::size_t t = 0; t < j.terms.size(); ++t) {
    for (std::size_t s = 0; s < j.terms[t].size(); ++s)
      if (p.leq(x, j.terms[t][s])) kept[t].push_back(s);
    out.dims.push_back(kept[t].size());
  }
  for (std::size_t t = 0; t < j.differentials.size(); ++t) {
    out.differentials.push_back(submatrix(j.differentials[t], kept[t + 1], kept[t]));
  }
  return out;
}

/// 𝔻(J). The term of degree p is ⊕_{i + ρ(x) = -p} (J^i_{ua(x)})^* ⊗ A/p_x,
/// with one summand at x for each summand s of J^i whose carrier is >= x.
/// The summand (x, i, s) maps to
///   Σ_{y ⋖ x} ε(x,y) · (y, i, s)  +  (-1)^p Σ_{s'} ∂^{i-1}[s, s'] · (x, i-1, s').
template <class F>
InjComplex<F> dd(const F& field, const SimplicialPoset& p, const InjComplex<F>& j) {
  check_inj_complex(field, p, j);
  InjComplex<F> out;
  if (j.terms.empty()) return out;
  const int d = static_cast<int>(p.rank());
  const IncidenceFunction eps(p);

  struct Summand {
    ElementId x;
    int i;
    std::size_t s;
  };
  const int lo = -j.last_degree() - d;
  const int hi = -j.first_degree;
  const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::vector<Summand>> summands(count);
  // index[(x, i - first, s)] -> position within its degree
  std::vector<std::vector<std::vector<std::size_t>>> index(
      p.size(), std::vector<std::vector<std::size_t>>(j.terms.size()));
  for (std::size_t t = 0; t < j.terms.size(); ++t) {
    const int i = j.first_degree + static_cast<int>(t);
    for (ElementId x = 0; x < p.size(); ++x) {
      index[x][t].assign(j.terms[t].size(), static_cast<std::size_t>(-1));
      for (std::size_t s = 0; s < j.terms[t].size(); ++s) {
        if (!p.leq(x, j.terms[t][s])) continue;
        const int deg = -i - static_cast<int>(p.rank(x));
        auto& bucket = summands[static_cast<std::size_t>(deg - lo)];
        index[x][t][s] = bucket.size();
        bucket.push_back({x, i, s});
      }
    }
  }
  out.first_degree = lo;
  for (const auto& bucket : summands) {
    std::vector<ElementId> carriers;
    for (const auto& sm : bucket) carriers.push_back(sm.x);
    out.terms.push_back(std::move(carriers));
  }
  for (std::size_t k = 0; k + 1 < count; ++k) {
    const int deg = lo + static_cast<int>(k);
    const auto sign = field.from_int(deg % 2 == 0 ? 1 : -1);
    SparseMatrix<F> m(summands[k + 1].size(), summands[k].size());
    for (std::size_t c = 0; c < summands[k].size(); ++c) {
      const auto [x, i, s] = summands[k][c];
      const std::size_t t = static_cast<std::size_t>(i - j.first_degree);
      const auto& lower = p.lower_covers(x);
      const auto& signs = eps.lower_signs(x);
      for (std::size_t q = 0; q < lower.size(); ++q) {
        m.add_to(field, index[lower[q]][t][s], c, field.from_int(signs[q]));
      }
      if (t > 0) {
        const auto& dprev = j.differentials[t - 1];  // J^{i-1} -> J^i
        for (const auto& [s_prev, v] : dprev.row(s)) {
          // ∂[s, s_prev] nonzero forces carrier(s_prev) >= carrier(s) >= x.
          m.add_to(field, index[x][t - 1][s_prev], c, field.mul(sign, v));
        }
      }
    }
    out.differentials.push_back(std::move(m));
  }
  // Degrees with no summand at either end carry no information.
  while (!out.terms.empty() && out.terms.front().empty()) {
    out.terms.erase(out.terms.begin());
    if (!out.differentials.empty()) out.differentials.erase(out.differentials.begin());
    ++out.first_degree;
  }
  while (!out.terms.empty() && out.terms.back().empty()) {
    out.terms.pop_back();
    if (!out.differentials.empty()) out.differentials.pop_back();
  }
  if (out.terms.empty()) out = InjComplex<F>{};
  return out;
}

/// A minimal injective resolution 0 -> N -> E^0 -> ... -> E^l -> 0 together
/// with the coaugmentation N -> E^0.
template <class F>
struct InjectiveResolution {
  InjComplex<F> complex;
  ModuleMap<F> coaugmentation;
};

/// Ē: the Λ-module of the injective term with the given summand carriers.
/// Piece z has one basis vector per summand whose carrier is >= z.
template <class F>
LambdaModule<F> injective_term_module(const F& field, const SimplicialPoset& p,
                                      const std::vector<ElementId>& carriers,
                                      std::vector<std::vector<std::size_t>>* piece_summands = nullptr) {
  std::vector<std::vector<std::size_t>> local(p.size());
  for (ElementId z = 0; z < p.size(); ++z)
    for (std::size_t k = 0; k < carriers.size(); ++k)
      if (p.leq(z, carriers[k])) local[z].push_back(k);
  LambdaModule<F> e;
  e.dims.resize(p.size());
  for (ElementId z = 0; z < p.size(); ++z) e.dims[z] = local[z].size();
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      DenseMatrix<F> m(e.dims[x], e.dims[y]);
      std::size_t r = 0;
      for (std::size_t c = 0; c < local[y].size(); ++c) {
        while (r < local[x].size() && local[x][r] < local[y][c]) ++r;
        if (r < local[x].size() && local[x][r] == local[y][c]) m(r, c) = field.one();
      }
      e.cover_maps[{x, y}] = std::move(m);
    }
  }
  if (piece_summands) *piece_summands = std::move(local);
  return e;
}

/// Builds E^0 = ⊕_x E(x)^{dim soc(N)_x} and iterates on cokernels. Throws
/// `kResolutionTooLong` if more than rank P + 1 terms would be needed.
template <class F>
InjectiveResolution<F> injective_resolution(const F& field, const SimplicialPoset& p,
                                            const LambdaModule<F>& n) {
  if (!is_valid_module(field, p, n)) {
    throw Error(ErrorKind::kInvalidInput, "Λ-module maps are not path independent");
  }
  InjectiveResolution<F> res;
  res.complex.first_degree = 0;
  for (ElementId z = 0; z < p.size(); ++z) res.coaugmentation.emplace_back(0, n.dims[z]);  // N = 0
  LambdaModule<F> current = n;
  ModuleMap<F> into_current;  // E^{p-1} -> current, empty at p = 0
  std::vector<std::vector<std::size_t>> prev_pieces;
  const unsigned max_len = p.rank();
  for (unsigned step = 0; !current.is_zero(); ++step) {
    if (step > max_len) {
      throw Error(ErrorKind::kResolutionTooLong,
                  "injective resolution longer than rank " + std::to_string(max_len));
    }
    // Socle projections: functionals on current_x restricting to a dual basis of soc_x.
    std::vector<ElementId> carriers;
    std::vector<DenseMatrix<F>> functionals(p.size());
    for (ElementId x = 0; x < p.size(); ++x) {
      if (current.dims[x] == 0) continue;
      const auto soc = socle_basis(field, p, current, x);
      if (soc.cols() == 0) continue;
      functionals[x] = left_inverse(field, soc);
      for (std::size_t k = 0; k < soc.cols(); ++k) carriers.push_back(x);
    }
    std::vector<std::vector<std::size_t>> pieces;
    LambdaModule<F> e = injective_term_module(field, p, carriers, &pieces);

    // ι: current -> E, row for summand k at piece z is φ_k ∘ e_{carrier_k, z}.
    // Copies of E(x) are contiguous; copy_index[k] picks the row of φ_x.
    std::vector<std::size_t> copy_index(carriers.size());
    for (std::size_t k = 0, run = 0; k < carriers.size(); ++k) {
      run = (k > 0 && carriers[k] == carriers[k - 1]) ? run + 1 : 0;
      copy_index[k] = run;
    }
    ModuleMap<F> iota(p.size());
    for (ElementId z = 0; z < p.size(); ++z) {
      iota[z] = DenseMatrix<F>(e.dims[z], current.dims[z]);
      for (std::size_t r = 0; r < pieces[z].size(); ++r) {
        const std::size_t k = pieces[z][r];
        const ElementId x = carriers[k];
        const auto up = path_map(field, p, current, z, x);
        const auto& phi = functionals[x];
        for (std::size_t c = 0; c < current.dims[z]; ++c) {
          auto v = field.zero();
          for (std::size_t m = 0; m < current.dims[x]; ++m) {
            v = field.add(v, field.mul(phi(copy_index[k], m), up(m, c)));
          }
          iota[z](r, c) = v;
        }
      }
    }

    if (step > 0) {
      // d^{step-1} = ι ∘ (E^{step-1} -> current); read the scalar from
      // summand l (carrier x_l) to summand k (carrier x_k <= x_l) at piece x_k.
      const auto& prev_carriers = res.complex.terms.back();
      SparseMatrix<F> d(carriers.size(), prev_carriers.size());
      for (std::size_t k = 0; k < carriers.size(); ++k) {
        const ElementId xk = carriers[k];
        const auto composite = multiply(field, iota[xk], into_current[xk]);
        const auto& here = pieces[xk];
        const std::size_t row = static_cast<std::size_t>(
            std::find(here.begin(), here.end(), k) - here.begin());
        for (std::size_t c = 0; c < prev_pieces[xk].size(); ++c) {
          const std::size_t l = prev_pieces[xk][c];
          if (!field.is_zero(composite(row, c))) d.set(k, l, composite(row, c));
        }
      }
      res.complex.differentials.push_back(std::move(d));
    } else {
      res.coaugmentation = iota;
    }
    res.complex.terms.push_back(carriers);

    std::vector<DenseMatrix<F>> spans(p.size());
    for (ElementId z = 0; z < p.size(); ++z) spans[z] = iota[z];
    auto [quot, proj] = quotient_module(field, p, e, spans);
    current = std::move(quot);
    into_current = std::move(proj);
    prev_pieces = std::move(pieces);
  }
  return res;
}

}  // namespace facering
