#pragma once

// Finite-dimensional modules over the incidence algebra Λ of a simplicial
// poset. A module is a vector space N_x per element together with a linear
// map N_y -> N_x for every cover x ⋗ y; the maps along any two saturated
// chains between the same endpoints must agree. These model squarefree
// modules over the face ring, with N_x the piece in degree ua(x).

#include <cstddef>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "facering/error.hpp"
#include "facering/linalg.hpp"
#include "facering/matrix.hpp"
#include "facering/poset.hpp"

namespace facering {

template <class F>
struct LambdaModule {
  std::vector<std::size_t> dims;
  /// (upper, lower) -> matrix N_lower -> N_upper (dims[upper] x dims[lower]).
  std::map<std::pair<ElementId, ElementId>, DenseMatrix<F>> cover_maps;

  const DenseMatrix<F>& cover_map(ElementId upper, ElementId lower) const {
    return cover_maps.at({upper, lower});
  }

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }
};

/// A Λ-linear map, one matrix per element (target.dims[x] x source.dims[x]).
template <class F>
using ModuleMap = std::vector<DenseMatrix<F>>;

/// Zero module with the right shape for `p`.
template <class F>
LambdaModule<F> zero_module(const SimplicialPoset& p) {
  LambdaModule<F> n;
  n.dims.assign(p.size(), 0);
  for (ElementId x = 0; x < p.size(); ++x)
    for (ElementId y : p.lower_covers(x)) n.cover_maps[{x, y}] = DenseMatrix<F>(0, 0);
  return n;
}

/// The module whose pieces are k exactly on `support` (which must be
/// convex enough for identities to be path independent, e.g. an order ideal
/// or filter) with identity maps inside it.
template <class F>
LambdaModule<F> indicator_module(const F& field, const SimplicialPoset& p,
                                 const std::vector<char>& support) {
  LambdaModule<F> n;
  n.dims.assign(p.size(), 0);
  for (ElementId x = 0; x < p.size(); ++x) n.dims[x] = support[x] ? 1 : 0;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      DenseMatrix<F> m(n.dims[x], n.dims[y]);
      if (support[x] && support[y]) m(0, 0) = field.one();
      n.cover_maps[{x, y}] = std::move(m);
    }
  }
  return n;
}

/// The module of A itself: k everywhere, identity maps.
template <class F>
LambdaModule<F> ring_module(const F& field, const SimplicialPoset& p) {
  return indicator_module(field, p, std::vector<char>(p.size(), 1));
}

/// E_Λ(x), the module of A/p_x: k on {z <= x}.
template <class F>
LambdaModule<F> injective_module(const F& field, const SimplicialPoset& p, ElementId x) {
  std::vector<char> s(p.size(), 0);
  for (ElementId z : p.down_set(x)) s[z] = 1;
  return indicator_module(field, p, s);
}

/// The module of the ideal J_x = (t_x): k on {z >= x}.
template <class F>
LambdaModule<F> projective_module(const F& field, const SimplicialPoset& p, ElementId x) {
  std::vector<char> s(p.size(), 0);
  for (ElementId z : p.up_set(x)) s[z] = 1;
  return indicator_module(field, p, s);
}

template <class F>
LambdaModule<F> direct_sum(const F& field, const SimplicialPoset& p, const LambdaModule<F>& a,
                           const LambdaModule<F>& b) {
  (void)field;
  LambdaModule<F> s;
  s.dims.resize(p.size());
  for (ElementId x = 0; x < p.size(); ++x) s.dims[x] = a.dims[x] + b.dims[x];
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      DenseMatrix<F> m(s.dims[x], s.dims[y]);
      const auto& ma = a.cover_map(x, y);
      const auto& mb = b.cover_map(x, y);
      for (std::size_t r = 0; r < ma.rows(); ++r)
        for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
      for (std::size_t r = 0; r < mb.rows(); ++r)
        for (std::size_t c = 0; c < mb.cols(); ++c) m(a.dims[x] + r, a.dims[y] + c) = mb(r, c);
      s.cover_maps[{x, y}] = std::move(m);
    }
  }
  return s;
}

/// The structure map e_{x,y}: N_y -> N_x for y <= x, composed along the
/// saturated chain that always steps to the lowest-id upper cover.
template <class F>
DenseMatrix<F> path_map(const F& field, const SimplicialPoset& p, const LambdaModule<F>& n,
                        ElementId lower, ElementId upper) {
  if (!p.leq(lower, upper)) {
    throw Error(ErrorKind::kInvalidInput, p.name(lower) + " is not below " + p.name(upper));
  }
  DenseMatrix<F> acc = DenseMatrix<F>::identity(field, n.dims[lower]);
  ElementId cur = lower;
  while (cur != upper) {
    ElementId next = cur;
    for (ElementId u : p.upper_covers(cur)) {
      if (p.leq(u, upper)) {
        next = u;
        break;
      }
    }
    acc = multiply(field, n.cover_map(next, cur), acc);
    cur = next;
  }
  return acc;
}

/// Shapes match and e_{x,z} e_{z,y} = e_{x,z'} e_{z',y} on every rank-two
/// interval (which implies path independence everywhere).
template <class F>
bool is_valid_module(const F& field, const SimplicialPoset& p, const LambdaModule<F>& n) {
  if (n.dims.size() != p.size()) return false;
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      auto it = n.cover_maps.find({x, y});
      if (it == n.cover_maps.end()) return false;
      if (it->second.rows() != n.dims[x] || it->second.cols() != n.dims[y]) return false;
    }
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    std::map<ElementId, DenseMatrix<F>> first_route;
    for (ElementId z : p.lower_covers(x)) {
      for (ElementId y : p.lower_covers(z)) {
        auto composite = multiply(field, n.cover_map(x, z), n.cover_map(z, y));
        auto [it, fresh] = first_route.emplace(y, composite);
        if (!fresh && !(it->second == composite)) return false;
      }
    }
  }
  return true;
}

/// soc(N)_x: vectors of N_x killed by every cover map out of x, as columns.
template <class F>
DenseMatrix<F> socle_basis(const F& field, const SimplicialPoset& p, const LambdaModule<F>& n,
                           ElementId x) {
  std::size_t total_rows = 0;
  for (ElementId u : p.upper_covers(x)) total_rows += n.dims[u];
  DenseMatrix<F> stacked(total_rows, n.dims[x]);
  std::size_t row = 0;
  for (ElementId u : p.upper_covers(x)) {
    const auto& m = n.cover_map(u, x);
    for (std::size_t r = 0; r < m.rows(); ++r, ++row)
      for (std::size_t c = 0; c < m.cols(); ++c) stacked(row, c) = m(r, c);
  }
  return kernel_basis(field, stacked);
}

/// N / W for a family of subspaces W_x (columns of `spans[x]`) that is
/// closed under the cover maps. Returns the quotient module and the
/// projections N_x -> (N/W)_x.
template <class F>
std::pair<LambdaModule<F>, ModuleMap<F>> quotient_module(const F& field, const SimplicialPoset& p,
                                                         const LambdaModule<F>& n,
                                                         const std::vector<DenseMatrix<F>>& spans) {
  std::vector<QuotientMap<F>> q(p.size());
  LambdaModule<F> out;
  out.dims.resize(p.size());
  ModuleMap<F> proj(p.size());
  for (ElementId x = 0; x < p.size(); ++x) {
    q[x] = quotient_by_columns(field, n.dims[x], spans[x]);
    out.dims[x] = q[x].dim();
    proj[x] = q[x].projection;
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    for (ElementId y : p.lower_covers(x)) {
      auto m = multiply(field, q[x].projection,
                        multiply(field, n.cover_map(x, y), q[y].section(field)));
      out.cover_maps[{x, y}] = std::move(m);
    }
  }
  return {std::move(out), std::move(proj)};
}

/// A random module: the quotient of a sum of one to three indecomposable
/// injectives by the submodule generated by up to two random elements.
/// Quotients of modules are modules, so the result is always valid.
template <class F, class Rng>
LambdaModule<F> random_lambda_module(const F& field, const SimplicialPoset& p, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const int summands = std::uniform_int_distribution<int>(1, 3)(rng);
  LambdaModule<F> e = injective_module(field, p, static_cast<ElementId>(pick(rng)));
  for (int k = 1; k < summands; ++k) {
    e = direct_sum(field, p, e, injective_module(field, p, static_cast<ElementId>(pick(rng))));
  }
  const int generators = std::uniform_int_distribution<int>(0, 2)(rng);
  std::vector<DenseMatrix<F>> spans(p.size());
  for (ElementId x = 0; x < p.size(); ++x) spans[x] = DenseMatrix<F>(e.dims[x], 0);
  for (int g = 0; g < generators; ++g) {
    const auto at = static_cast<ElementId>(pick(rng));
    DenseMatrix<F> v(e.dims[at], 1);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, 0) = field.from_int(coeff(rng));
    for (ElementId z : p.up_set(at)) {
      auto image = multiply(field, path_map(field, p, e, at, z), v);
      DenseMatrix<F> grown(e.dims[z], spans[z].cols() + 1);
      for (std::size_t r = 0; r < e.dims[z]; ++r) {
        for (std::size_t c = 0; c < spans[z].cols(); ++c) grown(r, c) = spans[z](r, c);
        grown(r, spans[z].cols()) = image(r, 0);
      }
      spans[z] = std::move(grown);
    }
  }
  return quotient_module(field, p, e, spans).first;
}

}  // namespace facering
