#pragma once

// Exact linear algebra over RationalField and PrimeField.
//
// Ranks over Q run fraction-free on integer rows (Bareiss for the dense
// path, content-normalized row combination for the sparse path); ranks over
// GF(p) eliminate modularly. Everything that needs actual subspaces
// (kernels, quotients, cohomology bases) goes through a dense reduced row
// echelon form over the field itself.

#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <type_traits>
#include <vector>

#include "facering/error.hpp"
#include "facering/field.hpp"
#include "facering/matrix.hpp"

namespace facering {

enum class PivotRule {
  kMarkowitz,     // minimize (row length - 1) * (column count - 1)
  kFirstNonzero,  // lowest remaining row, its leftmost entry
};

enum class EliminationPath { kAuto, kDense, kSparse };

struct RankOptions {
  PivotRule pivot = PivotRule::kMarkowitz;
  EliminationPath path = EliminationPath::kAuto;
};

/// Matrices with both dimensions below this go through the dense path when
/// `EliminationPath::kAuto` is requested.
inline constexpr std::size_t kDenseCutoff = 64;

namespace detail {

template <class Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

// Sparse elimination skeleton shared by the modular and the fraction-free
// integer variants. `eliminate(pivot_row, pivot_pos, target_row, target_pos)`
// must return `target_row` with column `pivot_col` cleared.
template <class Scalar, class Eliminate>
std::size_t sparse_rank(std::vector<SparseRow<Scalar>> rows, std::size_t cols,
                        PivotRule rule, Eliminate eliminate) {
  std::vector<std::size_t> col_count(cols, 0);
  for (const auto& r : rows)
    for (const auto& e : r) ++col_count[e.first];

  auto find_pos = [](const SparseRow<Scalar>& row, std::size_t col) -> std::size_t {
    std::size_t lo = 0, hi = row.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      if (row[mid].first < col) lo = mid + 1; else hi = mid;
    }
    return (lo < row.size() && row[lo].first == col) ? lo : row.size();
  };

  std::vector<char> active(rows.size(), 1);
  std::size_t rank = 0;
  for (;;) {
    std::size_t best_row = rows.size();
    std::size_t best_pos = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      if (rows[r].empty()) {
        active[r] = 0;
        continue;
      }
      if (rule == PivotRule::kFirstNonzero) {
        best_row = r;
        best_pos = 0;
        break;
      }
      const std::size_t row_len = rows[r].size() - 1;
      for (std::size_t k = 0; k < rows[r].size(); ++k) {
        const std::size_t cost = row_len * (col_count[rows[r][k].first] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_pos = k;
        }
      }
      if (best_cost == 0) break;
    }
    if (best_row == rows.size()) break;

    const std::size_t pivot_col = rows[best_row][best_pos].first;
    active[best_row] = 0;
    ++rank;
    for (const auto& e : rows[best_row]) --col_count[e.first];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!active[r]) continue;
      const std::size_t pos = find_pos(rows[r], pivot_col);
      if (pos == rows[r].size()) continue;
      for (const auto& e : rows[r]) --col_count[e.first];
      rows[r] = eliminate(rows[best_row], best_pos, rows[r], pos);
      for (const auto& e : rows[r]) ++col_count[e.first];
    }
  }
  return rank;
}

// target - (target[pos] / pivot[ppos]) * pivot over GF(p).
inline SparseRow<std::uint32_t> eliminate_modular(const PrimeField& f,
                                                  const SparseRow<std::uint32_t>& pivot,
                                                  std::size_t ppos,
                                                  const SparseRow<std::uint32_t>& target,
                                                  std::size_t tpos) {
  const auto factor = f.div(target[tpos].second, pivot[ppos].second);
  SparseRow<std::uint32_t> out;
  out.reserve(pivot.size() + target.size());
  std::size_t i = 0, j = 0;
  while (i < pivot.size() || j < target.size()) {
    if (j == target.size() || (i < pivot.size() && pivot[i].first < target[j].first)) {
      out.emplace_back(pivot[i].first, f.neg(f.mul(factor, pivot[i].second)));
      ++i;
    } else if (i == pivot.size() || target[j].first < pivot[i].first) {
      out.push_back(target[j]);
      ++j;
    } else {
      auto v = f.sub(target[j].second, f.mul(factor, pivot[i].second));
      if (v != 0) out.emplace_back(target[j].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// a * target - b * pivot with a = pivot[ppos], b = target[tpos], then the
// row is divided by its content to keep entries small.
inline SparseRow<mpz_class> eliminate_fraction_free(const SparseRow<mpz_class>& pivot,
                                                    std::size_t ppos,
                                                    const SparseRow<mpz_class>& target,
                                                    std::size_t tpos) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), pivot[ppos].second.get_mpz_t(), target[tpos].second.get_mpz_t());
  const mpz_class a = pivot[ppos].second / g;
  const mpz_class b = target[tpos].second / g;
  SparseRow<mpz_class> out;
  out.reserve(pivot.size() + target.size());
  std::size_t i = 0, j = 0;
  while (i < pivot.size() || j < target.size()) {
    if (j == target.size() || (i < pivot.size() && pivot[i].first < target[j].first)) {
      out.emplace_back(pivot[i].first, -b * pivot[i].second);
      ++i;
    } else if (i == pivot.size() || target[j].first < pivot[i].first) {
      out.emplace_back(target[j].first, a * target[j].second);
      ++j;
    } else {
      mpz_class v = a * target[j].second - b * pivot[i].second;
      if (v != 0) out.emplace_back(target[j].first, std::move(v));
      ++i;
      ++j;
    }
  }
  mpz_class content = 0;
  for (const auto& e : out) {
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), e.second.get_mpz_t());
    if (content == 1) break;
  }
  if (content > 1) {
    for (auto& e : out) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), content.get_mpz_t());
  }
  return out;
}

// Scales a rational row to a primitive integer row.
inline SparseRow<mpz_class> integer_row(const SparseRow<mpq_class>& row) {
  mpz_class lcm = 1;
  for (const auto& e : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.second.get_den_mpz_t());
  }
  SparseRow<mpz_class> out;
  out.reserve(row.size());
  for (const auto& e : row) {
    mpz_class v = e.second.get_num() * (lcm / e.second.get_den());
    out.emplace_back(e.first, std::move(v));
  }
  return out;
}

// Bareiss fraction-free elimination on a dense integer matrix.
inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        mpz_class v = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline std::size_t dense_modular_rank(const PrimeField& f, std::vector<std::vector<std::uint32_t>> a,
                                      std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const auto inv = f.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const auto factor = f.mul(a[r][c], inv);
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Rank of `m` over the field.
template <class F>
std::size_t rank(const F& field, const SparseMatrix<F>& m, RankOptions options = {}) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  bool dense = options.path == EliminationPath::kDense ||
               (options.path == EliminationPath::kAuto && m.rows() < kDenseCutoff &&
                m.cols() < kDenseCutoff);
  if constexpr (std::is_same_v<F, RationalField>) {
    std::vector<detail::SparseRow<mpz_class>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(detail::integer_row(m.row(r)));
    if (dense) {
      std::vector<std::vector<mpz_class>> a(m.rows(), std::vector<mpz_class>(m.cols()));
      for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto& [c, v] : rows[r]) a[r][c] = v;
      return detail::bareiss_rank(std::move(a), m.cols());
    }
    return detail::sparse_rank<mpz_class>(std::move(rows), m.cols(), options.pivot,
                                          detail::eliminate_fraction_free);
  } else {
    if (dense) {
      std::vector<std::vector<std::uint32_t>> a(m.rows(), std::vector<std::uint32_t>(m.cols()));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) a[r][c] = v;
      return detail::dense_modular_rank(field, std::move(a), m.cols());
    }
    std::vector<detail::SparseRow<std::uint32_t>> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    return detail::sparse_rank<std::uint32_t>(
        std::move(rows), m.cols(), options.pivot,
        [&field](const auto& p, std::size_t pp, const auto& t, std::size_t tp) {
          return detail::eliminate_modular(field, p, pp, t, tp);
        });
  }
}

template <class F>
std::size_t rank(const F& field, const DenseMatrix<F>& m, RankOptions options = {}) {
  return rank(field, to_sparse(m), options);
}

/// Reduced row echelon form over the field, with the pivot column of each
/// nonzero row. Rows beyond `pivots.size()` are zero.
template <class F>
struct Rref {
  DenseMatrix<F> reduced;
  std::vector<std::size_t> pivots;
};

template <class F>
Rref<F> rref(const F& field, DenseMatrix<F> a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && field.is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    }
    const auto inv = field.inv(a(row, c));
    for (std::size_t k = c; k < a.cols(); ++k) a(row, k) = field.mul(a(row, k), inv);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || field.is_zero(a(r, c))) continue;
      const auto factor = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) {
        a(r, k) = field.sub(a(r, k), field.mul(factor, a(row, k)));
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

/// Columns spanning the null space {v : m v = 0}; cols() == dim ker.
template <class F>
DenseMatrix<F> kernel_basis(const F& field, const DenseMatrix<F>& m) {
  auto [reduced, pivots] = rref(field, m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatrix<F> basis(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t fc = free_cols[j];
    basis(fc, j) = field.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      basis(pivots[i], j) = field.neg(reduced(i, fc));
    }
  }
  return basis;
}

template <class F>
DenseMatrix<F> kernel_basis(const F& field, const SparseMatrix<F>& m) {
  return kernel_basis(field, to_dense(m));
}

/// A basis of the column space, taken from the columns of `m` itself.
template <class F>
DenseMatrix<F> image_basis(const F& field, const DenseMatrix<F>& m) {
  const auto pivots = rref(field, m).pivots;
  DenseMatrix<F> basis(m.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, j) = m(r, pivots[j]);
  return basis;
}

template <class F>
DenseMatrix<F> image_basis(const F& field, const SparseMatrix<F>& m) {
  return image_basis(field, to_dense(m));
}

/// The quotient k^n -> k^n / W for a subspace W. `projection` is in reduced
/// row echelon form with kernel exactly W; `section()` is the right inverse
/// supported on the pivot coordinates.
template <class F>
struct QuotientMap {
  std::size_t ambient_dim = 0;
  DenseMatrix<F> projection;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return pivots.size(); }

  DenseMatrix<F> section(const F& field) const {
    DenseMatrix<F> s(ambient_dim, pivots.size());
    for (std::size_t j = 0; j < pivots.size(); ++j) s(pivots[j], j) = field.one();
    return s;
  }
};

/// Quotient of k^n by the column span of `spanning` (n rows; any number of
/// columns, not necessarily independent).
template <class F>
QuotientMap<F> quotient_by_columns(const F& field, std::size_t n, const DenseMatrix<F>& spanning) {
  DenseMatrix<F> annihilator;
  if (spanning.cols() == 0) {
    annihilator = DenseMatrix<F>::identity(field, n);
  } else {
    annihilator = kernel_basis(field, spanning.transpose()).transpose();
  }
  auto [reduced, pivots] = rref(field, annihilator);
  DenseMatrix<F> projection(pivots.size(), n);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t c = 0; c < n; ++c) projection(i, c) = reduced(i, c);
  return {n, std::move(projection), std::move(pivots)};
}

/// A left inverse L (L * s = I) of a matrix with independent columns.
template <class F>
DenseMatrix<F> left_inverse(const F& field, const DenseMatrix<F>& s) {
  // Row-reduce [s | I]; the first s.cols() rows of the transformation give L.
  DenseMatrix<F> aug(s.rows(), s.cols() + s.rows());
  for (std::size_t r = 0; r < s.rows(); ++r) {
    for (std::size_t c = 0; c < s.cols(); ++c) aug(r, c) = s(r, c);
    aug(r, s.cols() + r) = field.one();
  }
  auto [reduced, pivots] = rref(field, aug);
  if (pivots.size() < s.cols() || (s.cols() > 0 && pivots[s.cols() - 1] != s.cols() - 1)) {
    throw Error(ErrorKind::kInternal, "left_inverse: columns are dependent");
  }
  DenseMatrix<F> l(s.cols(), s.rows());
  for (std::size_t i = 0; i < s.cols(); ++i)
    for (std::size_t c = 0; c < s.rows(); ++c) l(i, c) = reduced(i, s.cols() + c);
  return l;
}

/// Coordinates c with basis * c = v (basis columns independent). Throws
/// `kInternal` when some column of v lies outside the span.
template <class F>
DenseMatrix<F> coordinates_in_basis(const F& field, const DenseMatrix<F>& basis,
                                    const DenseMatrix<F>& v) {
  const std::size_t k = basis.cols();
  DenseMatrix<F> aug(basis.rows(), k + v.cols());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    for (std::size_t c = 0; c < k; ++c) aug(r, c) = basis(r, c);
    for (std::size_t c = 0; c < v.cols(); ++c) aug(r, k + c) = v(r, c);
  }
  auto [reduced, pivots] = rref(field, aug);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= k) throw Error(ErrorKind::kInternal, "vector not in span of basis");
  }
  if (pivots.size() != k) throw Error(ErrorKind::kInternal, "basis columns are dependent");
  DenseMatrix<F> coords(k, v.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < v.cols(); ++c) coords(i, c) = reduced(i, k + c);
  return coords;
}

/// A bounded cochain complex of finite-dimensional vector spaces
/// V^first -> V^{first+1} -> ... ; `differentials[i]` maps degree
/// first+i to first+i+1 and has dims[i+1] rows and dims[i] columns.
template <class F>
struct VectorSpaceComplex {
  int first_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix<F>> differentials;

  int last_degree() const { return first_degree + static_cast<int>(dims.size()) - 1; }

  std::size_t dim(int degree) const {
    if (degree < first_degree || degree > last_degree()) return 0;
    return dims[static_cast<std::size_t>(degree - first_degree)];
  }
};

/// True when every composite of consecutive differentials vanishes and the
/// shapes line up.
template <class F>
bool is_complex(const F& field, const VectorSpaceComplex<F>& c) {
  if (c.dims.empty()) return c.differentials.empty();
  if (c.differentials.size() + 1 != c.dims.size()) return false;
  for (std::size_t i = 0; i < c.differentials.size(); ++i) {
    if (c.differentials[i].cols() != c.dims[i] || c.differentials[i].rows() != c.dims[i + 1])
      return false;
  }
  for (std::size_t i = 0; i + 1 < c.differentials.size(); ++i) {
    if (!multiply(field, c.differentials[i + 1], c.differentials[i]).is_zero()) return false;
  }
  return true;
}

/// dim H^i = dim ker d^i - rank d^{i-1}, listed from `first_degree`.
template <class F>
std::vector<std::size_t> cohomology_dims(const F& field, const VectorSpaceComplex<F>& c,
                                         RankOptions options = {}) {
  std::vector<std::size_t> ranks(c.differentials.size());
  for (std::size_t i = 0; i < c.differentials.size(); ++i)
    ranks[i] = rank(field, c.differentials[i], options);
  std::vector<std::size_t> h(c.dims.size());
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const std::size_t out = i < ranks.size() ? ranks[i] : 0;
    const std::size_t in = i > 0 ? ranks[i - 1] : 0;
    h[i] = c.dims[i] - out - in;
  }
  return h;
}

/// A chosen basis of H^k(C): representative cocycles plus the projection
/// from cocycle coordinates onto the basis.
template <class F>
struct CohomologyBasis {
  DenseMatrix<F> cocycles;          // columns span Z^k
  QuotientMap<F> modulo_boundaries; // Z^k coordinates -> H^k coordinates

  std::size_t dim() const { return modulo_boundaries.dim(); }

  /// Columns are cocycles representing the basis classes.
  DenseMatrix<F> representatives(const F& field) const {
    return multiply(field, cocycles, modulo_boundaries.section(field));
  }

  /// H^k coordinates of the classes of the cocycle columns of `z`.
  DenseMatrix<F> classes_of(const F& field, const DenseMatrix<F>& z) const {
    return multiply(field, modulo_boundaries.projection, coordinates_in_basis(field, cocycles, z));
  }
};

template <class F>
CohomologyBasis<F> cohomology_basis(const F& field, const VectorSpaceComplex<F>& c, int degree) {
  const std::size_t n = c.dim(degree);
  if (n == 0) return {DenseMatrix<F>(0, 0), quotient_by_columns(field, 0, DenseMatrix<F>(0, 0))};
  const std::size_t idx = static_cast<std::size_t>(degree - c.first_degree);
  DenseMatrix<F> cocycles;
  if (degree < c.last_degree()) {
    cocycles = kernel_basis(field, c.differentials[idx]);
  } else {
    cocycles = DenseMatrix<F>::identity(field, n);
  }
  DenseMatrix<F> boundaries(n, 0);
  if (degree > c.first_degree) boundaries = image_basis(field, c.differentials[idx - 1]);
  DenseMatrix<F> boundary_coords = boundaries.cols() == 0
                                       ? DenseMatrix<F>(cocycles.cols(), 0)
                                       : coordinates_in_basis(field, cocycles, boundaries);
  auto quotient = quotient_by_columns(field, cocycles.cols(), boundary_coords);
  return {std::move(cocycles), std::move(quotient)};
}

/// A cochain map between complexes, one matrix per degree of `source`
/// (target.dim(k) rows, source.dim(k) columns).
template <class F>
struct ChainMap {
  const VectorSpaceComplex<F>* source = nullptr;
  const VectorSpaceComplex<F>* target = nullptr;
  std::vector<SparseMatrix<F>> components;  // indexed from source->first_degree
};

/// The map H^degree(source) -> H^degree(target) in the bases chosen by
/// `cohomology_basis`.
template <class F>
DenseMatrix<F> induced_map_on_cohomology(const F& field, const ChainMap<F>& map, int degree) {
  const auto& src = *map.source;
  const auto& tgt = *map.target;
  const auto src_basis = cohomology_basis(field, src, degree);
  const auto tgt_basis = cohomology_basis(field, tgt, degree);
  if (src_basis.dim() == 0 || tgt_basis.dim() == 0 || degree < src.first_degree ||
      degree > src.last_degree()) {
    return DenseMatrix<F>(tgt_basis.dim(), src_basis.dim());
  }
  const auto& component = map.components[static_cast<std::size_t>(degree - src.first_degree)];
  const DenseMatrix<F> pushed = multiply(field, to_dense(component), src_basis.representatives(field));
  return tgt_basis.classes_of(field, pushed);
}

/// Induced map on the top-degree cohomology of `map.source`.
template <class F>
DenseMatrix<F> induced_map_on_top_cohomology(const F& field, const ChainMap<F>& map) {
  return induced_map_on_cohomology(field, map, map.source->last_degree());
}

}  // namespace facering
