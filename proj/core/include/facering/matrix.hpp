#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace facering {

/// Row-major sparse matrix over the field `F`. Each row holds
/// (column, value) pairs sorted by column; zero values are never stored.
///
/// Both field element types default-construct to zero, which is what the
/// container uses to recognize and drop zeros.
template <class F>
class SparseMatrix {
 public:
  using Element = typename F::Element;
  using Entry = std::pair<std::size_t, Element>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(const F& field, std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, field.one());
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t r) const { return rows_[r]; }

  /// Replaces row `r` wholesale; `entries` must be sorted and zero-free.
  void set_row(std::size_t r, Row entries) { rows_[r] = std::move(entries); }

  void set(std::size_t r, std::size_t c, Element v) {
    assert(r < rows() && c < cols_);
    Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    const bool present = it != row.end() && it->first == c;
    if (v == Element{}) {
      if (present) row.erase(it);
    } else if (present) {
      it->second = std::move(v);
    } else {
      row.insert(it, Entry(c, std::move(v)));
    }
  }

  void add_to(const F& field, std::size_t r, std::size_t c, const Element& v) {
    set(r, c, field.add(at(r, c), v));
  }

  Element at(std::size_t r, std::size_t c) const {
    const Row& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const Entry& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) return it->second;
    return Element{};
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const Row& r : rows_) n += r.size();
    return n;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t r = 0; r < rows(); ++r) {
      for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
    }
    return t;
  }

 private:
  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

/// Dense row-major matrix; used for the small maps of Λ-modules and for
/// cohomology bases.
template <class F>
class DenseMatrix {
 public:
  using Element = typename F::Element;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(const F& field, std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Element& e) { return e == Element{}; });
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  DenseMatrix column(std::size_t c) const {
    DenseMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
  }

  bool operator==(const DenseMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Element> data_;
};

template <class F>
DenseMatrix<F> to_dense(const SparseMatrix<F>& m) {
  DenseMatrix<F> d(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) d(r, c) = v;
  return d;
}

template <class F>
SparseMatrix<F> to_sparse(const DenseMatrix<F>& d) {
  SparseMatrix<F> m(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    typename SparseMatrix<F>::Row row;
    for (std::size_t c = 0; c < d.cols(); ++c) {
      if (!(d(r, c) == typename F::Element{})) row.emplace_back(c, d(r, c));
    }
    m.set_row(r, std::move(row));
  }
  return m;
}

template <class F>
DenseMatrix<F> multiply(const F& field, const DenseMatrix<F>& a, const DenseMatrix<F>& b) {
  assert(a.cols() == b.rows());
  DenseMatrix<F> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (field.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (field.is_zero(b(k, j))) continue;
        out(i, j) = field.add(out(i, j), field.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

template <class F>
SparseMatrix<F> multiply(const F& field, const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  assert(a.cols() == b.rows());
  SparseMatrix<F> out(a.rows(), b.cols());
  std::vector<typename F::Element> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cols.clear();
    for (const auto& [k, av] : a.row(i)) {
      for (const auto& [j, bv] : b.row(k)) {
        if (!touched[j]) {
          touched[j] = 1;
          acc[j] = field.zero();
          cols.push_back(j);
        }
        acc[j] = field.add(acc[j], field.mul(av, bv));
      }
    }
    std::sort(cols.begin(), cols.end());
    typename SparseMatrix<F>::Row row;
    for (std::size_t j : cols) {
      if (!field.is_zero(acc[j])) row.emplace_back(j, acc[j]);
      touched[j] = 0;
    }
    out.set_row(i, std::move(row));
  }
  return out;
}

/// Rows `rows` and columns `cols` of `m`, in the given order.
template <class F>
SparseMatrix<F> submatrix(const SparseMatrix<F>& m, std::span<const std::size_t> rows,
                          std::span<const std::size_t> cols) {
  std::vector<std::size_t> col_pos(m.cols(), static_cast<std::size_t>(-1));
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;
  SparseMatrix<F> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    typename SparseMatrix<F>::Row row;
    for (const auto& [c, v] : m.row(rows[i])) {
      if (col_pos[c] != static_cast<std::size_t>(-1)) row.emplace_back(col_pos[c], v);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.set_row(i, std::move(row));
  }
  return out;
}

}  // namespace facering
