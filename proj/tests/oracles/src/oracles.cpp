#include "oracles/oracles.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>
#include <gmpxx.h>

namespace oracle {

using facering::ElementId;
using facering::SimplicialPoset;

std::set<Face> faces_of(const std::vector<std::vector<std::string>>& facets) {
  std::set<Face> out;
  for (const auto& f : facets) {
    const std::vector<std::string> v(f.begin(), f.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << v.size()); ++mask) {
      Face s;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (mask >> i & 1) s.insert(v[i]);
      out.insert(std::move(s));
    }
  }
  if (out.empty()) out.insert(Face{});
  return out;
}

std::set<Face> link(const std::set<Face>& complex, const Face& sigma) {
  std::set<Face> out;
  for (const Face& tau : complex) {
    if (!std::includes(tau.begin(), tau.end(), sigma.begin(), sigma.end())) continue;
    Face rest;
    std::set_difference(tau.begin(), tau.end(), sigma.begin(), sigma.end(),
                        std::inserter(rest, rest.end()));
    out.insert(std::move(rest));
  }
  return out;
}

namespace {

long long mod_inverse(long long a, long long p) {
  long long g = p, x = 0, x1 = 1, b = a;
  while (b != 0) {
    const long long q = g / b;
    std::tie(g, b) = std::make_pair(b, g - q * b);
    std::tie(x, x1) = std::make_pair(x1, x - q * x1);
  }
  return ((x % p) + p) % p;
}

std::size_t rank_mod(std::vector<std::vector<long long>> a, long long p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const long long inv = mod_inverse(a[r][c], p);
    for (auto& v : a[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const long long f = a[i][c];
      for (std::size_t k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_rational(const std::vector<std::vector<long long>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t dense_rank(const std::vector<std::vector<long long>>& m, Coefficients k) {
  return k.p == 0 ? rank_rational(m) : rank_mod(m, k.p);
}

std::vector<std::size_t> reduced_cohomology(const std::set<Face>& complex, Coefficients k) {
  std::size_t top = 0;
  for (const Face& f : complex) top = std::max(top, f.size());
  // by_size[s]: faces with s vertices, cochain degree s - 1
  std::vector<std::vector<Face>> by_size(top + 1);
  for (const Face& f : complex) by_size[f.size()].push_back(f);
  std::vector<std::size_t> ranks(top + 1, 0);  // ranks[s]: δ from size s to size s + 1
  for (std::size_t s = 0; s < top; ++s) {
    const auto& src = by_size[s];
    const auto& dst = by_size[s + 1];
    std::map<Face, std::size_t> col;
    for (std::size_t c = 0; c < src.size(); ++c) col[src[c]] = c;
    std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
    for (std::size_t r = 0; r < dst.size(); ++r) {
      std::size_t pos = 0;
      for (const auto& v : dst[r]) {
        Face smaller = dst[r];
        smaller.erase(v);
        m[r][col.at(smaller)] = pos % 2 == 0 ? 1 : -1;
        ++pos;
      }
    }
    ranks[s] = dst.empty() || src.empty() ? 0 : dense_rank(m, k);
  }
  std::vector<std::size_t> out(top + 1);
  for (std::size_t s = 0; s <= top; ++s) {
    out[s] = by_size[s].size() - ranks[s] - (s > 0 ? ranks[s - 1] : 0);
  }
  return out;
}

std::size_t link_cohomology(const std::set<Face>& complex, const Face& sigma, int j, Coefficients k) {
  const auto dims = reduced_cohomology(link(complex, sigma), k);
  const int idx = j + 1;
  if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
  return dims[static_cast<std::size_t>(idx)];
}

std::vector<ElementId> brute_join_set(const SimplicialPoset& p, ElementId x, ElementId y) {
  std::vector<ElementId> bounds;
  for (ElementId z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(y, z)) bounds.push_back(z);
  std::vector<ElementId> out;
  for (ElementId z : bounds) {
    bool minimal = true;
    for (ElementId w : bounds)
      if (w != z && p.leq(w, z)) minimal = false;
    if (minimal) out.push_back(z);
  }
  return out;
}

std::optional<ElementId> brute_meet(const SimplicialPoset& p, ElementId x, ElementId y) {
  std::vector<ElementId> lower;
  for (ElementId z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y)) lower.push_back(z);
  for (ElementId z : lower) {
    if (std::all_of(lower.begin(), lower.end(), [&](ElementId w) { return p.leq(w, z); })) return z;
  }
  return std::nullopt;
}

long long count_standard_monomials(const SimplicialPoset& p, unsigned i) {
  // Multichains y_1 <= ... <= y_k of nonzero elements with rank sum i.
  if (i == 0) return 1;
  std::vector<std::vector<long long>> ending(p.size(), std::vector<long long>(i + 1, 0));
  for (unsigned s = 1; s <= i; ++s) {
    for (ElementId x = 1; x < p.size(); ++x) {
      const unsigned r = p.rank(x);
      if (r > s) continue;
      long long n = r == s ? 1 : 0;
      for (ElementId y = 1; y < p.size(); ++y)
        if (p.leq(y, x)) n += ending[y][s - r];
      ending[x][s] = n;
    }
  }
  long long total = 0;
  for (ElementId x = 1; x < p.size(); ++x) total += ending[x][i];
  return total;
}

std::vector<long long> h_vector_from_hilbert(const SimplicialPoset& p) {
  unsigned d = 0;
  for (ElementId x = 0; x < p.size(); ++x) d = std::max(d, p.rank(x));
  std::vector<long long> series(2 * d + 1);
  for (unsigned i = 0; i <= 2 * d; ++i) series[i] = count_standard_monomials(p, i);
  for (unsigned t = 0; t < d; ++t) {  // multiply by (1 - λ), d times
    for (std::size_t k = series.size() - 1; k > 0; --k) series[k] -= series[k - 1];
  }
  return series;
}

bool brute_intervals_boolean(const SimplicialPoset& p) {
  std::vector<ElementId> atoms;
  for (ElementId z = 1; z < p.size(); ++z) {
    bool covers_bottom_only = true;
    for (ElementId w = 1; w < p.size(); ++w)
      if (w != z && p.leq(w, z)) covers_bottom_only = false;
    if (covers_bottom_only) atoms.push_back(z);
  }
  for (ElementId x = 0; x < p.size(); ++x) {
    std::set<std::vector<ElementId>> atom_sets;
    std::size_t below = 0;
    std::size_t atoms_below_x = 0;
    for (ElementId a : atoms)
      if (p.leq(a, x)) ++atoms_below_x;
    for (ElementId y = 0; y < p.size(); ++y) {
      if (!p.leq(y, x)) continue;
      ++below;
      std::vector<ElementId> s;
      for (ElementId a : atoms)
        if (p.leq(a, y)) s.push_back(a);
      atom_sets.insert(std::move(s));
    }
    if (below != (std::size_t{1} << atoms_below_x) || atom_sets.size() != below) return false;
  }
  return true;
}

}  // namespace oracle
