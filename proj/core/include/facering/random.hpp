#pragma once

// Seeded random instances for property tests and the oracle runner.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "facering/inj_complex.hpp"
#include "facering/io.hpp"
#include "facering/lambda_module.hpp"

namespace facering {

struct RandomPosetParams {
  unsigned max_vertices = 8;
  unsigned max_facets = 5;
  unsigned max_facet_size = 4;
  unsigned max_doublings = 3;
};

/// Facets of a random simplicial complex on at most `max_vertices` vertices.
std::vector<std::vector<std::string>> random_facets(std::mt19937_64& rng,
                                                    const RandomPosetParams& params = {});

/// A random complex followed by 0..max_doublings facet doublings (a parallel
/// copy of a maximal element of rank >= 2 with the same lower covers). The
/// result is in facet form when no doubling happened, Hasse form otherwise.
PosetFile random_simplicial_poset(std::uint64_t seed, const RandomPosetParams& params = {});

/// The subcomplex of degrees lo..hi (clamped), with the outer differentials dropped.
template <class F>
InjComplex<F> brutal_truncation(const InjComplex<F>& j, int lo, int hi) {
  InjComplex<F> out;
  lo = std::max(lo, j.first_degree);
  hi = std::min(hi, j.last_degree());
  if (lo > hi) return out;
  out.first_degree = lo;
  for (int deg = lo; deg <= hi; ++deg) {
    out.terms.push_back(j.term(deg));
    if (deg < hi) out.differentials.push_back(j.differentials[static_cast<std::size_t>(deg - j.first_degree)]);
  }
  return out;
}

/// Degreewise direct sum.
template <class F>
InjComplex<F> direct_sum(const F& field, const InjComplex<F>& a, const InjComplex<F>& b) {
  if (a.terms.empty()) return b;
  if (b.terms.empty()) return a;
  InjComplex<F> out;
  out.first_degree = std::min(a.first_degree, b.first_degree);
  const int last = std::max(a.last_degree(), b.last_degree());
  for (int deg = out.first_degree; deg <= last; ++deg) {
    auto t = a.term(deg);
    const auto& tb = b.term(deg);
    t.insert(t.end(), tb.begin(), tb.end());
    out.terms.push_back(std::move(t));
  }
  for (int deg = out.first_degree; deg < last; ++deg) {
    const std::size_t ra = a.term(deg + 1).size(), ca = a.term(deg).size();
    const std::size_t rb = b.term(deg + 1).size(), cb = b.term(deg).size();
    SparseMatrix<F> m(ra + rb, ca + cb);
    if (deg >= a.first_degree && deg < a.last_degree()) {
      const auto& da = a.differentials[static_cast<std::size_t>(deg - a.first_degree)];
      for (std::size_t r = 0; r < ra; ++r)
        for (const auto& [c, v] : da.row(r)) m.set(r, c, v);
    }
    if (deg >= b.first_degree && deg < b.last_degree()) {
      const auto& db = b.differentials[static_cast<std::size_t>(deg - b.first_degree)];
      for (std::size_t r = 0; r < rb; ++r)
        for (const auto& [c, v] : db.row(r)) m.set(ra + r, ca + c, v);
    }
    out.differentials.push_back(std::move(m));
  }
  (void)field;
  return out;
}

/// J[k]: the same data moved k degrees down with the differential negated.
template <class F>
InjComplex<F> shift(const F& field, const InjComplex<F>& j, int k) {
  InjComplex<F> out = j;
  out.first_degree -= k;
  if (k % 2 != 0) {
    for (auto& d : out.differentials) {
      SparseMatrix<F> neg(d.rows(), d.cols());
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (const auto& [c, v] : d.row(r)) neg.set(r, c, field.neg(v));
      d = std::move(neg);
    }
  }
  return out;
}

/// A random bounded complex of injectives: the injective resolution of a
/// random module or the dualizing complex, optionally truncated, shifted,
/// summed with a second such complex or passed through 𝔻.
template <class F>
InjComplex<F> random_inj_complex(const F& field, const SimplicialPoset& p, std::mt19937_64& rng,
                                 int depth = 0) {
  auto coin = [&](double prob) { return std::bernoulli_distribution(prob)(rng); };
  InjComplex<F> j;
  if (coin(0.8)) {
    j = injective_resolution(field, p, random_lambda_module(field, p, rng)).complex;
  } else {
    j = dualizing_complex(field, p);
  }
  if (!j.terms.empty() && coin(0.4)) {
    std::uniform_int_distribution<int> deg(j.first_degree, j.last_degree());
    int a = deg(rng), b = deg(rng);
    if (a > b) std::swap(a, b);
    j = brutal_truncation(j, a, b);
  }
  if (coin(0.4)) j = shift(field, j, std::uniform_int_distribution<int>(-2, 2)(rng));
  if (depth < 1 && coin(0.3)) j = direct_sum(field, j, random_inj_complex(field, p, rng, depth + 1));
  if (depth < 1 && coin(0.3)) j = dd(field, p, j);
  return j;
}

}  // namespace facering
