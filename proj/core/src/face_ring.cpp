#include "facering/face_ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace facering {

std::uint64_t MDegree::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
}

void check_mdegree(const SimplicialPoset& p, const MDegree& a) {
  if (a.carrier >= p.size() || a.exponents.size() != p.rank(a.carrier) ||
      std::any_of(a.exponents.begin(), a.exponents.end(), [](auto e) { return e == 0; })) {
    throw Error(ErrorKind::kInvalidInput, "MDegree is not canonical");
  }
}

MDegree variable_degree(const SimplicialPoset& p, ElementId x) {
  return {x, std::vector<std::uint32_t>(p.rank(x), 1)};
}

MDegree distinguished_degree(const SimplicialPoset& p, ElementId x) {
  return {x, std::vector<std::uint32_t>(p.rank(x), p.rank(x))};
}

MDegree canonicalize(const SimplicialPoset& p, ElementId within,
                     const std::vector<std::uint32_t>& exponents_on_within) {
  const auto atoms = p.support(within).members();
  if (atoms.size() != exponents_on_within.size()) {
    throw Error(ErrorKind::kInvalidInput, "exponent vector does not match the carrier");
  }
  AtomSet supp;
  MDegree out;
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (exponents_on_within[k] > 0) {
      supp.insert(atoms[k]);
      out.exponents.push_back(exponents_on_within[k]);
    }
  }
  out.carrier = p.element_below(within, supp);
  return out;
}

std::vector<MDegree> mult_mdegree(const SimplicialPoset& p, const MDegree& a, const MDegree& b) {
  const AtomSet ua = p.support(a.carrier);
  const AtomSet ub = p.support(b.carrier);
  std::vector<MDegree> out;
  for (ElementId z : join_set(p, a.carrier, b.carrier)) {
    MDegree sum{z, {}};
    for (unsigned i : p.support(z).members()) {
      std::uint32_t e = 0;
      if (ua.contains(i)) e += a.exponents[ua.count_below(i)];
      if (ub.contains(i)) e += b.exponents[ub.count_below(i)];
      sum.exponents.push_back(e);
    }
    out.push_back(std::move(sum));
  }
  return out;
}

GeneratorWord to_word(const SimplicialPoset& p, const MDegree& a) {
  const auto atoms = p.support(a.carrier).members();
  const std::uint32_t top =
      a.exponents.empty() ? 0 : *std::max_element(a.exponents.begin(), a.exponents.end());
  GeneratorWord w;
  for (std::uint32_t k = 1; k <= top; ++k) {
    AtomSet level;
    for (std::size_t j = 0; j < atoms.size(); ++j)
      if (a.exponents[j] >= k) level.insert(atoms[j]);
    w.push_back(p.element_below(a.carrier, level));
  }
  return w;
}

namespace {

using Monomial = std::vector<ElementId>;  // sorted, no 0̂

bool is_chain(const SimplicialPoset& p, const Monomial& m) {
  for (std::size_t k = 1; k < m.size(); ++k)
    if (!p.leq(m[k - 1], m[k])) return false;
  return true;
}

MDegree chain_degree(const SimplicialPoset& p, const Monomial& m) {
  if (m.empty()) return {SimplicialPoset::bottom(), {}};
  const ElementId top = m.back();
  MDegree out{top, {}};
  for (unsigned i : p.support(top).members()) {
    std::uint32_t e = 0;
    for (ElementId x : m)
      if (p.support(x).contains(i)) ++e;
    out.exponents.push_back(e);
  }
  return out;
}

}  // namespace

std::map<MDegree, long long> straighten_integral(const SimplicialPoset& p, const GeneratorWord& w,
                                                 std::size_t step_budget) {
  Monomial start;
  for (ElementId x : w)
    if (x != SimplicialPoset::bottom()) start.push_back(x);
  std::sort(start.begin(), start.end());

  std::map<Monomial, long long> pending{{start, 1}};
  std::map<MDegree, long long> result;
  std::size_t steps = 0;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    Monomial& m = node.key();
    const long long coeff = node.mapped();
    if (is_chain(p, m)) {
      result[chain_degree(p, m)] += coeff;
      continue;
    }
    if (++steps > step_budget) {
      throw Error(ErrorKind::kNonTermination,
                  "straightening exceeded " + std::to_string(step_budget) + " rewrites");
    }
    std::size_t i = 0, j = 0;
    bool found = false;
    for (i = 0; i < m.size() && !found; ++i) {
      for (j = i + 1; j < m.size(); ++j) {
        if (!p.comparable(m[i], m[j])) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    const ElementId x = m[i];
    const ElementId y = m[j];
    const auto joins = join_set(p, x, y);
    if (joins.empty()) continue;  // t_x t_y = 0
    const ElementId lower = p.element_below(x, p.support(x) & p.support(y));
    Monomial rest;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (k != i && k != j) rest.push_back(m[k]);
    if (lower != SimplicialPoset::bottom()) rest.push_back(lower);
    for (ElementId z : joins) {
      Monomial next = rest;
      next.push_back(z);
      std::sort(next.begin(), next.end());
      pending[next] += coeff;
    }
  }
  return result;
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

long long hilbert_dim(const SimplicialPoset& p, unsigned i) {
  if (i == 0) return 1;
  const auto f = rank_counts(p);
  long long total = 0;
  for (std::size_t j = 1; j < f.size(); ++j) total += f[j] * binomial(i - 1, static_cast<long long>(j) - 1);
  return total;
}

std::vector<long long> f_vector(const SimplicialPoset& p) { return rank_counts(p); }

std::vector<long long> h_vector(const SimplicialPoset& p) {
  const auto f = f_vector(p);
  const long long d = p.rank();
  std::vector<long long> h(static_cast<std::size_t>(d) + 1, 0);
  for (long long k = 0; k <= d; ++k) {
    for (long long i = 0; i <= k; ++i) {
      const long long sign = (k - i) % 2 == 0 ? 1 : -1;
      h[static_cast<std::size_t>(k)] += sign * binomial(d - i, k - i) * f[static_cast<std::size_t>(i)];
    }
  }
  return h;
}

}  // namespace facering
