#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "facering/poset.hpp"

namespace facering {

/// An element of the index set M in canonical form: a carrier x = s(ua)
/// and strictly positive exponents on the atoms of x (in increasing atom
/// order). The carrier 0̂ with no exponents is the degree of 1.
struct MDegree {
  ElementId carrier = 0;
  std::vector<std::uint32_t> exponents;

  std::uint64_t total_degree() const;

  friend bool operator==(const MDegree&, const MDegree&) = default;
  friend auto operator<=>(const MDegree&, const MDegree&) = default;
};

/// A product of variables t_x, as a multiset of elements.
using GeneratorWord = std::vector<ElementId>;

/// Throws `kInvalidInput` unless `a` is canonical for `p`.
void check_mdegree(const SimplicialPoset& p, const MDegree& a);

/// The degree of the variable t_x: all exponents one on U(x).
MDegree variable_degree(const SimplicialPoset& p, ElementId x);

/// ua(x): every exponent equal to ρ(x).
MDegree distinguished_degree(const SimplicialPoset& p, ElementId x);

/// Brings an exponent vector over all atoms of `within` (zeros allowed) to
/// canonical form; the carrier becomes the element below `within` whose
/// atom set is the support.
MDegree canonicalize(const SimplicialPoset& p, ElementId within,
                     const std::vector<std::uint32_t>& exponents_on_within);

/// Degrees of the standard monomials summing to t^a · t^b: one term
/// (a+b)|z for each z ∈ [s(a) ∨ s(b)], each with coefficient one. Empty
/// when the join set is empty.
std::vector<MDegree> mult_mdegree(const SimplicialPoset& p, const MDegree& a, const MDegree& b);

/// The standard monomial t^a written as a chain word t_{x_1} ... t_{x_k}
/// with x_1 >= x_2 >= ...; x_k = {i : a_i >= k}.
GeneratorWord to_word(const SimplicialPoset& p, const MDegree& a);

/// Normal form of a word in the standard-monomial basis by repeated use of
/// t_x t_y = t_{x∧y} Σ_{z∈[x∨y]} t_z on incomparable factors and t_0̂ = 1.
/// Coefficients are integers. Throws `kNonTermination` past `step_budget`
/// rewrites.
std::map<MDegree, long long> straighten_integral(const SimplicialPoset& p, const GeneratorWord& w,
                                                 std::size_t step_budget = 1'000'000);

/// dim_k (A_P)_i, via Σ_j f_{j-1} C(i-1, j-1).
long long hilbert_dim(const SimplicialPoset& p, unsigned i);

/// (f_{-1}, f_0, ..., f_{d-1}).
std::vector<long long> f_vector(const SimplicialPoset& p);

/// (h_0, ..., h_d) with h_k = Σ_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
std::vector<long long> h_vector(const SimplicialPoset& p);

long long binomial(long long n, long long k);

/// A finitely supported map from MDegrees to field scalars with no zero
/// coefficients stored.
template <class F>
class RingElement {
 public:
  using Element = typename F::Element;
  using Terms = std::map<MDegree, Element>;

  RingElement() = default;

  static RingElement monomial(const F& field, MDegree a) {
    RingElement r;
    r.terms_.emplace(std::move(a), field.one());
    return r;
  }

  static RingElement from_integral(const F& field, const std::map<MDegree, long long>& terms) {
    RingElement r;
    for (const auto& [deg, c] : terms) r.add_term(field, deg, field.from_int(c));
    return r;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const F& field, const MDegree& deg, const Element& c) {
    auto it = terms_.find(deg);
    if (it == terms_.end()) {
      if (!field.is_zero(c)) terms_.emplace(deg, c);
      return;
    }
    it->second = field.add(it->second, c);
    if (field.is_zero(it->second)) terms_.erase(it);
  }

  RingElement scaled(const F& field, const Element& c) const {
    RingElement r;
    for (const auto& [deg, v] : terms_) r.add_term(field, deg, field.mul(v, c));
    return r;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

template <class F>
RingElement<F> add(const F& field, const RingElement<F>& f, const RingElement<F>& g) {
  RingElement<F> out = f;
  for (const auto& [deg, c] : g.terms()) out.add_term(field, deg, c);
  return out;
}

/// Bilinear extension of `mult_mdegree`.
template <class F>
RingElement<F> mult(const F& field, const SimplicialPoset& p, const RingElement<F>& f,
                    const RingElement<F>& g) {
  RingElement<F> out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      const auto c = field.mul(ca, cb);
      for (const MDegree& deg : mult_mdegree(p, a, b)) out.add_term(field, deg, c);
    }
  }
  return out;
}

template <class F>
RingElement<F> straighten(const F& field, const SimplicialPoset& p, const GeneratorWord& w,
                          std::size_t step_budget = 1'000'000) {
  return RingElement<F>::from_integral(field, straighten_integral(p, w, step_budget));
}

}  // namespace facering
