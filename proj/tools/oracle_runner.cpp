#include "oracle_runner.hpp"

#include <random>
#include <sstream>

#include "facering/classify.hpp"
#include "facering/face_ring.hpp"
#include "facering/incidence.hpp"
#include "facering/inj_complex.hpp"
#include "facering/random.hpp"
#include "oracles/oracles.hpp"

namespace facering::cli {

namespace {

MDegree random_mdegree(const SimplicialPoset& p, std::mt19937_64& rng) {
  const auto x = static_cast<ElementId>(std::uniform_int_distribution<std::size_t>(0, p.size() - 1)(rng));
  MDegree a{x, {}};
  std::uniform_int_distribution<std::uint32_t> e(1, 3);
  for (unsigned k = 0; k < p.rank(x); ++k) a.exponents.push_back(e(rng));
  return a;
}

std::string describe(const SimplicialPoset& p, const MDegree& a) {
  std::ostringstream os;
  os << (a.carrier == SimplicialPoset::bottom() ? std::string(kBottomName) : p.name(a.carrier)) << "^(";
  for (std::size_t k = 0; k < a.exponents.size(); ++k) os << (k ? "," : "") << a.exponents[k];
  os << ")";
  return os.str();
}

template <class F>
RingElement<F> random_element(const F& field, const SimplicialPoset& p, std::mt19937_64& rng) {
  RingElement<F> f;
  const int terms = std::uniform_int_distribution<int>(1, 2)(rng);
  for (int t = 0; t < terms; ++t) {
    int c = 0;
    while (c == 0) c = std::uniform_int_distribution<int>(-2, 2)(rng);
    f.add_term(field, random_mdegree(p, rng), field.from_int(c));
  }
  return f;
}

template <class F>
std::map<int, std::size_t> profile(const F& field, const VectorSpaceComplex<F>& c) {
  std::map<int, std::size_t> out;
  const auto h = cohomology_dims(field, c);
  for (std::size_t t = 0; t < h.size(); ++t)
    if (h[t] != 0) out[c.first_degree + static_cast<int>(t)] = h[t];
  return out;
}

template <class F>
bool same_cohomology(const F& field, const SimplicialPoset& p, const InjComplex<F>& a,
                     const InjComplex<F>& b, ElementId* where) {
  for (ElementId x = 0; x < p.size(); ++x) {
    if (profile(field, evaluate_at(p, a, x)) != profile(field, evaluate_at(p, b, x))) {
      *where = x;
      return false;
    }
  }
  return true;
}

std::string seed_note(std::uint64_t seed) { return " (seed " + std::to_string(seed) + ")"; }

}  // namespace

OracleCheck check_ring_oracle(const SimplicialPoset& p, const FieldSpec& field, std::uint64_t seed,
                              unsigned products, unsigned triples) {
  OracleCheck out{"ring: M-graded product vs straightening", true, ""};
  with_field(field, [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    std::mt19937_64 rng(seed);
    for (unsigned k = 0; k < products && out.passed; ++k) {
      const MDegree a = random_mdegree(p, rng);
      const MDegree b = random_mdegree(p, rng);
      RingElement<F> lhs;
      for (const auto& deg : mult_mdegree(p, a, b)) lhs.add_term(f, deg, f.one());
      GeneratorWord w = to_word(p, a);
      const auto wb = to_word(p, b);
      w.insert(w.end(), wb.begin(), wb.end());
      const auto rhs = straighten<F>(f, p, w);
      if (!(lhs == rhs)) {
        out.passed = false;
        out.detail = describe(p, a) + " * " + describe(p, b) + seed_note(seed);
      }
    }
    for (unsigned k = 0; k < triples && out.passed; ++k) {
      const auto x = random_element(f, p, rng);
      const auto y = random_element(f, p, rng);
      const auto z = random_element(f, p, rng);
      if (!(mult(f, p, x, y) == mult(f, p, y, x))) {
        out.passed = false;
        out.detail = "commutativity fails on triple " + std::to_string(k) + seed_note(seed);
      } else if (!(mult(f, p, mult(f, p, x, y), z) == mult(f, p, x, mult(f, p, y, z)))) {
        out.passed = false;
        out.detail = "associativity fails on triple " + std::to_string(k) + seed_note(seed);
      }
    }
  });
  return out;
}

OracleCheck check_boundaries(const SimplicialPoset& p, const FieldSpec& field) {
  OracleCheck out{"boundaries: incidence identity, d^2 = 0 on I_A and every K_x", true, ""};
  const auto inc = verify_incidence(p);
  if (!inc.ok) {
    out.passed = false;
    out.detail = "diamond " + p.name(inc.failing->first) + " > " + p.name(inc.failing->second);
    return out;
  }
  with_field(field, [&](const auto& f) {
    try {
      check_inj_complex(f, p, dualizing_complex(f, p));
    } catch (const Error& e) {
      out.passed = false;
      out.detail = std::string("I_A: ") + e.what();
      return;
    }
    for (ElementId x = 0; x < p.size(); ++x) {
      if (!is_complex(f, k_complex(f, p, x))) {
        out.passed = false;
        out.detail = "K_x at " + p.name(x);
        return;
      }
    }
  });
  return out;
}

OracleCheck check_duality_involution(const SimplicialPoset& p, const FieldSpec& field,
                                     std::uint64_t seed, unsigned complexes, unsigned modules) {
  OracleCheck out{"duality: DD(J) has the cohomology of J at every x", true, ""};
  with_field(field, [&](const auto& f) {
    std::mt19937_64 rng(seed);
    ElementId where = 0;
    for (unsigned k = 0; k < complexes + modules && out.passed; ++k) {
      const auto j = k < complexes
                         ? random_inj_complex(f, p, rng)
                         : injective_resolution(f, p, random_lambda_module(f, p, rng)).complex;
      const auto back = dd(f, p, dd(f, p, j));
      if (!same_cohomology(f, p, j, back, &where)) {
        out.passed = false;
        out.detail = std::string(k < complexes ? "complex " : "resolution ") + std::to_string(k) +
                     " differs at " + p.name(where) + seed_note(seed);
      }
    }
  });
  return out;
}

OracleCheck check_skeleton_depth(const SimplicialPoset& p, const FieldSpec& field) {
  OracleCheck out{"skeletons: depth = 1 + max{i : i-skeleton Cohen-Macaulay}", true, ""};
  out.passed = skeleton_depth_crosscheck(p, field);
  if (!out.passed) out.detail = "depth " + std::to_string(depth(p, field));
  return out;
}

OracleCheck check_link_oracle(const SimplicialPoset& p,
                              const std::vector<std::vector<std::string>>& facets,
                              const FieldSpec& field) {
  OracleCheck out{"links: dim H^i(K_x) = dim of reduced H^(i-rank(x)-1)(lk x)", true, ""};
  const auto table = local_cohomology_table(p, field);
  const auto faces = oracle::faces_of(facets);
  const oracle::Coefficients k{field.kind == FieldSpec::Kind::kRational ? 0u : field.prime};
  for (ElementId x = 0; x < p.size() && out.passed; ++x) {
    oracle::Face sigma;
    for (unsigned i : p.support(x).members()) sigma.insert(p.name(p.atom(i)));
    for (unsigned i = 0; i <= p.rank(); ++i) {
      const int j = static_cast<int>(i) - static_cast<int>(p.rank(x)) - 1;
      const auto expected = oracle::link_cohomology(faces, sigma, j, k);
      if (expected != table.at(x, i)) {
        out.passed = false;
        out.detail = "element " + p.name(x) + ", degree " + std::to_string(i) + ": K_x gives " +
                     std::to_string(table.at(x, i)) + ", link gives " + std::to_string(expected);
        break;
      }
    }
  }
  return out;
}

std::vector<OracleCheck> run_oracles(const PosetFile& file, const FieldSpec& field,
                                     const OracleOptions& options) {
  const SimplicialPoset p = file.build();
  std::vector<OracleCheck> checks;
  checks.push_back(check_boundaries(p, field));
  checks.push_back(check_ring_oracle(p, field, options.seed, options.products, options.triples));
  checks.push_back(check_duality_involution(p, field, options.seed, options.complexes, options.modules));
  checks.push_back(check_skeleton_depth(p, field));
  if (file.has_facets()) checks.push_back(check_link_oracle(p, file.facets, field));
  return checks;
}

}  // namespace facering::cli
