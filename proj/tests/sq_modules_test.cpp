#include <gtest/gtest.h>

#include <random>

#include "facering/classify.hpp"
#include "facering/inj_complex.hpp"
#include "facering/lambda_module.hpp"
#include "oracle_runner.hpp"
#include "support.hpp"

using namespace facering;
using testing_support::el;

namespace {

template <class F>
std::vector<std::size_t> term_sizes(const InjComplex<F>& j) {
  std::vector<std::size_t> out;
  for (const auto& t : j.terms) out.push_back(t.size());
  return out;
}

/// degree -> dim of H^degree, nonzero entries only.
template <class F>
std::map<int, std::size_t> profile(const F& f, const VectorSpaceComplex<F>& c) {
  std::map<int, std::size_t> out;
  const auto h = cohomology_dims(f, c);
  for (std::size_t t = 0; t < h.size(); ++t)
    if (h[t]) out[c.first_degree + static_cast<int>(t)] = h[t];
  return out;
}

template <class F>
std::map<int, std::size_t> k_profile_negated(const LocalCohomologyTable& table, ElementId x) {
  std::map<int, std::size_t> out;
  for (unsigned i = 0; i <= table.d; ++i)
    if (table.at(x, i)) out[-static_cast<int>(i)] = table.at(x, i);
  return out;
}

}  // namespace

TEST(DualizingComplex, BooleanOne) {
  const RationalField q;
  auto p = boolean(1);
  auto j = dualizing_complex(q, p);
  EXPECT_EQ(j.first_degree, -1);
  EXPECT_EQ(j.terms, (std::vector<std::vector<ElementId>>{{p.atom(0)}, {0}}));
  ASSERT_EQ(j.differentials.size(), 1u);
  EXPECT_EQ(j.differentials[0].at(0, 0), q.one());
}

TEST(DualizingComplex, TermSizes) {
  const PrimeField f(2);
  auto dj = dualizing_complex(f, testing_support::digon());
  EXPECT_EQ(dj.first_degree, -2);
  EXPECT_EQ(term_sizes(dj), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_NO_THROW(check_inj_complex(f, testing_support::digon(), dj));
  EXPECT_EQ(term_sizes(dualizing_complex(f, testing_support::rp2())), (std::vector<std::size_t>{10, 15, 6, 1}));
}

TEST(DualizingComplex, SquaresToZeroOnSamples) {
  for (const auto& [name, p] : testing_support::sample_posets(20)) {
    EXPECT_NO_THROW(check_inj_complex(RationalField{}, p, dualizing_complex(RationalField{}, p))) << name;
    EXPECT_NO_THROW(check_inj_complex(PrimeField(3), p, dualizing_complex(PrimeField(3), p))) << name;
  }
}

TEST(CheckInjComplex, RejectsMapsAgainstTheOrder) {
  const RationalField q;
  auto p = boolean(1);
  InjComplex<RationalField> j;
  j.first_degree = 0;
  j.terms = {{0}, {p.atom(0)}};  // A/p_0̂ -> A/p_y needs y <= 0̂
  SparseMatrix<RationalField> d(1, 1);
  d.set(0, 0, q.one());
  j.differentials = {d};
  EXPECT_THROW(check_inj_complex(q, p, j), Error);
  EXPECT_THROW(dd(q, p, j), Error);
}

TEST(EvaluateAt, Examples) {
  const RationalField q;
  for (const auto& [name, p] : testing_support::sample_posets(8)) {
    auto ia = dualizing_complex(q, p);
    auto full = evaluate_at(p, ia, 0);
    EXPECT_EQ(full.dims, term_sizes(ia)) << name;
    const auto table = local_cohomology_table(p, FieldSpec::rational());
    for (ElementId x = 0; x < p.size(); ++x) {
      auto c = evaluate_at(p, ia, x);
      auto k = k_complex(p, x);
      // Term at degree -i matches K_x^i.
      for (unsigned i = p.rank(x); i <= p.rank(); ++i)
        EXPECT_EQ(c.dim(-static_cast<int>(i)), k.basis[i - k.first_degree].size()) << name;
      EXPECT_EQ(profile(q, c), k_profile_negated<RationalField>(table, x)) << name;
    }
    for (ElementId top : p.maximal_elements()) {
      auto c = evaluate_at(p, ia, top);
      std::size_t total = 0;
      for (auto d : c.dims) total += d;
      EXPECT_EQ(total, 1u) << name;
    }
  }
}

TEST(DD, ZeroComplex) {
  const RationalField q;
  InjComplex<RationalField> zero;
  auto out = dd(q, testing_support::digon(), zero);
  EXPECT_EQ(out.total_summands(), 0u);
}

TEST(DD, OfAnInjectiveIsTheIntervalComplex) {
  const RationalField q;
  auto p = testing_support::rp2();
  const ElementId x = p.elements_of_rank(2).front();
  InjComplex<RationalField> j;
  j.terms = {{x}};
  auto out = dd(q, p, j);
  EXPECT_EQ(out.first_degree, -2);
  std::vector<std::vector<ElementId>> expected(3);
  for (ElementId y : p.down_set(x)) expected[2 - p.rank(y)].push_back(y);
  ASSERT_EQ(out.terms.size(), 3u);
  for (std::size_t t = 0; t < 3; ++t) {
    auto got = out.terms[t];
    std::sort(got.begin(), got.end());
    std::sort(expected[t].begin(), expected[t].end());
    EXPECT_EQ(got, expected[t]);
  }
  const IncidenceFunction eps(p);
  for (std::size_t t = 0; t + 1 < out.terms.size(); ++t) {
    for (std::size_t c = 0; c < out.terms[t].size(); ++c) {
      for (std::size_t r = 0; r < out.terms[t + 1].size(); ++r) {
        const ElementId from = out.terms[t][c], to = out.terms[t + 1][r];
        const auto v = out.differentials[t].at(r, c);
        if (p.covers(from, to)) {
          EXPECT_EQ(v, q.from_int(eps(from, to)));
        } else {
          EXPECT_EQ(v, q.zero());
        }
      }
    }
  }
}

TEST(DD, DualOfTheDualizingComplexOfBooleanOneIsTheRing) {
  const RationalField q;
  auto p = boolean(1);
  auto back = dd(q, p, dualizing_complex(q, p));
  for (ElementId x = 0; x < p.size(); ++x)
    EXPECT_EQ(profile(q, evaluate_at(p, back, x)), (std::map<int, std::size_t>{{0, 1}}));
}

TEST(LambdaModule, StandardModulesAreValid) {
  const PrimeField f(3);
  for (const auto& [name, p] : testing_support::sample_posets(5)) {
    EXPECT_TRUE(is_valid_module(f, p, ring_module(f, p))) << name;
    for (ElementId x = 0; x < p.size(); ++x) {
      EXPECT_TRUE(is_valid_module(f, p, injective_module(f, p, x))) << name;
      EXPECT_TRUE(is_valid_module(f, p, projective_module(f, p, x))) << name;
    }
  }
}

TEST(LambdaModule, RandomModulesAreValid) {
  const RationalField q;
  std::mt19937_64 rng(21);
  auto p = corpus_poset("cone:digon");
  for (int k = 0; k < 20; ++k) EXPECT_TRUE(is_valid_module(q, p, random_lambda_module(q, p, rng)));
}

TEST(LambdaModule, BrokenDiamondIsDetected) {
  const RationalField q;
  auto p = boolean(2);
  auto n = ring_module(q, p);
  const ElementId top = p.elements_of_rank(2).front();
  n.cover_maps[{top, p.atom(0)}](0, 0) = q.from_int(2);
  EXPECT_FALSE(is_valid_module(q, p, n));
}

TEST(LambdaModule, SocleOfInjectiveIsAtItsCarrier) {
  const RationalField q;
  auto p = testing_support::digon();
  auto e = injective_module(q, p, el(p, "e1"));
  for (ElementId x = 0; x < p.size(); ++x)
    EXPECT_EQ(socle_basis(q, p, e, x).cols(), x == el(p, "e1") ? 1u : 0u);
}

TEST(InjectiveResolution, SimpleAtTheBottomIsInjective) {
  const RationalField q;
  auto p = testing_support::digon();
  std::vector<char> support(p.size(), 0);
  support[0] = 1;
  auto res = injective_resolution(q, p, indicator_module(q, p, support));
  EXPECT_EQ(res.complex.first_degree, 0);
  EXPECT_EQ(res.complex.terms, (std::vector<std::vector<ElementId>>{{0}}));
}

TEST(InjectiveResolution, SimpleAtATopElementNeedsTheWholeInterval) {
  // The hull A/p_x is k on {z <= x}; the cokernels walk down the interval.
  const RationalField q;
  auto p = testing_support::digon();
  const ElementId top = el(p, "e2");
  std::vector<char> support(p.size(), 0);
  support[top] = 1;
  auto res = injective_resolution(q, p, indicator_module(q, p, support));
  EXPECT_EQ(res.complex.first_degree, 0);
  EXPECT_EQ(res.complex.terms,
            (std::vector<std::vector<ElementId>>{{top}, {el(p, "v1"), el(p, "v2")}, {0}}));
}

TEST(InjectiveResolution, RingOfBooleanOne) {
  const RationalField q;
  auto p = boolean(1);
  auto res = injective_resolution(q, p, ring_module(q, p));
  EXPECT_LE(res.complex.terms.size(), 2u);
  EXPECT_EQ(res.complex.terms.front(), std::vector<ElementId>{p.atom(0)});
}

template <class F>
void check_resolution(const F& f, const SimplicialPoset& p, const LambdaModule<F>& n, const std::string& label) {
  auto res = injective_resolution(f, p, n);
  EXPECT_NO_THROW(check_inj_complex(f, p, res.complex)) << label;
  EXPECT_LE(res.complex.terms.size(), p.rank() + 1) << label;
  for (ElementId x = 0; x < p.size(); ++x) {
    std::map<int, std::size_t> expected;
    if (n.dims[x]) expected[0] = n.dims[x];
    EXPECT_EQ(profile(f, evaluate_at(p, res.complex, x)), expected) << label << " at " << p.name(x);
    EXPECT_EQ(rank(f, res.coaugmentation[x]), n.dims[x]) << label;
  }
}

TEST(InjectiveResolution, IsExactAndShortOnRandomModules) {
  std::mt19937_64 rng(4);
  for (const char* name : {"digon", "cone:digon", "rp2_six_vertex", "edge_plus_triangle"}) {
    auto p = corpus_poset(name);
    for (int k = 0; k < 6; ++k) {
      check_resolution(RationalField{}, p, random_lambda_module(RationalField{}, p, rng), name);
      check_resolution(PrimeField(2), p, random_lambda_module(PrimeField(2), p, rng), name);
    }
    check_resolution(RationalField{}, p, ring_module(RationalField{}, p), name);
  }
}

TEST(InjectiveResolution, DualOfTheRingsResolutionGivesTheKTable) {
  for (const auto& field : testing_support::both_fields()) {
    for (const auto& [name, p] : testing_support::sample_posets(5)) {
      const auto table = local_cohomology_table(p, field);
      with_field(field, [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        auto d = dd(f, p, injective_resolution(f, p, ring_module(f, p)).complex);
        for (ElementId x = 0; x < p.size(); ++x)
          EXPECT_EQ(profile(f, evaluate_at(p, d, x)), k_profile_negated<F>(table, x)) << name;
      });
    }
  }
}

TEST(InjectiveResolution, DualOfJxResolutionGivesTheSumOverJoins) {
  const RationalField q;
  for (const char* name : {"digon", "rp2_six_vertex", "edge_plus_triangle", "two_triangles"}) {
    auto p = corpus_poset(name);
    const auto table = local_cohomology_table(p, FieldSpec::rational());
    for (ElementId x = 0; x < p.size(); ++x) {
      const auto expected = jx_local_cohomology(p, x, table);
      auto d = dd(q, p, injective_resolution(q, p, projective_module(q, p, x)).complex);
      for (ElementId y = 0; y < p.size(); ++y) {
        std::map<int, std::size_t> want;
        for (unsigned i = 0; i <= p.rank(); ++i)
          if (expected[y][i]) want[-static_cast<int>(i)] = expected[y][i];
        EXPECT_EQ(profile(q, evaluate_at(p, d, y)), want) << name << " x=" << p.name(x) << " y=" << p.name(y);
      }
    }
  }
}

TEST(CanonicalModule, Examples) {
  const RationalField q;
  auto digon_omega = canonical_module(q, testing_support::digon());
  for (auto d : digon_omega.dims) EXPECT_EQ(d, 1u);
  for (const auto& [cover, m] : digon_omega.cover_maps) EXPECT_FALSE(m.is_zero());

  auto b2 = canonical_module(q, boolean(2));
  EXPECT_EQ(b2.dims[0], 0u);

  auto glued = canonical_module(q, corpus_poset("glued_simplices:3"));
  for (auto d : glued.dims) EXPECT_EQ(d, 1u);
}

TEST(CanonicalModule, IsAModuleOnSamples) {
  for (const auto& [name, p] : testing_support::sample_posets(10)) {
    EXPECT_TRUE(is_valid_module(RationalField{}, p, canonical_module(RationalField{}, p))) << name;
    EXPECT_TRUE(is_valid_module(PrimeField(2), p, canonical_module(PrimeField(2), p))) << name;
  }
}

TEST(Duality, InvolutionOnCorpus) {
  for (const auto& field : testing_support::both_fields()) {
    for (const char* name : {"digon", "rp2_six_vertex", "cone:digon", "edge_plus_triangle", "boolean:3"}) {
      auto check = cli::check_duality_involution(corpus_poset(name), field, 17, 8, 4);
      EXPECT_TRUE(check.passed) << name << " " << check.detail;
    }
  }
}

TEST(Duality, CheckDetectsAShift) {
  // The involution check compares real data: a shifted complex differs.
  const RationalField q;
  auto p = testing_support::digon();
  auto ia = dualizing_complex(q, p);
  auto moved = shift(q, ia, 1);
  EXPECT_NE(profile(q, evaluate_at(p, ia, 0)), profile(q, evaluate_at(p, moved, 0)));
}

TEST(RandomComplex, IsValidAndUsuallyNonzero) {
  const PrimeField f(2);
  auto p = corpus_poset("rp2_six_vertex");
  std::mt19937_64 rng(8);
  std::size_t nonzero = 0;
  for (int k = 0; k < 20; ++k) {
    auto j = random_inj_complex(f, p, rng);
    EXPECT_NO_THROW(check_inj_complex(f, p, j));
    if (j.total_summands() > 0) ++nonzero;
  }
  EXPECT_GE(nonzero, 15u);
}
