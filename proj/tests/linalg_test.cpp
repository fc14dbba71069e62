#include <gtest/gtest.h>

#include <random>

#include "facering/classify.hpp"
#include "facering/linalg.hpp"
#include "support.hpp"

using namespace facering;

namespace {

template <class F>
SparseMatrix<F> random_sparse(const F& f, std::size_t rows, std::size_t cols, double density,
                              std::mt19937_64& rng) {
  SparseMatrix<F> m(rows, cols);
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<int> val(-3, 3);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m.set(r, c, f.from_int(val(rng)));
  return m;
}

/// Rank-deficient product of random factors, so ranks are not always full.
template <class F>
SparseMatrix<F> random_low_rank(const F& f, std::size_t rows, std::size_t cols, std::size_t inner,
                                std::mt19937_64& rng) {
  auto a = random_sparse(f, rows, inner, 0.3, rng);
  auto b = random_sparse(f, inner, cols, 0.3, rng);
  return multiply(f, a, b);
}

/// The coboundary from edges to triangles of the projective plane.
template <class F>
SparseMatrix<F> rp2_edge_coboundary(const F& f) {
  auto p = testing_support::rp2();
  auto c = k_complex(f, p, 0);
  return c.differentials[2];
}

}  // namespace

TEST(Field, PrimeFieldArithmetic) {
  const PrimeField f(7);
  EXPECT_EQ(f.from_int(-1), 6u);
  EXPECT_EQ(f.mul(3, 5), 1u);
  for (std::uint32_t a = 1; a < 7; ++a) {
    EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
    EXPECT_EQ(f.mul(a, f.pow(a, 5)), 1u);  // Fermat: a * a^(p-2) = 1
  }
  EXPECT_THROW(PrimeField(8), Error);
  EXPECT_THROW(PrimeField(1), Error);
}

TEST(Field, FermatInverseForLargePrime) {
  const PrimeField f(2147483647u);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 100; ++k) {
    const auto a = static_cast<std::uint32_t>(std::uniform_int_distribution<std::uint32_t>(1, 2147483646u)(rng));
    EXPECT_EQ(f.mul(a, f.pow(a, 2147483645u)), 1u);
  }
}

TEST(Field, SpecParsing) {
  EXPECT_EQ(FieldSpec::parse("rational").kind, FieldSpec::Kind::kRational);
  EXPECT_EQ(FieldSpec::parse("gf:5").prime, 5u);
  EXPECT_EQ(FieldSpec::parse("gf:5").name(), "gf:5");
  EXPECT_THROW(FieldSpec::parse("gf:6"), Error);
  EXPECT_THROW(FieldSpec::parse("gf:"), Error);
  EXPECT_THROW(FieldSpec::parse("reals"), Error);
}

TEST(Rank, Identity) {
  const RationalField q;
  EXPECT_EQ(rank(q, SparseMatrix<RationalField>::identity(q, 3)), 3u);
  const PrimeField f(2);
  EXPECT_EQ(rank(f, SparseMatrix<PrimeField>::identity(f, 3)), 3u);
}

TEST(Rank, ProjectivePlaneCoboundaryDependsOnCharacteristic) {
  const auto over_q = rank(RationalField{}, rp2_edge_coboundary(RationalField{}));
  const auto over_2 = rank(PrimeField(2), rp2_edge_coboundary(PrimeField(2)));
  EXPECT_EQ(over_q, 10u);
  EXPECT_EQ(over_2, 9u);
}

TEST(Kernel, ZeroMapHasFullKernel) {
  const RationalField q;
  SparseMatrix<RationalField> zero(2, 4);
  auto k = kernel_basis(q, zero);
  EXPECT_EQ(k.rows(), 4u);
  EXPECT_EQ(k.cols(), 4u);
  EXPECT_EQ(rank(q, to_sparse(k)), 4u);
}

template <class F>
void check_rank_properties(const F& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 90)(rng);
    const std::size_t cols = std::uniform_int_distribution<std::size_t>(1, 90)(rng);
    const std::size_t inner = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto m = random_low_rank(f, rows, cols, inner, rng);
    const auto r = rank(f, m);
    EXPECT_EQ(r, rank(f, m.transpose()));
    EXPECT_EQ(r, rank(f, m, {PivotRule::kFirstNonzero, EliminationPath::kSparse}));
    EXPECT_EQ(r, rank(f, m, {PivotRule::kMarkowitz, EliminationPath::kSparse}));
    EXPECT_EQ(r, rank(f, m, {PivotRule::kMarkowitz, EliminationPath::kDense}));
    EXPECT_EQ(r, rref(f, to_dense(m)).pivots.size());
    const auto k = kernel_basis(f, m);
    EXPECT_EQ(k.cols() + r, cols);
    EXPECT_TRUE(multiply(f, to_dense(m), k).is_zero());
    EXPECT_EQ(image_basis(f, m).cols(), r);
  }
}

TEST(Rank, PivotOrderPathAndTransposeIndependenceOverQ) { check_rank_properties(RationalField{}, 1); }
TEST(Rank, PivotOrderPathAndTransposeIndependenceOverGF2) { check_rank_properties(PrimeField(2), 2); }
TEST(Rank, PivotOrderPathAndTransposeIndependenceOverGF101) { check_rank_properties(PrimeField(101), 3); }

TEST(Rank, EntryGrowthStaysExact) {
  // A Hilbert-like integer matrix is nonsingular; fraction-free elimination
  // must not lose rank.
  const RationalField q;
  const std::size_t n = 80;
  SparseMatrix<RationalField> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, q.from_int(static_cast<long long>((i + 1) * (j + 1) % 97 + (i == j ? 1000 : 0))));
  EXPECT_EQ(rank(q, m), n);
  EXPECT_EQ(rank(q, m, {PivotRule::kFirstNonzero, EliminationPath::kSparse}), n);
}

TEST(Quotient, ProjectionAndSection) {
  const RationalField q;
  DenseMatrix<RationalField> span(3, 1);
  span(0, 0) = 1;
  span(1, 0) = 1;
  auto qm = quotient_by_columns(q, 3, span);
  EXPECT_EQ(qm.dim(), 2u);
  EXPECT_TRUE(multiply(q, qm.projection, span).is_zero());
  EXPECT_EQ(multiply(q, qm.projection, qm.section(q)), DenseMatrix<RationalField>::identity(q, 2));
}

TEST(LeftInverse, RecoversCoordinates) {
  const PrimeField f(5);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = to_dense(random_sparse(f, 8, 4, 0.6, rng));
    if (rank(f, m) != 4) continue;
    EXPECT_EQ(multiply(f, left_inverse(f, m), m), DenseMatrix<PrimeField>::identity(f, 4));
  }
}

TEST(Cohomology, Examples) {
  const RationalField q;
  VectorSpaceComplex<RationalField> iso;
  iso.dims = {1, 1};
  iso.differentials = {SparseMatrix<RationalField>::identity(q, 1)};
  EXPECT_EQ(cohomology_dims(q, iso), (std::vector<std::size_t>{0, 0}));

  auto digon_k = k_complex(q, testing_support::digon(), 0);
  EXPECT_EQ(digon_k.dims, (std::vector<std::size_t>{1, 2, 2}));
  EXPECT_EQ(cohomology_dims(q, digon_k), (std::vector<std::size_t>{0, 0, 1}));

  VectorSpaceComplex<RationalField> zero;
  zero.dims = {2, 3, 1};
  zero.differentials = {SparseMatrix<RationalField>(3, 2), SparseMatrix<RationalField>(1, 3)};
  EXPECT_TRUE(is_complex(q, zero));
  EXPECT_EQ(cohomology_dims(q, zero), zero.dims);
}

TEST(Cohomology, NonComplexIsDetected) {
  const RationalField q;
  VectorSpaceComplex<RationalField> c;
  c.dims = {1, 1, 1};
  c.differentials = {SparseMatrix<RationalField>::identity(q, 1), SparseMatrix<RationalField>::identity(q, 1)};
  EXPECT_FALSE(is_complex(q, c));
}

TEST(InducedMap, IdentityInclusion) {
  const PrimeField f(2);
  auto p = testing_support::rp2();
  auto c = k_complex(f, p, 0);
  ChainMap<PrimeField> id{&c, &c, {}};
  for (std::size_t t = 0; t < c.dims.size(); ++t) id.components.push_back(SparseMatrix<PrimeField>::identity(f, c.dims[t]));
  for (int deg = c.first_degree; deg <= c.last_degree(); ++deg) {
    const auto h = cohomology_basis(f, c, deg).dim();
    EXPECT_EQ(induced_map_on_cohomology(f, id, deg), DenseMatrix<PrimeField>::identity(f, h));
  }
}

TEST(InducedMap, DigonTopEdgeIncludesNontrivially) {
  const RationalField q;
  auto p = testing_support::digon();
  const ElementId e1 = testing_support::el(p, "e1");
  auto ke = k_complex(p, e1);
  auto kb = k_complex(p, 0);
  auto ce = to_vector_space_complex(q, p, ke);
  auto cb = to_vector_space_complex(q, p, kb);
  auto m = induced_map_on_top_cohomology(q, k_inclusion(q, p, ke, kb, ce, cb));
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.cols(), 1u);
  EXPECT_FALSE(m.is_zero());
}

TEST(InducedMap, ZeroSubcomplexGivesZeroMap) {
  const RationalField q;
  auto p = testing_support::digon();
  auto cb = k_complex(q, p, 0);
  VectorSpaceComplex<RationalField> zero;
  zero.first_degree = 0;
  zero.dims = {0, 0, 0};
  zero.differentials = {SparseMatrix<RationalField>(0, 0), SparseMatrix<RationalField>(0, 0)};
  ChainMap<RationalField> incl{&zero, &cb, {}};
  for (std::size_t t = 0; t < 3; ++t) incl.components.push_back(SparseMatrix<RationalField>(cb.dims[t], 0));
  auto m = induced_map_on_top_cohomology(q, incl);
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m.cols(), 0u);
  EXPECT_TRUE(m.is_zero());
}
