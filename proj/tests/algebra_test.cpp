#include <gtest/gtest.h>

#include "support.hpp"

namespace symcone {
namespace {

using testing::from_complex;
using testing::gaussian;
using testing::to_complex;

TEST(Composition, OctonionNormIsMultiplicative) {
  const auto& o = CompositionAlgebra::of_dimension(8);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 50; ++t) {
    std::array<double, 8> a{}, b{}, ab{};
    for (int i = 0; i < 8; ++i) {
      a[i] = normal(rng);
      b[i] = normal(rng);
    }
    o.multiply(a, b, ab);
    double na = 0, nb = 0, nab = 0;
    for (int i = 0; i < 8; ++i) {
      na += a[i] * a[i];
      nb += b[i] * b[i];
      nab += ab[i] * ab[i];
    }
    EXPECT_NEAR(nab, na * nb, 1e-10 * na * nb);
  }
}

TEST(Composition, QuaternionsAssociateOctonionsDoNot) {
  auto assoc_gap = [](int dim) {
    const auto& alg = CompositionAlgebra::of_dimension(dim);
    double worst = 0.0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
          const double left = alg.sign(i, j) * alg.sign(alg.index(i, j), k);
          const int li = alg.index(alg.index(i, j), k);
          const double right = alg.sign(j, k) * alg.sign(i, alg.index(j, k));
          const int ri = alg.index(i, alg.index(j, k));
          if (li != ri || left != right) worst = 1.0;
        }
    return worst;
  };
  EXPECT_EQ(assoc_gap(4), 0.0);
  EXPECT_EQ(assoc_gap(8), 1.0);
}

TEST(Composition, OctonionsAreAlternative) {
  const auto& o = CompositionAlgebra::of_dimension(8);
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::array<double, 8> a{}, b{}, aa{}, aab{}, ab{}, a_ab{};
  for (int i = 0; i < 8; ++i) {
    a[i] = normal(rng);
    b[i] = normal(rng);
  }
  o.multiply(a, a, aa);
  o.multiply(aa, b, aab);
  o.multiply(a, b, ab);
  o.multiply(a, ab, a_ab);
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(aab[i], a_ab[i], 1e-12);
}

struct DimCase {
  AlgebraKind kind;
  int rank;
  std::optional<int> ambient;
  int d;
  int n;
};

class AlgebraDims : public ::testing::TestWithParam<DimCase> {};

TEST_P(AlgebraDims, MatchesRankAndPeirce) {
  const auto c = GetParam();
  const auto alg = make_algebra(c.kind, c.rank, c.ambient);
  EXPECT_EQ(alg->peirce(), c.d);
  EXPECT_EQ(alg->dim(), c.n);
  EXPECT_EQ(alg->dim(), algebra_dimension(c.rank, c.d));
}

INSTANTIATE_TEST_SUITE_P(
    Kinds, AlgebraDims,
    ::testing::Values(DimCase{AlgebraKind::SymReal, 3, std::nullopt, 1, 6},
                      DimCase{AlgebraKind::SpinFactor, 2, 4, 3, 5},
                      DimCase{AlgebraKind::Albert, 3, std::nullopt, 8, 27},
                      DimCase{AlgebraKind::HermComplex, 3, std::nullopt, 2, 9},
                      DimCase{AlgebraKind::HermQuaternion, 2, std::nullopt, 4, 6},
                      DimCase{AlgebraKind::SymReal, 1, std::nullopt, 1, 1}));

TEST(Algebra, RejectsInvalidCombinations) {
  EXPECT_THROW(make_algebra(AlgebraKind::Albert, 2), InvalidAlgebra);
  EXPECT_THROW(make_algebra(AlgebraKind::SpinFactor, 3, 4), InvalidAlgebra);
  EXPECT_THROW(make_algebra(AlgebraKind::SpinFactor, 2), InvalidAlgebra);
  EXPECT_THROW(make_algebra(AlgebraKind::SpinFactor, 2, 1), InvalidAlgebra);
  EXPECT_THROW(make_algebra(AlgebraKind::SymReal, 0), InvalidAlgebra);
  EXPECT_THROW(parse_kind("octonion"), std::invalid_argument);
  EXPECT_EQ(parse_kind("herm"), AlgebraKind::HermComplex);
  EXPECT_EQ(parse_kind("Albert"), AlgebraKind::Albert);
}

TEST(Algebra, MixedAlgebraArithmeticIsRejected) {
  const auto a = make_algebra(AlgebraKind::SymReal, 2);
  const auto b = make_algebra(AlgebraKind::SymReal, 2);
  EXPECT_THROW(a->identity() + b->identity(), AlgebraMismatch);
  EXPECT_THROW(product(a->identity(), b->identity()), AlgebraMismatch);
}

TEST(Algebra, BasisIsOrthonormalAndStructureSymmetric) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    const int n = alg->dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        EXPECT_NEAR(trace(product(alg->basis(i), alg->basis(j))), i == j ? 1.0 : 0.0, 1e-12)
            << spec.describe();
        for (int k = 0; k < n; ++k)
          ASSERT_EQ(alg->structure(i, j, k), alg->structure(j, i, k)) << spec.describe();
      }
  }
}

TEST(Algebra, SpinProductMatchesFormula) {
  const auto alg = make_algebra(AlgebraKind::SpinFactor, 2, 2);
  const std::array<double, 2> xv{1.0, 0.0}, yv{0.0, 1.0};
  const Element z = product(alg->spin(1.0, xv), alg->spin(2.0, yv));
  const auto [z0, zv] = alg->spin_components(z);
  EXPECT_NEAR(z0, 2.0, 1e-14);
  EXPECT_NEAR(zv[0], 2.0, 1e-14);
  EXPECT_NEAR(zv[1], 1.0, 1e-14);

  const std::array<double, 2> ones{1.0, 1.0};
  EXPECT_NEAR(trace(alg->spin(3.0, ones)), 6.0, 1e-14);
}

TEST(Algebra, IdentityIsUnitAndTraceIsRank) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    std::mt19937_64 rng(9);
    const Element x = gaussian(alg, rng);
    EXPECT_LT((product(x, alg->identity()) - x).norm(), 1e-12) << spec.describe();
    EXPECT_NEAR(trace(alg->identity()), alg->rank(), 1e-12);
  }
}

// The matrix kinds multiply like (xy + yx)/2 of Hermitian matrices; compare
// with a direct complex matrix computation for R and C.
TEST(Algebra, JordanProductAgreesWithMatrixProduct) {
  for (auto kind : {AlgebraKind::SymReal, AlgebraKind::HermComplex}) {
    for (int r = 1; r <= 4; ++r) {
      const auto alg = make_algebra(kind, r);
      std::mt19937_64 rng(r);
      for (int t = 0; t < 20; ++t) {
        const Element x = gaussian(alg, rng), y = gaussian(alg, rng);
        const Eigen::MatrixXcd a = to_complex(x), b = to_complex(y);
        const Element expect = from_complex(alg, 0.5 * (a * b + b * a));
        EXPECT_LT((product(x, y) - expect).norm(), 1e-12);
        EXPECT_NEAR(trace(x), a.trace().real(), 1e-12);
      }
    }
  }
}

TEST(Algebra, MatrixRoundTrip) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    if (!alg->is_matrix_kind()) continue;
    std::mt19937_64 rng(4);
    const Element x = gaussian(alg, rng);
    EXPECT_LT((alg->from_matrix(alg->to_matrix(x)) - x).norm(), 1e-13) << spec.describe();
  }
}

TEST(Algebra, BasisLabels) {
  const auto herm = make_algebra(AlgebraKind::HermComplex, 2);
  EXPECT_EQ(herm->basis_label(0), "E11");
  EXPECT_EQ(herm->basis_label(2), "F12.0");
  EXPECT_EQ(herm->basis_label(3), "F12.1");
  const auto spin = make_algebra(AlgebraKind::SpinFactor, 2, 3);
  EXPECT_EQ(spin->basis_label(0), "e0");
  EXPECT_EQ(spin->basis_label(3), "u3");
}

TEST(Algebra, JsonDescriptor) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 2);
  const auto j = alg->to_json();
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("d"), 1);
  EXPECT_EQ(j.at("basis").size(), 3u);
  EXPECT_FALSE(j.at("structure_constants").empty());
}

TEST(Operators, LmapAndPmapExamples) {
  const auto sym = make_algebra(AlgebraKind::SymReal, 2);
  const int n = sym->dim();
  EXPECT_LT(testing::max_abs(lmap(sym->identity()).mat() - Eigen::MatrixXd::Identity(n, n)),
            1e-14);
  EXPECT_LT(testing::max_abs(pmap(sym->identity()).mat() - Eigen::MatrixXd::Identity(n, n)),
            1e-14);
  const Element e11 = sym->basis(0);
  const Element off = sym->basis(2);
  EXPECT_LT((lmap(e11).apply(off) - off * 0.5).norm(), 1e-14);

  std::mt19937_64 rng(2);
  const Element x = gaussian(sym, rng);
  EXPECT_LT((pmap(e11).apply(x) - e11 * x[0]).norm(), 1e-14);
}

TEST(Operators, PmapIsAzaForSymReal) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 3);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const Element a = gaussian(alg, rng), z = gaussian(alg, rng);
    const Eigen::MatrixXcd am = to_complex(a), zm = to_complex(z);
    EXPECT_LT((pmap(a).apply(z) - from_complex(alg, am * zm * am)).norm(), 1e-11);
  }
}

TEST(Operators, SpinReflection) {
  const auto alg = make_algebra(AlgebraKind::SpinFactor, 2, 4);
  const Element e = alg->identity();
  const SymEndo s = SymEndo(outer(e, e)) - pmap(e);
  const std::array<double, 4> v{1.0, -2.0, 0.5, 3.0};
  const Element x = alg->spin(1.5, v);
  const auto [y0, yv] = alg->spin_components(s.apply(x));
  EXPECT_NEAR(y0, 1.5, 1e-14);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(yv[i], -v[i], 1e-14);
}

TEST(Operators, SpinIdempotentSpectrum) {
  for (int m = 2; m <= 6; ++m) {
    const auto alg = make_algebra(AlgebraKind::SpinFactor, 2, m);
    const Element c1 = standard_frame(alg).idempotents[0];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lmap(c1).mat());
    int ones = 0, halves = 0, zeros = 0;
    for (double v : es.eigenvalues()) {
      if (std::abs(v - 1.0) < 1e-12) ++ones;
      if (std::abs(v - 0.5) < 1e-12) ++halves;
      if (std::abs(v) < 1e-12) ++zeros;
    }
    EXPECT_EQ(ones, 1);
    EXPECT_EQ(halves, alg->peirce());
    EXPECT_EQ(zeros, 1);
  }
}

}  // namespace
}  // namespace symcone
