#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

namespace symcone {
namespace {

using testing::gaussian;
using testing::interior;
using testing::to_complex;

TEST(Determinant, IdentityAndSpinFormula) {
  for (const auto& spec : standard_algebras())
    EXPECT_NEAR(determinant(spec.make()->identity()), 1.0, 1e-12) << spec.describe();

  const auto spin = make_algebra(AlgebraKind::SpinFactor, 2, 3);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Element x = gaussian(spin, rng);
    const auto [x0, xv] = spin->spin_components(x);
    EXPECT_NEAR(determinant(x), x0 * x0 - xv.squaredNorm(), 1e-11);
  }
}

TEST(Determinant, MatchesComplexDeterminant) {
  for (auto kind : {AlgebraKind::SymReal, AlgebraKind::HermComplex}) {
    for (int r = 1; r <= 4; ++r) {
      const auto alg = make_algebra(kind, r);
      std::mt19937_64 rng(10 + r);
      for (int t = 0; t < 10; ++t) {
        const Element x = gaussian(alg, rng);
        const double expect = to_complex(x).determinant().real();
        EXPECT_NEAR(determinant(x), expect, 1e-10 * std::max(1.0, std::abs(expect)));
      }
    }
  }
}

// For quaternion matrices the 2r x 2r complex embedding has every eigenvalue
// of x twice; the determinant is the product of one copy of each pair.
TEST(Determinant, QuaternionEmbeddingOracle) {
  const auto alg = make_algebra(AlgebraKind::HermQuaternion, 2);
  KMatrix m(2, 4);
  m.entry(0, 0)[0] = 2.0;
  m.entry(1, 1)[0] = 3.0;
  EXPECT_NEAR(determinant(alg->from_matrix(m)), 6.0, 1e-12);

  for (int r = 2; r <= 3; ++r) {
    const auto q = make_algebra(AlgebraKind::HermQuaternion, r);
    std::mt19937_64 rng(r);
    for (int t = 0; t < 10; ++t) {
      const Element x = gaussian(q, rng);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(q->to_matrix(x).complex_embedding());
      const Eigen::VectorXd ev = es.eigenvalues();
      double expect = 1.0;
      for (int i = 0; i < ev.size(); i += 2) {
        ASSERT_NEAR(ev[i], ev[i + 1], 1e-9);
        expect *= ev[i];
      }
      EXPECT_NEAR(determinant(x), expect, 1e-10 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST(Determinant, HomogeneityAndQuadraticRepresentation) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
      const Element x = gaussian(alg, rng), y = gaussian(alg, rng);
      const double dx = determinant(x), dy = determinant(y);
      EXPECT_NEAR(determinant(x * 1.7), std::pow(1.7, alg->rank()) * dx,
                  1e-10 * std::max(1.0, std::abs(dx) * 10));
      const double rhs = dy * dy * dx;
      EXPECT_NEAR(determinant(pmap(y).apply(x)), rhs, 1e-9 * std::max(1.0, std::abs(rhs)))
          << spec.describe();
    }
  }
}

TEST(Spectral, ValuesMatchEigenvalues) {
  for (auto kind : {AlgebraKind::SymReal, AlgebraKind::HermComplex}) {
    const auto alg = make_algebra(kind, 3);
    std::mt19937_64 rng(7);
    const Element x = gaussian(alg, rng);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_complex(x));
    const auto values = spectral_values(x);
    ASSERT_EQ(values.size(), 3u);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(values[i], es.eigenvalues()[i], 1e-11);
  }
}

TEST(Spectral, TraceAndDeterminantFromSpectralValues) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    std::mt19937_64 rng(8);
    const Element x = gaussian(alg, rng);
    const auto values = spectral_values(x);
    ASSERT_EQ(static_cast<int>(values.size()), alg->rank());
    EXPECT_TRUE(std::is_sorted(values.begin(), values.end()));
    double sum = 0, prod = 1;
    for (double v : values) {
      sum += v;
      prod *= v;
    }
    EXPECT_NEAR(sum, trace(x), 1e-10) << spec.describe();
    EXPECT_NEAR(prod, determinant(x), 1e-9 * std::max(1.0, std::abs(prod))) << spec.describe();
  }
}

TEST(Spectral, SqrtAndInverse) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    std::mt19937_64 rng(31);
    const Element x = interior(alg, rng);
    ASSERT_TRUE(in_cone(x));
    const Element s = cone_sqrt(x);
    EXPECT_TRUE(in_cone(s));
    EXPECT_LT((s.square() - x).norm(), 1e-11) << spec.describe();
    EXPECT_LT((product(x, inverse(x)) - alg->identity()).norm(), 1e-10) << spec.describe();
  }
}

TEST(Spectral, ConeMembership) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 2);
  EXPECT_TRUE(in_cone(alg->identity()));
  EXPECT_FALSE(in_cone(-alg->identity()));
  EXPECT_FALSE(in_cone(alg->basis(0)));
  EXPECT_TRUE(in_cone(alg->basis(0), -1e-12));
}

TEST(Frame, StandardFrameIsValid) {
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    const JordanFrame frame = standard_frame(alg);
    ASSERT_EQ(static_cast<int>(frame.idempotents.size()), alg->rank());
    EXPECT_NO_THROW(validate_frame(frame)) << spec.describe();
  }
}

TEST(Frame, InvalidFrameIsRejected) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 2);
  JordanFrame bad{{alg->basis(0), alg->basis(0)}};
  EXPECT_THROW(validate_frame(bad), InvalidFrame);
  JordanFrame incomplete{{alg->basis(0), alg->zero()}};
  EXPECT_THROW(validate_frame(incomplete), InvalidFrame);
}

TEST(Frame, PeirceBlockDimensions) {
  struct Case {
    AlgebraKind kind;
    int rank;
    std::optional<int> ambient;
    std::size_t off_dim;
  };
  for (const Case c : {Case{AlgebraKind::SymReal, 2, std::nullopt, 1},
                       Case{AlgebraKind::HermComplex, 2, std::nullopt, 2},
                       Case{AlgebraKind::SpinFactor, 2, 4, 3},
                       Case{AlgebraKind::SpinFactor, 2, 9, 8},
                       Case{AlgebraKind::Albert, 3, std::nullopt, 8}}) {
    const auto alg = make_algebra(c.kind, c.rank, c.ambient);
    const PeirceBasis pb = peirce_basis(alg, standard_frame(alg));
    EXPECT_EQ(pb.blocks.at({0, 1}).size(), c.off_dim);
    EXPECT_EQ(pb.size(), alg->dim());
    const Eigen::MatrixXd q = pb.change_of_basis();
    EXPECT_LT(testing::max_abs(q.transpose() * q - Eigen::MatrixXd::Identity(alg->dim(), alg->dim())),
              1e-12);
  }
}

// Frame conjugated by a rotation: its Peirce basis still satisfies
// x^2 = (c_s + c_t)/2 on unit x in V_st.
TEST(Frame, PeirceBasisOfRotatedFrame) {
  const auto alg = make_algebra(AlgebraKind::SymReal, 3);
  const double c = std::cos(0.4), s = std::sin(0.4);
  Eigen::MatrixXcd rot = Eigen::MatrixXcd::Identity(3, 3);
  rot(0, 0) = c;
  rot(0, 1) = -s;
  rot(1, 0) = s;
  rot(1, 1) = c;
  JordanFrame frame;
  for (int i = 0; i < 3; ++i) {
    Eigen::MatrixXcd e = Eigen::MatrixXcd::Zero(3, 3);
    e(i, i) = 1.0;
    frame.idempotents.push_back(testing::from_complex(alg, rot * e * rot.adjoint()));
  }
  const PeirceBasis pb = peirce_basis(alg, frame);
  for (const auto& [key, block] : pb.blocks) {
    if (key.first == key.second) continue;
    for (const Element& x : block) {
      const Element half = (frame.idempotents[key.first] + frame.idempotents[key.second]) * 0.5;
      EXPECT_LT((x.square() - half).norm(), 1e-12);
    }
  }
}

}  // namespace
}  // namespace symcone
