#pragma once

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Dense>

#include "symcone/symcone.hpp"

namespace symcone::testing {

inline const double kSqrt2 = std::sqrt(2.0);

/// Coordinates -> Hermitian complex matrix for SymReal / HermComplex, written
/// out directly from the basis layout (diagonal units, then (i,j) pairs in
/// lexicographic order carrying 1/sqrt 2) rather than through KMatrix.
inline Eigen::MatrixXcd to_complex(const Element& x) {
  const auto& alg = *x.algebra();
  const int r = alg.rank();
  const int w = alg.entry_width();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  int k = 0;
  for (int i = 0; i < r; ++i) m(i, i) = x[k++];
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const double re = x[k++];
      const double im = w == 2 ? x[k++] : 0.0;
      m(i, j) = std::complex<double>(re, im) / kSqrt2;
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline Element from_complex(const AlgebraPtr& alg, const Eigen::MatrixXcd& m) {
  const int r = alg->rank();
  const int w = alg->entry_width();
  Eigen::VectorXd c(alg->dim());
  int k = 0;
  for (int i = 0; i < r; ++i) c[k++] = m(i, i).real();
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      c[k++] = kSqrt2 * m(i, j).real();
      if (w == 2) c[k++] = kSqrt2 * m(i, j).imag();
    }
  }
  return alg->element(c);
}

inline Element gaussian(const AlgebraPtr& alg, std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Eigen::VectorXd v(alg->dim());
  for (int i = 0; i < v.size(); ++i) v[i] = normal(rng);
  return alg->element(v);
}

/// g^2 + shift e: strictly inside the cone.
inline Element interior(const AlgebraPtr& alg, std::mt19937_64& rng, double shift = 0.5) {
  const Element g = gaussian(alg, rng, 1.0 / std::sqrt(alg->dim()));
  return g.square() + alg->identity() * shift;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace symcone::testing
