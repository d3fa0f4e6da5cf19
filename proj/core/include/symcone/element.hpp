#pragma once

#include <Eigen/Dense>

#include "symcone/algebra.hpp"

namespace symcone {

/// Coordinate vector over the orthonormal basis of one JordanAlgebra.
class Element {
 public:
  Element(AlgebraPtr algebra, Eigen::VectorXd coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Eigen::VectorXd& coords() const { return coords_; }
  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[i]; }

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator-() const;
  Element operator*(double s) const;
  friend Element operator*(double s, const Element& x) { return x * s; }

  Element square() const;
  /// x^k for k >= 0 (x^0 = e); well defined by power associativity.
  Element power(int k) const;
  /// sqrt(tr(x o x)).
  double norm() const { return coords_.norm(); }

 private:
  AlgebraPtr algebra_;
  Eigen::VectorXd coords_;
};

/// Throws AlgebraMismatch if a and b belong to different algebras.
void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Jordan product x o y.
Element product(const Element& x, const Element& y);
/// <x, y> = tr(x o y), the coordinate dot product.
double inner(const Element& x, const Element& y);
double trace(const Element& x);
/// Jordan determinant: e_r of the spectral values, obtained from the power
/// traces tr(x^k), k <= r, by Newton's identities. Valid for every kind.
double determinant(const Element& x);

}  // namespace symcone
