#pragma once

#include <Eigen/Dense>

#include "symcone/element.hpp"

namespace symcone {

class SymEndo;

/// Arbitrary linear endomorphism of V, represented in the algebra basis.
class LinearMap {
 public:
  LinearMap(AlgebraPtr algebra, Eigen::MatrixXd mat);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Eigen::MatrixXd& mat() const { return mat_; }

  Element apply(const Element& x) const;
  /// Tr of the endomorphism (not the Jordan trace).
  double trace() const { return mat_.trace(); }

  LinearMap operator+(const LinearMap& other) const;
  LinearMap operator-(const LinearMap& other) const;
  LinearMap operator*(double s) const;
  /// Composition (this o other).
  LinearMap operator*(const LinearMap& other) const;

  double symmetry_residual() const;

 private:
  AlgebraPtr algebra_;
  Eigen::MatrixXd mat_;
};

/// Symmetric endomorphism of V; also a quadratic form through q(x) = <f(x), x>.
/// Construction checks symmetry to 1e-12 relative to the largest entry and
/// stores the symmetrized matrix.
class SymEndo {
 public:
  SymEndo(AlgebraPtr algebra, Eigen::MatrixXd mat);
  explicit SymEndo(const LinearMap& map);

  static SymEndo identity(const AlgebraPtr& algebra);
  static SymEndo zero(const AlgebraPtr& algebra);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Eigen::MatrixXd& mat() const { return mat_; }
  int dim() const { return static_cast<int>(mat_.rows()); }

  Element apply(const Element& x) const;
  double trace() const { return mat_.trace(); }

  SymEndo operator+(const SymEndo& other) const;
  SymEndo operator-(const SymEndo& other) const;
  SymEndo operator-() const;
  SymEndo operator*(double s) const;
  friend SymEndo operator*(double s, const SymEndo& f) { return f * s; }

  operator LinearMap() const { return LinearMap(algebra_, mat_); }

 private:
  AlgebraPtr algebra_;
  Eigen::MatrixXd mat_;
};

LinearMap operator*(const SymEndo& a, const SymEndo& b);
LinearMap operator*(const LinearMap& a, const SymEndo& b);
LinearMap operator*(const SymEndo& a, const LinearMap& b);

/// L(x): u -> x o u.
SymEndo lmap(const Element& x);
/// P(x) = 2 L(x)^2 - L(x^2).
SymEndo pmap(const Element& x);

}  // namespace symcone
