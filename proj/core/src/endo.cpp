#include "symcone/endo.hpp"

#include <algorithm>
#include <string>

#include "symcone/errors.hpp"

namespace symcone {
namespace {

void require_shape(const AlgebraPtr& alg, const Eigen::MatrixXd& m) {
  if (!alg) throw AlgebraMismatch("endomorphism without an algebra");
  if (m.rows() != alg->dim() || m.cols() != alg->dim())
    throw AlgebraMismatch("endomorphism matrix does not match the algebra dimension");
}

}  // namespace

LinearMap::LinearMap(AlgebraPtr algebra, Eigen::MatrixXd mat)
    : algebra_(std::move(algebra)), mat_(std::move(mat)) {
  require_shape(algebra_, mat_);
}

Element LinearMap::apply(const Element& x) const {
  require_same_algebra(algebra_, x.algebra());
  return Element(algebra_, mat_ * x.coords());
}

LinearMap LinearMap::operator+(const LinearMap& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return LinearMap(algebra_, mat_ + other.mat_);
}

LinearMap LinearMap::operator-(const LinearMap& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return LinearMap(algebra_, mat_ - other.mat_);
}

LinearMap LinearMap::operator*(double s) const { return LinearMap(algebra_, s * mat_); }

LinearMap LinearMap::operator*(const LinearMap& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return LinearMap(algebra_, mat_ * other.mat_);
}

double LinearMap::symmetry_residual() const {
  return (mat_ - mat_.transpose()).cwiseAbs().maxCoeff();
}

SymEndo::SymEndo(AlgebraPtr algebra, Eigen::MatrixXd mat)
    : algebra_(std::move(algebra)), mat_(std::move(mat)) {
  require_shape(algebra_, mat_);
  const double scale = std::max(1.0, mat_.cwiseAbs().maxCoeff());
  const double residual = (mat_ - mat_.transpose()).cwiseAbs().maxCoeff();
  if (residual > 1e-12 * scale)
    throw std::invalid_argument("matrix is not symmetric (residual " + std::to_string(residual) +
                                ")");
  mat_ = 0.5 * (mat_ + mat_.transpose()).eval();
}

SymEndo::SymEndo(const LinearMap& map) : SymEndo(map.algebra(), map.mat()) {}

SymEndo SymEndo::identity(const AlgebraPtr& algebra) {
  return SymEndo(algebra, Eigen::MatrixXd::Identity(algebra->dim(), algebra->dim()));
}

SymEndo SymEndo::zero(const AlgebraPtr& algebra) {
  return SymEndo(algebra, Eigen::MatrixXd::Zero(algebra->dim(), algebra->dim()));
}

Element SymEndo::apply(const Element& x) const {
  require_same_algebra(algebra_, x.algebra());
  return Element(algebra_, mat_ * x.coords());
}

SymEndo SymEndo::operator+(const SymEndo& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return SymEndo(algebra_, mat_ + other.mat_);
}

SymEndo SymEndo::operator-(const SymEndo& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return SymEndo(algebra_, mat_ - other.mat_);
}

SymEndo SymEndo::operator-() const { return SymEndo(algebra_, -mat_); }

SymEndo SymEndo::operator*(double s) const { return SymEndo(algebra_, s * mat_); }

LinearMap operator*(const SymEndo& a, const SymEndo& b) {
  return LinearMap(a) * LinearMap(b);
}
LinearMap operator*(const LinearMap& a, const SymEndo& b) { return a * LinearMap(b); }
LinearMap operator*(const SymEndo& a, const LinearMap& b) { return LinearMap(a) * b; }

SymEndo lmap(const Element& x) {
  return SymEndo(x.algebra(), x.algebra()->multiplication_matrix(x.coords()));
}

SymEndo pmap(const Element& x) {
  const Eigen::MatrixXd l = x.algebra()->multiplication_matrix(x.coords());
  const Eigen::MatrixXd l2 = x.algebra()->multiplication_matrix(l * x.coords());
  return SymEndo(x.algebra(), 2.0 * l * l - l2);
}

}  // namespace symcone
