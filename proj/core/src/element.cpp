#include "symcone/element.hpp"

#include <vector>

#include "symcone/errors.hpp"

namespace symcone {

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw AlgebraMismatch("operands belong to different Jordan algebras");
}

Element::Element(AlgebraPtr algebra, Eigen::VectorXd coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw AlgebraMismatch("element without an algebra");
  if (coords_.size() != algebra_->dim())
    throw AlgebraMismatch("coordinate vector length does not match the algebra dimension");
}

Element Element::operator+(const Element& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return Element(algebra_, coords_ + other.coords_);
}

Element Element::operator-(const Element& other) const {
  require_same_algebra(algebra_, other.algebra_);
  return Element(algebra_, coords_ - other.coords_);
}

Element Element::operator-() const { return Element(algebra_, -coords_); }

Element Element::operator*(double s) const { return Element(algebra_, s * coords_); }

Element Element::square() const { return product(*this, *this); }

Element Element::power(int k) const {
  if (k < 0) throw std::invalid_argument("negative powers are not supported");
  Element out = algebra_->identity();
  for (int i = 0; i < k; ++i) out = product(out, *this);
  return out;
}

Element product(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return Element(x.algebra(), x.algebra()->multiplication_matrix(x.coords()) * y.coords());
}

double inner(const Element& x, const Element& y) {
  require_same_algebra(x.algebra(), y.algebra());
  return x.coords().dot(y.coords());
}

double trace(const Element& x) { return x.coords().dot(x.algebra()->identity_coords()); }

double determinant(const Element& x) {
  const int r = x.algebra()->rank();
  std::vector<double> power_traces(r + 1, 0.0);
  Element p = x;
  for (int k = 1; k <= r; ++k) {
    power_traces[k] = trace(p);
    if (k < r) p = product(p, x);
  }
  std::vector<double> elem(r + 1, 0.0);
  elem[0] = 1.0;
  for (int k = 1; k <= r; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += ((i % 2) ? 1.0 : -1.0) * elem[k - i] * power_traces[i];
    elem[k] = acc / k;
  }
  return elem[r];
}

}  // namespace symcone
