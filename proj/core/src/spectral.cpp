#include "symcone/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "symcone/errors.hpp"

namespace symcone {
namespace {

bool uses_complex_model(const JordanAlgebra& alg) {
  return alg.is_matrix_kind() && alg.kind() != AlgebraKind::Albert;
}

// Characteristic polynomial coefficients e_1..e_r from power traces.
std::vector<double> elementary_symmetric(const Element& x) {
  const int r = x.algebra()->rank();
  std::vector<double> p(r + 1, 0.0), e(r + 1, 0.0);
  Element pw = x;
  for (int k = 1; k <= r; ++k) {
    p[k] = trace(pw);
    if (k < r) pw = product(pw, x);
  }
  e[0] = 1.0;
  for (int k = 1; k <= r; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) acc += ((i % 2) ? 1.0 : -1.0) * e[k - i] * p[i];
    e[k] = acc / k;
  }
  return e;
}

// Real roots of t^3 - e1 t^2 + e2 t - e3 (all real for a Euclidean Jordan algebra).
std::vector<double> cubic_roots(double e1, double e2, double e3) {
  const double a = -e1, b = e2, c = -e3;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double shift = -a / 3.0;
  const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c)});
  std::vector<double> roots;
  if (std::abs(p) < 1e-14 * scale * scale) {
    const double y = std::cbrt(-q);
    roots = {y + shift, y + shift, y + shift};
  } else {
    const double m = 2.0 * std::sqrt(std::max(0.0, -p / 3.0));
    double arg = (3.0 * q / (2.0 * p)) * std::sqrt(std::max(0.0, -3.0 / p));
    arg = std::clamp(arg, -1.0, 1.0);
    const double phi = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
      roots.push_back(m * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> complex_model_values(const Element& x) {
  const auto& alg = *x.algebra();
  const Eigen::MatrixXcd a = alg.to_matrix(x).complex_embedding();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  const int stride = alg.entry_width() == 4 ? 2 : 1;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); i += stride)
    out.push_back(eig.eigenvalues()[i]);
  return out;
}

// Lagrange interpolation on clusters of the spectral values; used where no
// associative matrix model is available.
Element interpolate(const Element& x, const std::vector<double>& values,
                    const std::function<double(double)>& f) {
  const double tol = 1e-9 * (1.0 + std::abs(values.back()) + std::abs(values.front()));
  std::vector<double> distinct;
  for (double v : values)
    if (distinct.empty() || v - distinct.back() > tol) distinct.push_back(v);
  const AlgebraPtr& alg = x.algebra();
  Element out = alg->zero();
  for (std::size_t k = 0; k < distinct.size(); ++k) {
    Element idem = alg->identity();
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (j == k) continue;
      idem = product(idem, x - alg->identity() * distinct[j]) * (1.0 / (distinct[k] - distinct[j]));
    }
    out = out + idem * f(distinct[k]);
  }
  return out;
}

}  // namespace

std::vector<double> spectral_values(const Element& x) {
  const auto& alg = *x.algebra();
  if (uses_complex_model(alg)) return complex_model_values(x);
  if (alg.kind() == AlgebraKind::SpinFactor) {
    const auto [x0, v] = alg.spin_components(x);
    const double nv = v.norm();
    return {x0 - nv, x0 + nv};
  }
  const auto e = elementary_symmetric(x);
  return cubic_roots(e[1], e[2], e[3]);
}

double min_spectral_value(const Element& x) { return spectral_values(x).front(); }

bool in_cone(const Element& x, double tol) { return min_spectral_value(x) > tol; }

Element spectral_apply(const Element& x, const std::function<double(double)>& f) {
  const auto& alg = *x.algebra();
  if (uses_complex_model(alg)) {
    const int width = alg.entry_width();
    const Eigen::MatrixXcd a = alg.to_matrix(x).complex_embedding();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(a);
    Eigen::VectorXcd fv(eig.eigenvalues().size());
    for (Eigen::Index i = 0; i < fv.size(); ++i) fv[i] = f(eig.eigenvalues()[i]);
    const Eigen::MatrixXcd fa =
        eig.eigenvectors() * fv.asDiagonal() * eig.eigenvectors().adjoint();
    const Eigen::MatrixXcd herm = 0.5 * (fa + fa.adjoint());
    return alg.from_matrix(KMatrix::from_complex_embedding(herm, width));
  }
  if (alg.kind() == AlgebraKind::SpinFactor) {
    auto [x0, v] = alg.spin_components(x);
    const double nv = v.norm();
    Eigen::VectorXd u = Eigen::VectorXd::Zero(v.size());
    if (nv > 0.0) u = v / nv; else u[0] = 1.0;
    const double f1 = f(x0 + nv), f2 = f(x0 - nv);
    const Eigen::VectorXd vec = 0.5 * (f1 - f2) * u;
    return alg.spin(0.5 * (f1 + f2), std::span<const double>(vec.data(), vec.size()));
  }
  return interpolate(x, spectral_values(x), f);
}

Element cone_sqrt(const Element& x) {
  const auto values = spectral_values(x);
  const double scale = std::max(1.0, std::abs(values.back()));
  if (values.front() < -1e-12 * scale) throw DomainError("cone_sqrt: element is not in the cone");
  return spectral_apply(x, [](double t) { return std::sqrt(std::max(t, 0.0)); });
}

Element inverse(const Element& x) {
  const auto values = spectral_values(x);
  for (double v : values)
    if (v == 0.0) throw DomainError("inverse: element is not invertible");
  return spectral_apply(x, [](double t) { return 1.0 / t; });
}

}  // namespace symcone
