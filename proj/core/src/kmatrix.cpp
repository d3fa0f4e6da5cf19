#include "symcone/kmatrix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace symcone {

KMatrix::KMatrix(int rows, int width)
    : rows_(rows), width_(width),
      data_(static_cast<std::size_t>(rows) * rows * width, 0.0) {
  (void)CompositionAlgebra::of_dimension(width);
}

KMatrix KMatrix::adjoint() const {
  KMatrix out(rows_, width_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j)
      CompositionAlgebra::conjugate(entry(j, i), out.entry(i, j));
  return out;
}

KMatrix KMatrix::operator+(const KMatrix& other) const {
  KMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
  return out;
}

KMatrix KMatrix::operator-(const KMatrix& other) const {
  KMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
  return out;
}

KMatrix KMatrix::operator*(double s) const {
  KMatrix out(*this);
  for (double& v : out.data_) v *= s;
  return out;
}

KMatrix KMatrix::operator*(const KMatrix& other) const {
  if (rows_ != other.rows_ || width_ != other.width_)
    throw std::invalid_argument("KMatrix product: shape mismatch");
  const auto& table = CompositionAlgebra::of_dimension(width_);
  KMatrix out(rows_, width_);
  std::array<double, CompositionAlgebra::kMaxDim> tmp{};
  const std::span<double> t(tmp.data(), static_cast<std::size_t>(width_));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < rows_; ++j) {
      auto acc = out.entry(i, j);
      for (int l = 0; l < rows_; ++l) {
        table.multiply(entry(i, l), other.entry(l, j), t);
        for (int c = 0; c < width_; ++c) acc[c] += t[c];
      }
    }
  }
  return out;
}

KMatrix KMatrix::jordan(const KMatrix& a, const KMatrix& b) {
  return (a * b + b * a) * 0.5;
}

double KMatrix::max_abs_diff(const KMatrix& other) const {
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

Eigen::MatrixXcd KMatrix::complex_embedding() const {
  using C = std::complex<double>;
  if (width_ <= 2) {
    Eigen::MatrixXcd m(rows_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < rows_; ++j) {
        const auto e = entry(i, j);
        m(i, j) = C(e[0], width_ == 2 ? e[1] : 0.0);
      }
    return m;
  }
  if (width_ != 4)
    throw std::invalid_argument("complex embedding is only defined up to quaternions");
  Eigen::MatrixXcd m(2 * rows_, 2 * rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) {
      const auto e = entry(i, j);
      const C z1(e[0], e[1]), z2(e[2], e[3]);
      m(2 * i, 2 * j) = z1;
      m(2 * i, 2 * j + 1) = -z2;
      m(2 * i + 1, 2 * j) = std::conj(z2);
      m(2 * i + 1, 2 * j + 1) = std::conj(z1);
    }
  return m;
}

KMatrix KMatrix::from_complex_embedding(const Eigen::MatrixXcd& m, int width) {
  if (width <= 2) {
    KMatrix out(static_cast<int>(m.rows()), width);
    for (int i = 0; i < out.rows(); ++i)
      for (int j = 0; j < out.rows(); ++j) {
        auto e = out.entry(i, j);
        e[0] = m(i, j).real();
        if (width == 2) e[1] = m(i, j).imag();
      }
    return out;
  }
  if (width != 4)
    throw std::invalid_argument("complex embedding is only defined up to quaternions");
  KMatrix out(static_cast<int>(m.rows()) / 2, 4);
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.rows(); ++j) {
      const auto z1 = m(2 * i, 2 * j);
      const auto z2 = -m(2 * i, 2 * j + 1);
      auto e = out.entry(i, j);
      e[0] = z1.real();
      e[1] = z1.imag();
      e[2] = z2.real();
      e[3] = z2.imag();
    }
  return out;
}

}  // namespace symcone
