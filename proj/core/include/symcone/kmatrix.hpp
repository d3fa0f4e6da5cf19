#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "symcone/composition.hpp"

namespace symcone {

/// Square r x r matrix with entries in R, C, H or O (entry width k = 1, 2, 4, 8).
/// Used as the concrete model behind the matrix kinds of Jordan algebra and
/// by the samplers.
class KMatrix {
 public:
  KMatrix(int rows, int width);

  int rows() const { return rows_; }
  int width() const { return width_; }

  std::span<double> entry(int i, int j) {
    return {data_.data() + offset(i, j), static_cast<std::size_t>(width_)};
  }
  std::span<const double> entry(int i, int j) const {
    return {data_.data() + offset(i, j), static_cast<std::size_t>(width_)};
  }

  /// Real part of the (i,j) entry.
  double re(int i, int j) const { return data_[offset(i, j)]; }

  KMatrix adjoint() const;
  KMatrix operator+(const KMatrix& other) const;
  KMatrix operator-(const KMatrix& other) const;
  KMatrix operator*(double s) const;
  /// Plain matrix product, entrywise via the composition algebra table.
  KMatrix operator*(const KMatrix& other) const;

  /// (AB + BA)/2.
  static KMatrix jordan(const KMatrix& a, const KMatrix& b);

  double max_abs_diff(const KMatrix& other) const;

  /// Complex representation: identity for width 1 and 2; for width 4 each
  /// quaternion z1 + z2 l becomes the block [[z1, -z2], [conj z2, conj z1]],
  /// so the result is 2r x 2r. Multiplicative for widths up to 4.
  Eigen::MatrixXcd complex_embedding() const;
  /// Inverse of complex_embedding for a matrix in its image.
  static KMatrix from_complex_embedding(const Eigen::MatrixXcd& m, int width);

 private:
  std::size_t offset(int i, int j) const {
    return (static_cast<std::size_t>(i) * rows_ + j) * width_;
  }

  int rows_;
  int width_;
  std::vector<double> data_;
};

}  // namespace symcone
