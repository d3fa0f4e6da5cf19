#pragma once

#include <array>
#include <span>

namespace symcone {

/// One of the four normed real division algebras R, C, H, O, built by
/// Cayley-Dickson doubling. Elements are plain coordinate arrays of length
/// dim() over the units 1 = u_0, u_1, ..., u_{dim-1}.
///
/// Only the multiplication table is stored: u_i u_j = sign(i,j) u_{index(i,j)}.
/// The doubling rule is (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
/// For dim() = 4, the pair (z1, z2) of complex halves corresponds to
/// z1 + z2 l with l z = conj(z) l.
class CompositionAlgebra {
 public:
  static constexpr int kMaxDim = 8;

  /// dim must be 1, 2, 4 or 8.
  static const CompositionAlgebra& of_dimension(int dim);

  int dim() const { return dim_; }
  int index(int i, int j) const { return index_[i][j]; }
  double sign(int i, int j) const { return sign_[i][j]; }

  void multiply(std::span<const double> a, std::span<const double> b,
                std::span<double> out) const;

  static void conjugate(std::span<const double> a, std::span<double> out);

 private:
  explicit CompositionAlgebra(int dim);

  int dim_;
  std::array<std::array<int, kMaxDim>, kMaxDim> index_{};
  std::array<std::array<double, kMaxDim>, kMaxDim> sign_{};
};

}  // namespace symcone
