#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "symcone/kmatrix.hpp"

namespace symcone {

enum class AlgebraKind { SymReal, HermComplex, HermQuaternion, SpinFactor, Albert };

/// Short CLI name: sym, herm, quat, spin, albert.
std::string_view short_name(AlgebraKind kind);
std::string_view long_name(AlgebraKind kind);
/// Accepts either the short or the long name.
AlgebraKind parse_kind(std::string_view name);

class Element;
class JordanAlgebra;
using AlgebraPtr = std::shared_ptr<const JordanAlgebra>;

/// Immutable descriptor of a simple Euclidean Jordan algebra together with an
/// orthonormal basis for <x,y> = tr(x o y) and the structure constants of the
/// Jordan product in that basis.
///
/// Matrix kinds (SymReal, HermComplex, HermQuaternion, Albert) are modelled as
/// Hermitian r x r matrices over R, C, H, O with x o y = (xy + yx)/2. The basis
/// is ordered E_11, ..., E_rr followed, for each i < j in lexicographic order,
/// by the d off-diagonal units (u_c at (i,j), conj(u_c) at (j,i)) / sqrt 2.
///
/// SpinFactor is R x E with (x0, x)(y0, y) = (x0 y0 + x.y, x0 y + y0 x) and
/// tr(x0, x) = 2 x0; its basis is (1, 0)/sqrt 2 followed by (0, u_k)/sqrt 2.
class JordanAlgebra : public std::enable_shared_from_this<JordanAlgebra> {
 public:
  static AlgebraPtr make(AlgebraKind kind, int rank,
                         std::optional<int> spin_ambient_dim = std::nullopt);

  AlgebraKind kind() const { return kind_; }
  int rank() const { return rank_; }
  /// Peirce constant d.
  int peirce() const { return peirce_; }
  double half_peirce() const { return 0.5 * peirce_; }
  int dim() const { return dim_; }
  /// dim E for SpinFactor, empty otherwise.
  std::optional<int> spin_ambient_dim() const { return ambient_; }
  bool is_matrix_kind() const { return kind_ != AlgebraKind::SpinFactor; }
  /// Width of the matrix entries (1, 2, 4, 8) for matrix kinds.
  int entry_width() const { return width_; }

  /// c[i][j][k] with e_i o e_j = sum_k c[i][j][k] e_k.
  double structure(int i, int j, int k) const {
    return structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  }

  /// Matrix of x -> x o y in the basis, as an n x n array.
  Eigen::MatrixXd multiplication_matrix(const Eigen::VectorXd& x) const;

  const Eigen::VectorXd& identity_coords() const { return identity_; }
  Element identity() const;
  Element zero() const;
  Element basis(int i) const;
  Element element(Eigen::VectorXd coords) const;
  std::string basis_label(int i) const;

  /// Matrix kinds only. The input must be Hermitian.
  Element from_matrix(const KMatrix& m) const;
  KMatrix to_matrix(const Element& x) const;

  /// SpinFactor only: build from / split into the pair (x0, x).
  Element spin(double x0, std::span<const double> vec) const;
  std::pair<double, Eigen::VectorXd> spin_components(const Element& x) const;

  /// {kind, r, d, n, basis labels, nonzero structure constants}.
  nlohmann::json to_json() const;

 private:
  JordanAlgebra(AlgebraKind kind, int rank, int peirce, int dim,
                std::optional<int> ambient, int width);
  void build_matrix_kind();
  void build_spin();
  void finalize();

  AlgebraKind kind_;
  int rank_;
  int peirce_;
  int dim_;
  std::optional<int> ambient_;
  int width_;
  std::vector<double> structure_;
  // Column i holds L(e_i) flattened column-major, so vec L(x) = lstack_ * x.
  Eigen::MatrixXd lstack_;
  Eigen::VectorXd identity_;
  // Matrix kinds: basis index -> (row, col, unit); diagonal entries use unit -1.
  std::vector<std::array<int, 3>> slots_;
};

AlgebraPtr make_algebra(AlgebraKind kind, int rank,
                        std::optional<int> spin_ambient_dim = std::nullopt);

/// n = r + d r (r - 1) / 2.
int algebra_dimension(int rank, int peirce);

}  // namespace symcone
