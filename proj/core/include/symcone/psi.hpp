#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "symcone/endo.hpp"
#include "symcone/frame.hpp"

namespace symcone {

/// The symmetric endomorphism Psi of F = L_s(V) with Psi(y (x) y) = P(y),
/// stored as a dense N x N matrix, N = n(n+1)/2, over the orthonormal basis
///   f_l = b_i (x) b_i                          (i = j)
///   f_l = (b_i (x) b_j + b_j (x) b_i) / sqrt 2  (i < j)
/// built from a Peirce-adapted element basis b_1..b_n. F carries the inner
/// product Tr(fg).
class PsiOperator {
 public:
  PsiOperator(AlgebraPtr algebra, PeirceBasis peirce, Eigen::MatrixXd matrix);

  const AlgebraPtr& algebra() const { return algebra_; }
  const PeirceBasis& peirce() const { return peirce_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  int size() const { return static_cast<int>(matrix_.rows()); }
  /// (i, j), i <= j, indices into peirce().flattened for each f_l.
  const std::vector<std::pair<int, int>>& basis_pairs() const { return pairs_; }

  Eigen::VectorXd to_f_coords(const SymEndo& f) const;
  SymEndo from_f_coords(const Eigen::VectorXd& v) const;
  SymEndo basis_element(int l) const;
  SymEndo apply(const SymEndo& f) const;

  double symmetry_residual() const;

 private:
  AlgebraPtr algebra_;
  PeirceBasis peirce_;
  Eigen::MatrixXd change_;  // columns: Peirce basis in algebra coordinates
  Eigen::MatrixXd matrix_;
  std::vector<std::pair<int, int>> pairs_;
};

/// Psi over the Peirce basis of the standard frame.
PsiOperator build_psi(const AlgebraPtr& algebra);
PsiOperator build_psi(const AlgebraPtr& algebra, const PeirceBasis& peirce);

/// Projectors onto the eigenspaces F1 (eigenvalue 1) and F2 (eigenvalue -d/2).
struct SpectralSplit {
  Eigen::MatrixXd proj1;
  Eigen::MatrixXd proj2;
  int dim1 = 0;
  int dim2 = 0;
  /// Largest distance of a numeric eigenvalue of Psi to {1, -d/2}.
  double spectrum_residual = 0.0;
  /// Numeric multiplicities of the eigenvalue clusters at 1 and -d/2.
  int numeric_mult1 = 0;
  int numeric_mult2 = 0;
};

/// proj1 = (Psi + d' I)/(1 + d'), proj2 = (I - Psi)/(1 + d'). Throws
/// StructuralFailure if an eigenvalue is off {1, -d'} by more than 1e-9, if a
/// projector trace is more than 1e-6 from an integer, or if the numeric
/// multiplicities disagree with the projector ranks.
SpectralSplit spectral_split(const PsiOperator& psi);

struct SplitDims {
  long dim1;
  long dim2;
};

/// Closed-form dim F1, dim F2 for rank r and Peirce constant d. Throws
/// std::invalid_argument for a pair that is not realised by a simple
/// Euclidean Jordan algebra or that gives a non-integer dimension.
SplitDims dims_closed_form(int rank, int peirce);

double trace_psi(const PsiOperator& psi);
/// r + r(r-1) d' [2 + (r-1) d'].
double trace_psi_closed(int rank, int peirce);

/// One row of the case table: all basis elements f_l of one type.
struct CaseEntry {
  std::string label;  // A1, A2, B1..B6
  long count = 0;
  double value = 0.0;  // mean of C_l = Tr[Psi(f_l) f_l] over the class
  double min_value = 0.0;
  double max_value = 0.0;
  double expected_value = 0.0;
  long expected_count = 0;
};

/// Classifies every f_l built from `peirce` and evaluates C_l with `psi`.
/// Labels follow the Peirce block pattern of (b_i, b_j): A1/A2 for i = j on
/// diagonal/off-diagonal blocks; B1 two idempotents; B2/B3 an idempotent
/// with an off-diagonal block that does/does not contain its index; B4 same
/// off-diagonal block; B5 blocks sharing one index; B6 disjoint blocks.
std::map<std::string, CaseEntry> case_table(const PsiOperator& psi, const PeirceBasis& peirce);
std::map<std::string, CaseEntry> case_table(const PsiOperator& psi);

double case_expected_value(const std::string& label);
long case_expected_count(const std::string& label, int rank, int peirce);

nlohmann::json to_json(const std::map<std::string, CaseEntry>& table);

}  // namespace symcone
