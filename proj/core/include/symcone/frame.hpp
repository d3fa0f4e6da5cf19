#pragma once

#include <map>
#include <utility>
#include <vector>

#include "symcone/element.hpp"

namespace symcone {

/// Complete system of orthogonal primitive idempotents c_1, ..., c_r.
struct JordanFrame {
  std::vector<Element> idempotents;
};

/// Orthonormal basis adapted to V = sum_{s <= t} V_st for a fixed frame.
/// Block indices are zero-based: (s, s) holds c_s, (s, t) with s < t holds
/// d elements spanning V(c_s, 1/2) n V(c_t, 1/2).
struct PeirceBasis {
  std::map<std::pair<int, int>, std::vector<Element>> blocks;
  /// c_1..c_r first, then the off-diagonal blocks in lexicographic order.
  std::vector<Element> flattened;
  std::vector<std::pair<int, int>> labels;

  int size() const { return static_cast<int>(flattened.size()); }
  /// Columns are the coordinates of the flattened basis: an orthogonal n x n matrix.
  Eigen::MatrixXd change_of_basis() const;
};

/// Diagonal unit idempotents for matrix kinds; (1, +-u_1)/2 for the spin factor.
JordanFrame standard_frame(const AlgebraPtr& algebra);

/// Throws InvalidFrame unless c_s o c_s = c_s, c_s o c_t = 0, tr c_s = 1 and
/// sum c_s = e, each to 1e-10.
void validate_frame(const JordanFrame& frame);

/// Simultaneous eigenspaces of the commuting family {L(c_s)}, then
/// Gram-Schmidt inside each block starting from the projected algebra basis.
/// For the standard frame of a matrix kind this reproduces the algebra basis.
PeirceBasis peirce_basis(const AlgebraPtr& algebra, const JordanFrame& frame);

}  // namespace symcone
