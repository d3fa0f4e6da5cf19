#include "symcone/frame.hpp"

#include <cmath>
#include <string>

#include "symcone/endo.hpp"
#include "symcone/errors.hpp"

namespace symcone {

Eigen::MatrixXd PeirceBasis::change_of_basis() const {
  const int n = size();
  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) q.col(i) = flattened[i].coords();
  return q;
}

JordanFrame standard_frame(const AlgebraPtr& algebra) {
  JordanFrame frame;
  if (algebra->kind() == AlgebraKind::SpinFactor) {
    std::vector<double> u(algebra->dim() - 1, 0.0);
    u[0] = 0.5;
    frame.idempotents.push_back(algebra->spin(0.5, u));
    u[0] = -0.5;
    frame.idempotents.push_back(algebra->spin(0.5, u));
    return frame;
  }
  for (int s = 0; s < algebra->rank(); ++s) frame.idempotents.push_back(algebra->basis(s));
  return frame;
}

void validate_frame(const JordanFrame& frame) {
  constexpr double kTol = 1e-10;
  if (frame.idempotents.empty()) throw InvalidFrame("empty frame");
  const AlgebraPtr& alg = frame.idempotents.front().algebra();
  if (static_cast<int>(frame.idempotents.size()) != alg->rank())
    throw InvalidFrame("a Jordan frame has exactly r idempotents");
  Element sum = alg->zero();
  for (std::size_t s = 0; s < frame.idempotents.size(); ++s) {
    const Element& c = frame.idempotents[s];
    require_same_algebra(alg, c.algebra());
    if ((c.square() - c).norm() > kTol)
      throw InvalidFrame("c_" + std::to_string(s + 1) + " is not idempotent");
    if (std::abs(trace(c) - 1.0) > kTol)
      throw InvalidFrame("c_" + std::to_string(s + 1) + " is not primitive (trace != 1)");
    for (std::size_t t = s + 1; t < frame.idempotents.size(); ++t)
      if (product(c, frame.idempotents[t]).norm() > kTol)
        throw InvalidFrame("frame idempotents are not orthogonal");
    sum = sum + c;
  }
  if ((sum - alg->identity()).norm() > kTol) throw InvalidFrame("frame does not sum to e");
}

PeirceBasis peirce_basis(const AlgebraPtr& algebra, const JordanFrame& frame) {
  validate_frame(frame);
  require_same_algebra(algebra, frame.idempotents.front().algebra());
  const int n = algebra->dim();
  const int r = algebra->rank();
  const int d = algebra->peirce();

  // Weights 4^s make every (w_s + w_t)/2 distinct across pairs s <= t.
  std::vector<double> weight(r);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int s = 0; s < r; ++s) {
    weight[s] = std::pow(4.0, s);
    m += weight[s] * lmap(frame.idempotents[s]).mat();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  const double tol = 1e-8 * weight.back();

  std::map<std::pair<int, int>, std::vector<int>> columns;
  for (int i = 0; i < n; ++i) {
    const double lambda = eig.eigenvalues()[i];
    bool matched = false;
    for (int s = 0; s < r && !matched; ++s)
      for (int t = s; t < r && !matched; ++t)
        if (std::abs(lambda - 0.5 * (weight[s] + weight[t])) < tol) {
          columns[{s, t}].push_back(i);
          matched = true;
        }
    if (!matched)
      throw StructuralFailure("eigenvalue " + std::to_string(lambda) +
                              " of the frame operator matches no Peirce block");
  }

  PeirceBasis basis;
  for (int s = 0; s < r; ++s) {
    if (columns[{s, s}].size() != 1)
      throw StructuralFailure("diagonal Peirce space V_ss is not one-dimensional");
    basis.blocks[{s, s}] = {frame.idempotents[s]};
  }
  for (int s = 0; s < r; ++s) {
    for (int t = s + 1; t < r; ++t) {
      const auto& cols = columns[{s, t}];
      if (static_cast<int>(cols.size()) != d)
        throw StructuralFailure("off-diagonal Peirce space has dimension " +
                                std::to_string(cols.size()) + ", expected " + std::to_string(d));
      Eigen::MatrixXd u(n, d);
      for (int k = 0; k < d; ++k) u.col(k) = eig.eigenvectors().col(cols[k]);
      const Eigen::MatrixXd proj = u * u.transpose();

      // Greedy Gram-Schmidt over the projected algebra basis.
      std::vector<Eigen::VectorXd> chosen;
      std::vector<bool> used(n, false);
      while (static_cast<int>(chosen.size()) < d) {
        int best = -1;
        double best_norm = 0.0;
        Eigen::VectorXd best_vec;
        for (int i = 0; i < n; ++i) {
          if (used[i]) continue;
          Eigen::VectorXd v = proj.col(i);
          for (const auto& c : chosen) v -= c.dot(v) * c;
          const double nv = v.norm();
          if (nv > best_norm + 1e-12) {
            best = i;
            best_norm = nv;
            best_vec = v;
          }
        }
        if (best < 0 || best_norm < 1e-8)
          throw StructuralFailure("could not complete a Peirce block basis");
        used[best] = true;
        chosen.push_back(best_vec / best_norm);
      }
      auto& block = basis.blocks[{s, t}];
      for (auto& v : chosen) block.push_back(algebra->element(v));
    }
  }

  for (int s = 0; s < r; ++s) {
    basis.flattened.push_back(basis.blocks[{s, s}].front());
    basis.labels.emplace_back(s, s);
  }
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t)
      for (const auto& x : basis.blocks[{s, t}]) {
        basis.flattened.push_back(x);
        basis.labels.emplace_back(s, t);
      }
  return basis;
}

}  // namespace symcone
