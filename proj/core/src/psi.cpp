#include "symcone/psi.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "symcone/errors.hpp"

namespace symcone {
namespace {

constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kInvSqrt2 = 0.70710678118654752440;

std::vector<std::pair<int, int>> make_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, i);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

// Coordinates over f_l of a symmetric matrix given in the element basis b.
Eigen::VectorXd f_coords(const Eigen::MatrixXd& m, const std::vector<std::pair<int, int>>& pairs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(pairs.size()));
  for (std::size_t l = 0; l < pairs.size(); ++l) {
    const auto [i, j] = pairs[l];
    v[l] = i == j ? m(i, i) : kInvSqrt2 * (m(i, j) + m(j, i));
  }
  return v;
}

std::string classify(std::pair<int, int> bi, std::pair<int, int> bj, bool same) {
  const bool di = bi.first == bi.second;
  const bool dj = bj.first == bj.second;
  if (same) return di ? "A1" : "A2";
  if (di && dj) return "B1";
  if (di || dj) {
    const int s = di ? bi.first : bj.first;
    const auto blk = di ? bj : bi;
    return (s == blk.first || s == blk.second) ? "B2" : "B3";
  }
  if (bi == bj) return "B4";
  int shared = 0;
  for (int a : {bi.first, bi.second})
    for (int b : {bj.first, bj.second}) shared += a == b;
  if (shared == 1) return "B5";
  if (shared == 0) return "B6";
  throw StructuralFailure("case table: basis pair not attributable to a Peirce block pattern");
}

}  // namespace

PsiOperator::PsiOperator(AlgebraPtr algebra, PeirceBasis peirce, Eigen::MatrixXd matrix)
    : algebra_(std::move(algebra)), peirce_(std::move(peirce)),
      change_(peirce_.change_of_basis()), matrix_(std::move(matrix)),
      pairs_(make_pairs(algebra_->dim())) {
  const auto n = static_cast<Eigen::Index>(pairs_.size());
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw std::invalid_argument("Psi matrix has the wrong size");
}

Eigen::VectorXd PsiOperator::to_f_coords(const SymEndo& f) const {
  require_same_algebra(algebra_, f.algebra());
  return f_coords(change_.transpose() * f.mat() * change_, pairs_);
}

SymEndo PsiOperator::from_f_coords(const Eigen::VectorXd& v) const {
  const int n = algebra_->dim();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t l = 0; l < pairs_.size(); ++l) {
    const auto [i, j] = pairs_[l];
    if (i == j) {
      m(i, i) = v[l];
    } else {
      m(i, j) = kInvSqrt2 * v[l];
      m(j, i) = kInvSqrt2 * v[l];
    }
  }
  return SymEndo(algebra_, change_ * m * change_.transpose());
}

SymEndo PsiOperator::basis_element(int l) const {
  return from_f_coords(Eigen::VectorXd::Unit(size(), l));
}

SymEndo PsiOperator::apply(const SymEndo& f) const {
  return from_f_coords(matrix_ * to_f_coords(f));
}

double PsiOperator::symmetry_residual() const {
  return (matrix_ - matrix_.transpose()).cwiseAbs().maxCoeff();
}

PsiOperator build_psi(const AlgebraPtr& algebra) {
  return build_psi(algebra, peirce_basis(algebra, standard_frame(algebra)));
}

PsiOperator build_psi(const AlgebraPtr& algebra, const PeirceBasis& peirce) {
  const int n = algebra->dim();
  if (peirce.size() != n) throw std::invalid_argument("Peirce basis has the wrong size");
  const Eigen::MatrixXd q = peirce.change_of_basis();
  const Eigen::MatrixXd qt = q.transpose();

  // L of each Peirce basis element, in Peirce coordinates.
  std::vector<Eigen::MatrixXd> l(n);
  for (int i = 0; i < n; ++i) l[i] = qt * algebra->multiplication_matrix(q.col(i)) * q;

  const auto pairs = make_pairs(n);
  const auto big_n = static_cast<Eigen::Index>(pairs.size());
  Eigen::MatrixXd matrix(big_n, big_n);
  for (Eigen::Index col = 0; col < big_n; ++col) {
    const auto [i, j] = pairs[col];
    // b_i o b_j expressed in Peirce coordinates is column j of L(b_i).
    const Eigen::VectorXd bij = l[i].col(j);
    const Eigen::MatrixXd l_bij = qt * algebra->multiplication_matrix(q * bij) * q;
    Eigen::MatrixXd image;
    if (i == j) {
      image = 2.0 * l[i] * l[i] - l_bij;  // P(b_i)
    } else {
      // Psi((b_i (x) b_j + b_j (x) b_i)/sqrt 2) = sqrt 2 [L_i L_j + L_j L_i - L(b_i b_j)]
      image = kSqrt2 * (l[i] * l[j] + l[j] * l[i] - l_bij);
    }
    matrix.col(col) = f_coords(image, pairs);
  }
  return PsiOperator(algebra, peirce, std::move(matrix));
}

SpectralSplit spectral_split(const PsiOperator& psi) {
  const double dp = psi.algebra()->half_peirce();
  const auto big_n = psi.size();
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(big_n, big_n);

  SpectralSplit split;
  split.proj1 = (psi.matrix() + dp * id) / (1.0 + dp);
  split.proj2 = (id - psi.matrix()) / (1.0 + dp);

  const Eigen::MatrixXd sym = 0.5 * (psi.matrix() + psi.matrix().transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym, Eigen::EigenvaluesOnly);
  for (Eigen::Index i = 0; i < big_n; ++i) {
    const double lambda = eig.eigenvalues()[i];
    const double to1 = std::abs(lambda - 1.0);
    const double to2 = std::abs(lambda + dp);
    split.spectrum_residual = std::max(split.spectrum_residual, std::min(to1, to2));
    if (to1 <= 1e-9) ++split.numeric_mult1;
    else if (to2 <= 1e-9) ++split.numeric_mult2;
    else
      throw StructuralFailure("Psi has eigenvalue " + std::to_string(lambda) +
                              " outside {1, -d/2}");
  }

  auto rounded = [](double t, const char* which) {
    const double r = std::round(t);
    if (std::abs(t - r) > 1e-6)
      throw StructuralFailure(std::string("trace of ") + which + " is not an integer: " +
                              std::to_string(t));
    return static_cast<int>(r);
  };
  split.dim1 = rounded(split.proj1.trace(), "proj1");
  split.dim2 = rounded(split.proj2.trace(), "proj2");
  if (split.dim1 != split.numeric_mult1 || split.dim2 != split.numeric_mult2)
    throw StructuralFailure("projector ranks disagree with the numeric eigenvalue multiplicities");
  return split;
}

SplitDims dims_closed_form(int rank, int peirce) {
  const long r = rank, d = peirce;
  if (r < 1 || d < 1) throw std::invalid_argument("rank and Peirce constant must be positive");
  const bool realisable = r <= 2 || d == 1 || d == 2 || d == 4 || (d == 8 && r == 3);
  if (!realisable)
    throw std::invalid_argument("no simple Euclidean Jordan algebra has rank " +
                                std::to_string(r) + " and Peirce constant " + std::to_string(d));
  // dim F2 = r(r-1)/2 * (1 + d'(2r-3) + d'^2 (r-1)(r-2)) / (1 + d'), cleared of halves.
  const long num = r * (r - 1) * (4 + 2 * d * (2 * r - 3) + d * d * (r - 1) * (r - 2));
  const long den = 4 * (2 + d);
  if (num % den != 0)
    throw std::invalid_argument("closed-form dim F2 is not an integer for this (r, d)");
  const long n = r + d * r * (r - 1) / 2;
  const long total = n * (n + 1) / 2;
  return {total - num / den, num / den};
}

double trace_psi(const PsiOperator& psi) { return psi.matrix().trace(); }

double trace_psi_closed(int rank, int peirce) {
  const double r = rank, dp = 0.5 * peirce;
  return r + r * (r - 1) * dp * (2.0 + (r - 1) * dp);
}

double case_expected_value(const std::string& label) {
  if (label == "A1" || label == "B2" || label == "B4") return 1.0;
  if (label == "A2" || label == "B5") return 0.5;
  if (label == "B1" || label == "B3" || label == "B6") return 0.0;
  throw std::invalid_argument("unknown case label " + label);
}

long case_expected_count(const std::string& label, int rank, int peirce) {
  const long r = rank, d = peirce;
  if (label == "A1") return r;
  if (label == "A2") return r * (r - 1) * d / 2;
  if (label == "B1") return r * (r - 1) / 2;
  if (label == "B2") return r * (r - 1) * d;
  if (label == "B3") return r * (r - 1) * (r - 2) / 2 * d;
  if (label == "B4") return r * (r - 1) * d * (d - 1) / 4;
  if (label == "B5") return r * (r - 1) * (r - 2) * d * d / 2;
  if (label == "B6") return r * (r - 1) * (r - 2) * (r - 3) / 8 * d * d;
  throw std::invalid_argument("unknown case label " + label);
}

std::map<std::string, CaseEntry> case_table(const PsiOperator& psi, const PeirceBasis& peirce) {
  const AlgebraPtr& alg = psi.algebra();
  const int n = alg->dim();
  if (peirce.size() != n || static_cast<int>(peirce.labels.size()) != n)
    throw StructuralFailure("case table: Peirce basis is incomplete");
  for (const auto& [s, t] : peirce.labels)
    if (s < 0 || t < s || t >= alg->rank())
      throw StructuralFailure("case table: basis element with an invalid Peirce label");

  std::map<std::string, CaseEntry> table;
  for (const char* label : {"A1", "A2", "B1", "B2", "B3", "B4", "B5", "B6"}) {
    CaseEntry entry;
    entry.label = label;
    entry.expected_value = case_expected_value(label);
    entry.expected_count = case_expected_count(label, alg->rank(), alg->peirce());
    entry.min_value = std::numeric_limits<double>::infinity();
    entry.max_value = -std::numeric_limits<double>::infinity();
    table.emplace(label, entry);
  }

  for (int i = 0; i < n; ++i) {
    const Eigen::VectorXd& bi = peirce.flattened[i].coords();
    for (int j = i; j < n; ++j) {
      const Eigen::VectorXd& bj = peirce.flattened[j].coords();
      const Eigen::MatrixXd m = i == j ? Eigen::MatrixXd(bi * bi.transpose())
                                       : Eigen::MatrixXd(kInvSqrt2 * (bi * bj.transpose() +
                                                                      bj * bi.transpose()));
      const SymEndo f(alg, m);
      const double c = (psi.apply(f).mat() * f.mat()).trace();
      auto& entry = table.at(classify(peirce.labels[i], peirce.labels[j], i == j));
      ++entry.count;
      entry.value += c;
      entry.min_value = std::min(entry.min_value, c);
      entry.max_value = std::max(entry.max_value, c);
    }
  }
  for (auto& [label, entry] : table) {
    if (entry.count > 0) {
      entry.value /= static_cast<double>(entry.count);
    } else {
      entry.min_value = entry.max_value = entry.value = 0.0;
    }
  }
  return table;
}

std::map<std::string, CaseEntry> case_table(const PsiOperator& psi) {
  return case_table(psi, psi.peirce());
}

nlohmann::json to_json(const std::map<std::string, CaseEntry>& table) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [label, e] : table) {
    out[label] = {{"count", e.count},
                  {"expected_count", e.expected_count},
                  {"C", e.value},
                  {"C_min", e.min_value},
                  {"C_max", e.max_value},
                  {"expected_C", e.expected_value}};
  }
  return out;
}

}  // namespace symcone
