#include "symcone/algebra.hpp"

#include <cmath>
#include <string>

#include "symcone/element.hpp"
#include "symcone/errors.hpp"

namespace symcone {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kSqrt2 = 1.41421356237309504880;

}  // namespace

std::string_view short_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::SymReal: return "sym";
    case AlgebraKind::HermComplex: return "herm";
    case AlgebraKind::HermQuaternion: return "quat";
    case AlgebraKind::SpinFactor: return "spin";
    case AlgebraKind::Albert: return "albert";
  }
  return "?";
}

std::string_view long_name(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::SymReal: return "SymReal";
    case AlgebraKind::HermComplex: return "HermComplex";
    case AlgebraKind::HermQuaternion: return "HermQuaternion";
    case AlgebraKind::SpinFactor: return "SpinFactor";
    case AlgebraKind::Albert: return "Albert";
  }
  return "?";
}

AlgebraKind parse_kind(std::string_view name) {
  for (auto k : {AlgebraKind::SymReal, AlgebraKind::HermComplex, AlgebraKind::HermQuaternion,
                 AlgebraKind::SpinFactor, AlgebraKind::Albert}) {
    if (name == short_name(k) || name == long_name(k)) return k;
  }
  throw InvalidAlgebra("unknown algebra kind '" + std::string(name) +
                       "' (expected sym, herm, quat, spin or albert)");
}

int algebra_dimension(int rank, int peirce) {
  return rank + peirce * rank * (rank - 1) / 2;
}

JordanAlgebra::JordanAlgebra(AlgebraKind kind, int rank, int peirce, int dim,
                             std::optional<int> ambient, int width)
    : kind_(kind), rank_(rank), peirce_(peirce), dim_(dim), ambient_(ambient), width_(width),
      structure_(static_cast<std::size_t>(dim) * dim * dim, 0.0),
      identity_(Eigen::VectorXd::Zero(dim)) {}

AlgebraPtr JordanAlgebra::make(AlgebraKind kind, int rank, std::optional<int> spin_ambient_dim) {
  if (rank < 1) throw InvalidAlgebra("rank must be at least 1");
  if (kind != AlgebraKind::SpinFactor && spin_ambient_dim)
    throw InvalidAlgebra("ambient dimension is only meaningful for the spin factor");

  std::shared_ptr<JordanAlgebra> alg;
  switch (kind) {
    case AlgebraKind::SpinFactor: {
      if (rank != 2) throw InvalidAlgebra("the spin factor has rank 2");
      if (!spin_ambient_dim) throw InvalidAlgebra("spin factor needs the ambient dimension dim E");
      const int m = *spin_ambient_dim;
      if (m < 2) throw InvalidAlgebra("spin factor ambient dimension must be at least 2");
      alg.reset(new JordanAlgebra(kind, 2, m - 1, m + 1, m, 0));
      alg->build_spin();
      break;
    }
    case AlgebraKind::Albert:
      if (rank != 3) throw InvalidAlgebra("the Albert algebra has rank 3");
      alg.reset(new JordanAlgebra(kind, 3, 8, 27, std::nullopt, 8));
      alg->build_matrix_kind();
      break;
    default: {
      const int width = kind == AlgebraKind::SymReal ? 1 : kind == AlgebraKind::HermComplex ? 2 : 4;
      alg.reset(new JordanAlgebra(kind, rank, width, algebra_dimension(rank, width),
                                  std::nullopt, width));
      alg->build_matrix_kind();
      break;
    }
  }
  alg->finalize();
  return alg;
}

AlgebraPtr make_algebra(AlgebraKind kind, int rank, std::optional<int> spin_ambient_dim) {
  return JordanAlgebra::make(kind, rank, spin_ambient_dim);
}

void JordanAlgebra::build_matrix_kind() {
  for (int i = 0; i < rank_; ++i) slots_.push_back({i, i, -1});
  for (int i = 0; i < rank_; ++i)
    for (int j = i + 1; j < rank_; ++j)
      for (int c = 0; c < width_; ++c) slots_.push_back({i, j, c});

  std::vector<KMatrix> basis;
  basis.reserve(dim_);
  for (const auto& [i, j, c] : slots_) {
    KMatrix m(rank_, width_);
    if (c < 0) {
      m.entry(i, i)[0] = 1.0;
    } else {
      m.entry(i, j)[c] = kInvSqrt2;
      m.entry(j, i)[c] = c == 0 ? kInvSqrt2 : -kInvSqrt2;
    }
    basis.push_back(std::move(m));
  }
  for (int i = 0; i < dim_; ++i) {
    for (int j = i; j < dim_; ++j) {
      const KMatrix prod = KMatrix::jordan(basis[i], basis[j]);
      for (int k = 0; k < dim_; ++k) {
        const auto& [a, b, c] = slots_[k];
        const double v = c < 0 ? prod.re(a, a) : kSqrt2 * prod.entry(a, b)[c];
        structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k] = v;
        structure_[(static_cast<std::size_t>(j) * dim_ + i) * dim_ + k] = v;
      }
    }
  }
  for (int i = 0; i < rank_; ++i) identity_[i] = 1.0;
}

void JordanAlgebra::build_spin() {
  auto at = [&](int i, int j, int k) -> double& {
    return structure_[(static_cast<std::size_t>(i) * dim_ + j) * dim_ + k];
  };
  at(0, 0, 0) = kInvSqrt2;
  for (int k = 1; k < dim_; ++k) {
    at(0, k, k) = kInvSqrt2;
    at(k, 0, k) = kInvSqrt2;
    at(k, k, 0) = kInvSqrt2;
  }
  identity_[0] = kSqrt2;
}

void JordanAlgebra::finalize() {
  lstack_ = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dim_) * dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) lstack_(k + j * dim_, i) = structure(i, j, k);
}

Eigen::MatrixXd JordanAlgebra::multiplication_matrix(const Eigen::VectorXd& x) const {
  const Eigen::VectorXd flat = lstack_ * x;
  return Eigen::Map<const Eigen::MatrixXd>(flat.data(), dim_, dim_);
}

Element JordanAlgebra::identity() const { return Element(shared_from_this(), identity_); }
Element JordanAlgebra::zero() const {
  return Element(shared_from_this(), Eigen::VectorXd::Zero(dim_));
}
Element JordanAlgebra::basis(int i) const {
  return Element(shared_from_this(), Eigen::VectorXd::Unit(dim_, i));
}
Element JordanAlgebra::element(Eigen::VectorXd coords) const {
  return Element(shared_from_this(), std::move(coords));
}

std::string JordanAlgebra::basis_label(int i) const {
  if (kind_ == AlgebraKind::SpinFactor) return i == 0 ? "e0" : "u" + std::to_string(i);
  const auto& [a, b, c] = slots_.at(i);
  if (c < 0) return "E" + std::to_string(a + 1) + std::to_string(a + 1);
  return "F" + std::to_string(a + 1) + std::to_string(b + 1) + "." + std::to_string(c);
}

Element JordanAlgebra::from_matrix(const KMatrix& m) const {
  if (!is_matrix_kind()) throw UnsupportedKind("from_matrix needs a matrix kind");
  if (m.rows() != rank_ || m.width() != width_)
    throw InvalidAlgebra("matrix shape does not match the algebra");
  if (m.max_abs_diff(m.adjoint()) > 1e-10 * (1.0 + m.max_abs_diff(KMatrix(rank_, width_))))
    throw InvalidAlgebra("matrix is not Hermitian");
  Eigen::VectorXd coords(dim_);
  for (int k = 0; k < dim_; ++k) {
    const auto& [a, b, c] = slots_[k];
    coords[k] = c < 0 ? m.re(a, a) : kSqrt2 * m.entry(a, b)[c];
  }
  return element(std::move(coords));
}

KMatrix JordanAlgebra::to_matrix(const Element& x) const {
  if (!is_matrix_kind()) throw UnsupportedKind("to_matrix needs a matrix kind");
  require_same_algebra(x.algebra(), shared_from_this());
  KMatrix m(rank_, width_);
  for (int k = 0; k < dim_; ++k) {
    const auto& [a, b, c] = slots_[k];
    if (c < 0) {
      m.entry(a, a)[0] = x[k];
    } else {
      m.entry(a, b)[c] = kInvSqrt2 * x[k];
      m.entry(b, a)[c] = (c == 0 ? kInvSqrt2 : -kInvSqrt2) * x[k];
    }
  }
  return m;
}

Element JordanAlgebra::spin(double x0, std::span<const double> vec) const {
  if (kind_ != AlgebraKind::SpinFactor) throw UnsupportedKind("spin() needs the spin factor");
  if (static_cast<int>(vec.size()) != dim_ - 1)
    throw InvalidAlgebra("spin vector part has the wrong dimension");
  Eigen::VectorXd coords(dim_);
  coords[0] = kSqrt2 * x0;
  for (int k = 1; k < dim_; ++k) coords[k] = kSqrt2 * vec[k - 1];
  return element(std::move(coords));
}

std::pair<double, Eigen::VectorXd> JordanAlgebra::spin_components(const Element& x) const {
  if (kind_ != AlgebraKind::SpinFactor) throw UnsupportedKind("spin_components needs the spin factor");
  require_same_algebra(x.algebra(), shared_from_this());
  return {kInvSqrt2 * x[0], kInvSqrt2 * x.coords().tail(dim_ - 1)};
}

nlohmann::json JordanAlgebra::to_json() const {
  nlohmann::json j;
  j["kind"] = long_name(kind_);
  j["r"] = rank_;
  j["d"] = peirce_;
  j["n"] = dim_;
  if (ambient_) j["spin_ambient_dim"] = *ambient_;
  std::vector<std::string> labels;
  for (int i = 0; i < dim_; ++i) labels.push_back(basis_label(i));
  j["basis"] = labels;
  auto constants = nlohmann::json::array();
  for (int i = 0; i < dim_; ++i)
    for (int jj = i; jj < dim_; ++jj)
      for (int k = 0; k < dim_; ++k) {
        const double v = structure(i, jj, k);
        if (std::abs(v) > 1e-15) constants.push_back({i, jj, k, v});
      }
  j["structure_constants"] = constants;
  return j;
}

}  // namespace symcone
