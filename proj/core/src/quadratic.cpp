#include "symcone/quadratic.hpp"

namespace symcone {

LinearMap outer(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra());
  return LinearMap(a.algebra(), a.coords() * b.coords().transpose());
}

SymEndo outer_sym(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra());
  const Eigen::MatrixXd ab = a.coords() * b.coords().transpose();
  return SymEndo(a.algebra(), ab + ab.transpose());
}

double QuadraticForm::operator()(const Element& x) const { return q_of_endo(endo_, x); }

double q_of_endo(const SymEndo& f, const Element& x) {
  require_same_algebra(f.algebra(), x.algebra());
  return x.coords().dot(f.mat() * x.coords());
}

SymEndo endo_of_q(const AlgebraPtr& algebra, const std::function<double(const Element&)>& q) {
  const int n = algebra->dim();
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = q(algebra->basis(i));
  Eigen::MatrixXd f(n, n);
  for (int i = 0; i < n; ++i) {
    f(i, i) = diag[i];
    for (int j = i + 1; j < n; ++j) {
      const double v = 0.5 * (q(algebra->basis(i) + algebra->basis(j)) - diag[i] - diag[j]);
      f(i, j) = v;
      f(j, i) = v;
    }
  }
  return SymEndo(algebra, f);
}

QuadraticForm q1s(const Element& s) {
  const double dp = s.algebra()->half_peirce();
  const Eigen::MatrixXd ss = s.coords() * s.coords().transpose();
  return QuadraticForm(SymEndo(s.algebra(), dp * ss + pmap(s).mat()));
}

QuadraticForm q2s(const Element& s) {
  const Eigen::MatrixXd ss = s.coords() * s.coords().transpose();
  return QuadraticForm(SymEndo(s.algebra(), ss - pmap(s).mat()));
}

QuadraticSplit decompose_quadratic(const QuadraticForm& q, const PsiOperator& psi,
                                   const SpectralSplit& split) {
  const Eigen::VectorXd v = psi.to_f_coords(q.endo());
  return {QuadraticForm(psi.from_f_coords(split.proj1 * v)),
          QuadraticForm(psi.from_f_coords(split.proj2 * v))};
}

}  // namespace symcone
