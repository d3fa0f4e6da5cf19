#pragma once

#include <functional>

#include "symcone/endo.hpp"
#include "symcone/psi.hpp"

namespace symcone {

/// a (x) b : x -> a tr(b o x). Not symmetric unless a and b are parallel.
LinearMap outer(const Element& a, const Element& b);
/// a (x) b + b (x) a.
SymEndo outer_sym(const Element& a, const Element& b);

/// q(x) = <f_q(x), x>.
class QuadraticForm {
 public:
  explicit QuadraticForm(SymEndo endo) : endo_(std::move(endo)) {}

  const SymEndo& endo() const { return endo_; }
  const AlgebraPtr& algebra() const { return endo_.algebra(); }
  double operator()(const Element& x) const;

  QuadraticForm operator+(const QuadraticForm& other) const {
    return QuadraticForm(endo_ + other.endo_);
  }
  QuadraticForm operator*(double s) const { return QuadraticForm(endo_ * s); }

 private:
  SymEndo endo_;
};

double q_of_endo(const SymEndo& f, const Element& x);

/// Recovers f_q from evaluations of q by polarization on the algebra basis:
/// f_ii = q(e_i), f_ij = (q(e_i + e_j) - q(e_i) - q(e_j)) / 2.
SymEndo endo_of_q(const AlgebraPtr& algebra, const std::function<double(const Element&)>& q);

/// q1^s(x) = (d/2) tr^2(x o s) + <P(x)s, s>, i.e. f = d' s (x) s + P(s).
QuadraticForm q1s(const Element& s);
/// q2^s(x) = tr^2(x o s) - <P(x)s, s>, i.e. f = s (x) s - P(s).
QuadraticForm q2s(const Element& s);

struct QuadraticSplit {
  QuadraticForm q1;
  QuadraticForm q2;
};

/// q = q1 + q2 with f_{q1} = proj1 f_q in F1 and f_{q2} = proj2 f_q in F2.
QuadraticSplit decompose_quadratic(const QuadraticForm& q, const PsiOperator& psi,
                                   const SpectralSplit& split);

}  // namespace symcone
