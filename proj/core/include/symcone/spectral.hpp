#pragma once

#include <functional>
#include <vector>

#include "symcone/element.hpp"

namespace symcone {

/// Spectral values of x (the lambda_i in x = sum lambda_i c_i), ascending,
/// with multiplicity; there are always r of them.
///
/// Real, complex and quaternionic kinds go through the complex matrix
/// representation; the spin factor uses x0 +- |x|; the Albert algebra uses
/// the roots of its characteristic cubic.
std::vector<double> spectral_values(const Element& x);

double min_spectral_value(const Element& x);

/// True when x lies in the open cone Omega (all spectral values > tol).
bool in_cone(const Element& x, double tol = 0.0);

/// f(x) = sum f(lambda_i) c_i.
Element spectral_apply(const Element& x, const std::function<double(double)>& f);

/// Cone square root; x must lie in the closed cone.
Element cone_sqrt(const Element& x);

/// Inverse x^{-1} for invertible x.
Element inverse(const Element& x);

}  // namespace symcone
