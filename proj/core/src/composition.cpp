#include "symcone/composition.hpp"

#include <stdexcept>
#include <vector>

namespace symcone {
namespace {

using Vec = std::vector<double>;

Vec conj_vec(const Vec& a) {
  Vec out(a.size());
  out[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

// Recursive Cayley-Dickson product on vectors of length 2^m.
Vec cd_multiply(const Vec& x, const Vec& y) {
  const std::size_t n = x.size();
  if (n == 1) return {x[0] * y[0]};
  const std::size_t h = n / 2;
  const Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
  const Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
  const Vec ac = cd_multiply(a, c);
  const Vec dbar_b = cd_multiply(conj_vec(d), b);
  const Vec da = cd_multiply(d, a);
  const Vec b_cbar = cd_multiply(b, conj_vec(c));
  Vec out(n);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = ac[i] - dbar_b[i];
    out[h + i] = da[i] + b_cbar[i];
  }
  return out;
}

}  // namespace

CompositionAlgebra::CompositionAlgebra(int dim) : dim_(dim) {
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      Vec ui(dim, 0.0), uj(dim, 0.0);
      ui[i] = 1.0;
      uj[j] = 1.0;
      const Vec p = cd_multiply(ui, uj);
      for (int k = 0; k < dim; ++k) {
        if (p[k] != 0.0) {
          index_[i][j] = k;
          sign_[i][j] = p[k];
        }
      }
    }
  }
}

const CompositionAlgebra& CompositionAlgebra::of_dimension(int dim) {
  static const CompositionAlgebra reals(1);
  static const CompositionAlgebra complexes(2);
  static const CompositionAlgebra quaternions(4);
  static const CompositionAlgebra octonions(8);
  switch (dim) {
    case 1: return reals;
    case 2: return complexes;
    case 4: return quaternions;
    case 8: return octonions;
    default:
      throw std::invalid_argument("composition algebra dimension must be 1, 2, 4 or 8");
  }
}

void CompositionAlgebra::multiply(std::span<const double> a,
                                  std::span<const double> b,
                                  std::span<double> out) const {
  std::array<double, kMaxDim> acc{};
  for (int i = 0; i < dim_; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      acc[index_[i][j]] += sign_[i][j] * a[i] * b[j];
    }
  }
  for (int k = 0; k < dim_; ++k) out[k] = acc[k];
}

void CompositionAlgebra::conjugate(std::span<const double> a, std::span<double> out) {
  out[0] = a[0];
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = -a[i];
}

}  // namespace symcone
