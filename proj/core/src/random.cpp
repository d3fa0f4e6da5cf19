#include "symcone/random.hpp"

#include <cmath>

namespace symcone {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(splitmix64(base) ^ (0xd1b54a32d192ed03ULL * (index + 1)));
}

Element random_element(const AlgebraPtr& algebra, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::VectorXd v(algebra->dim());
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = normal(rng);
  return algebra->element(std::move(v));
}

Element random_cone_element(const AlgebraPtr& algebra, Rng& rng, double shift) {
  const Element g = random_element(algebra, rng) * (1.0 / std::sqrt(algebra->dim()));
  return g.square() + algebra->identity() * shift;
}

}  // namespace symcone
