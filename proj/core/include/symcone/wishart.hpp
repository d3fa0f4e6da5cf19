#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/endo.hpp"

namespace symcone {

/// Lambda_V = {d/2, d, ..., (d/2)(r-1)} u ((d/2)(r-1), inf).
struct GyndikinSet {
  int peirce;
  int rank;

  static GyndikinSet of(const JordanAlgebra& algebra) {
    return {algebra.peirce(), algebra.rank()};
  }
  /// Discrete points k d/2, k = 1..r-1 (empty for r = 1).
  std::vector<double> discrete_points() const;
  /// (d/2)(r-1); the continuous part is the open half-line above it.
  double continuous_threshold() const;
};

/// Membership with discrete points matched to absolute tolerance 1e-12.
bool gyndikin_contains(const GyndikinSet& set, double p);

/// Shape p in Lambda_V and scale sigma in the open cone. The cone square
/// root of sigma and P(sigma^1/2) are computed once.
class WishartParams {
 public:
  WishartParams(double shape, Element scale);

  const AlgebraPtr& algebra() const { return scale_.algebra(); }
  double shape() const { return shape_; }
  const Element& scale() const { return scale_; }
  const Element& scale_sqrt() const { return scale_sqrt_; }
  /// P(sigma^1/2).
  const SymEndo& transport() const { return transport_; }

 private:
  double shape_;
  Element scale_;
  Element scale_sqrt_;
  SymEndo transport_;
};

/// E exp(-tr(theta o X)) = det(e + P(sigma^1/2) theta)^(-p). Throws
/// DomainError when e + P(sigma^1/2) theta is not in the open cone.
double laplace(const WishartParams& params, const Element& theta);

/// kappa(theta) = log E exp(<theta, X>) = -p log det(e - P(sigma^1/2) theta),
/// with derivatives by central finite differences.
class CumulantEvaluator {
 public:
  explicit CumulantEvaluator(WishartParams params, double relative_step = 1e-5);

  const WishartParams& params() const { return params_; }
  /// |theta| below this radius (1 / largest spectral value of sigma)
  /// guarantees theta is in the domain.
  double domain_radius() const { return radius_; }
  bool in_domain(const Element& theta) const;

  double value(const Element& theta) const;
  /// Central differences, step h = relative_step * max(1, |theta|).
  Element gradient(const Element& theta) const;
  /// Second differences on a symmetric stencil (exactly symmetric result),
  /// step 10 h. Rounding error of a second difference grows like 1/h^2, so
  /// the larger step keeps it near 1e-8 instead of 1e-4.
  SymEndo hessian(const Element& theta) const;

 private:
  double step(const Element& theta) const;

  WishartParams params_;
  double relative_step_;
  double radius_;
};

enum class SamplingPath { RankOne, Bartlett };

/// RankOne when 2p/d is an integer k (sum of k Gaussian squares), Bartlett
/// otherwise. Throws UnsupportedKind outside SymReal / HermComplex.
SamplingPath sampling_path(const WishartParams& params);

struct SamplerOptions {
  std::size_t chunk_size = 4096;
  /// 0 = std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Draws from gamma_{p, sigma}. Chunk c of chunk_size draws uses its own
/// mt19937_64 seeded with stream_seed(seed, c); the output is identical for
/// any worker count.
std::vector<Element> sample(const WishartParams& params, std::size_t count, std::uint64_t seed,
                            const SamplerOptions& options = {});

std::string stream_layout_description(std::size_t chunk_size);

/// theta grid: scales t giving theta = t e, plus random cone directions
/// normalised to |theta| = random_norm.
struct ThetaGridSpec {
  std::vector<double> scales{0.05, 0.10, 0.15, 0.20, 0.25};
  int random_directions = 3;
  double random_norm = 0.1;

  /// "default", or "0.05,0.1,0.2" optionally followed by ";random=K".
  static ThetaGridSpec parse(std::string_view text);
  std::string to_string() const;
};

struct ThetaPoint {
  std::string label;
  Element theta;
};

std::vector<ThetaPoint> make_theta_grid(const AlgebraPtr& algebra, const ThetaGridSpec& spec,
                                        std::uint64_t seed);

struct LaplaceGatePoint {
  std::string label;
  std::vector<double> theta;
  double empirical = 0.0;
  double exact = 0.0;
  double standard_error = 0.0;
  double z_score = 0.0;
};

struct LaplaceGateReport {
  std::vector<LaplaceGatePoint> points;
  double threshold = 3.0;
  bool pass = false;
};

/// Empirical mean of exp(-tr(theta o X)) against laplace(params, theta), shape
/// `exact_shape` (defaults to params.shape(); use p + p' for sums).
LaplaceGateReport laplace_gate(const WishartParams& params, std::span<const Element> samples,
                               const std::vector<ThetaPoint>& grid, double threshold = 3.0,
                               double exact_shape = -1.0);

nlohmann::json to_json(const LaplaceGateReport& report);

}  // namespace symcone
