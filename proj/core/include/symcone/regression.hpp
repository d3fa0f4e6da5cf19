#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/quadratic.hpp"
#include "symcone/wishart.hpp"

namespace symcone {

/// Constants of E(X | X+Y) = a(X+Y) and E(q_i(X) | X+Y) = b_i q_i(X+Y) for
/// independent X ~ gamma_{p,sigma}, Y ~ gamma_{p',sigma}:
///   a = p/(p+p'),  b1 = a (p+1)/(p+p'+1),  b2 = a (p-d/2)/(p+p'-d/2).
struct RegressionConstants {
  double p = 0.0;
  double p_prime = 0.0;
  int peirce = 0;
  double a = 0.0;
  double b1 = 0.0;
  double b2 = 0.0;

  /// b2 < a^2 < b1 < a.
  bool ordering_holds() const { return b2 < a * a && a * a < b1 && b1 < a; }
  double b(int i) const { return i == 1 ? b1 : b2; }
};

/// Throws std::invalid_argument unless p, p' > 0 and p + p' != d/2.
RegressionConstants constants_from_shapes(double p, double p_prime, int peirce);

struct KindCandidate {
  AlgebraKind kind;
  int rank;
  std::optional<int> spin_ambient_dim;
};

struct RecoveredStructure {
  double d = 0.0;  // as computed, before rounding
  double r = 0.0;
  int peirce = 0;
  int rank = 0;
  std::vector<KindCandidate> candidates;
};

/// d = 2 (a-b1)/(b1-a^2) * (a^2-b2)/(a-b2), then r from n = r + (d/2) r (r-1).
/// Rank-two results list the spin factor next to any matrix kind of the same
/// dimension. Throws InconsistentConstants if the ordering b2 < a^2 < b1 < a
/// fails, if d or r is more than 1e-6 from an integer, or if no simple
/// algebra has the recovered (d, r).
RecoveredStructure recover_structure(double a, double b1, double b2, int n);

nlohmann::json to_json(const RegressionConstants& c);
nlohmann::json to_json(const RecoveredStructure& s);

/// Coefficients p_i in q(d/dtheta) kappa = p_i q(kappa') for q in Q_i.
struct DifferentialCheck {
  double p1 = 0.0;
  double p2 = 0.0;
  double p(int i) const { return i == 1 ? p1 : p2; }
};

/// p_i = (b_i - a^2)/(a^2 - a b_i). Throws std::invalid_argument when a = b_i.
DifferentialCheck diff_constants(const RegressionConstants& c);

/// Closed forms of diff_constants for Wishart constants: p1 = 1/p, p2 = -d/(2p).
DifferentialCheck diff_constants_closed(double p, int peirce);

/// One tested relation: lhs against rhs. For Monte Carlo checks `error` is the
/// z-score (lhs - rhs)/standard_error; for differential checks it is the
/// relative error |lhs/rhs - 1|.
struct VerificationRecord {
  std::string label;
  std::vector<double> theta;
  std::optional<std::vector<double>> s;
  double lhs = 0.0;
  double rhs = 0.0;
  double standard_error = 0.0;
  double error = 0.0;
};

struct VerificationReport {
  std::string identity;
  std::string statistic;  // "z" or "relative_error"
  double coefficient = 0.0;
  double threshold = 0.0;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<VerificationRecord> records;
  bool pass = false;

  void finalize();
};

nlohmann::json to_json(const VerificationReport& report);

/// Jackknife standard error of the mean of `values`.
double jackknife_standard_error(std::span<const double> values);

/// Independent draws X ~ gamma_{p,sigma} (stream 0 of the seed) and
/// Y ~ gamma_{p',sigma} (stream 1) with the same scale.
struct PairedSample {
  std::vector<Element> x;
  std::vector<Element> sum;  // x + y
  std::uint64_t seed = 0;
};

PairedSample draw_pair(const WishartParams& x_params, const WishartParams& y_params,
                       std::size_t count, std::uint64_t seed, const SamplerOptions& options = {});

/// E[<theta,X> w] = c E[<theta,X+Y> w], w = exp(-tr(theta o (X+Y))).
VerificationReport check_linear(const PairedSample& sample, const std::vector<ThetaPoint>& grid,
                                double coefficient, double threshold = 4.0);

/// E[q(X) w] = c E[q(X+Y) w] for each s in `s_list` and theta in the grid,
/// with q = q_i^s.
VerificationReport check_quadratic(const PairedSample& sample, int i,
                                   const std::vector<Element>& s_list,
                                   const std::vector<ThetaPoint>& grid, double coefficient,
                                   double threshold = 4.0);

/// E[q(X) w] = E[(b1 q1 + b2 q2)(X+Y) w] where q = q1 + q2 is split by Psi.
VerificationReport check_mixed(const PairedSample& sample, const QuadraticForm& q,
                               const PsiOperator& psi, const SpectralSplit& split,
                               const RegressionConstants& constants,
                               const std::vector<ThetaPoint>& grid, double threshold = 4.0);

/// Draws the paired sample and runs check_linear with a = p/(p+p').
VerificationReport mc_verify_linear(const WishartParams& x_params, const WishartParams& y_params,
                                    std::size_t count, std::uint64_t seed,
                                    const std::vector<ThetaPoint>& grid);

/// Draws the paired sample and runs check_quadratic with b_i.
VerificationReport mc_verify_quadratic(const WishartParams& x_params,
                                       const WishartParams& y_params, int i,
                                       const std::vector<Element>& s_list, std::size_t count,
                                       std::uint64_t seed, const std::vector<ThetaPoint>& grid);

/// Tr(f_q kappa''(theta)) against p_i q(kappa'(theta)) for q = q_i^s, where
/// kappa is the cumulant of X and p_i comes from diff_constants. Passes when
/// the relative error is at most `tolerance`.
VerificationReport verify_diff_identity(const WishartParams& x_params,
                                        const WishartParams& y_params, int i, const Element& s,
                                        const Element& theta, double tolerance = 1e-3);

}  // namespace symcone
