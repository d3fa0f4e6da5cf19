#include "symcone/regression.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symcone/errors.hpp"
#include "symcone/random.hpp"

namespace symcone {
namespace {

constexpr double kIntegerTolerance = 1e-6;

std::vector<double> to_vector(const Element& x) {
  return {x.coords().data(), x.coords().data() + x.coords().size()};
}

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

struct Moments {
  double lhs;
  double rhs;
  double se;
};

// Mean of lhs_k - c rhs_k with its jackknife standard error.
Moments paired_moments(const std::vector<double>& lhs, const std::vector<double>& rhs,
                       double coefficient) {
  const std::size_t n = lhs.size();
  std::vector<double> diff(n);
  double sl = 0.0, sr = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sl += lhs[k];
    sr += rhs[k];
    diff[k] = lhs[k] - coefficient * rhs[k];
  }
  return {sl / n, coefficient * sr / n, jackknife_standard_error(diff)};
}

VerificationRecord make_record(std::string label, const ThetaPoint& point, const Moments& m) {
  VerificationRecord rec;
  rec.label = std::move(label);
  rec.theta = to_vector(point.theta);
  rec.lhs = m.lhs;
  rec.rhs = m.rhs;
  rec.standard_error = m.se;
  rec.error = m.se > 0.0 ? (m.lhs - m.rhs) / m.se : (m.lhs == m.rhs ? 0.0 : INFINITY);
  return rec;
}

std::vector<double> weights(const std::vector<Element>& sums, const Element& theta) {
  std::vector<double> w(sums.size());
  for (std::size_t k = 0; k < sums.size(); ++k) w[k] = std::exp(-inner(theta, sums[k]));
  return w;
}

std::vector<double> evaluate(const QuadraticForm& q, const std::vector<Element>& xs) {
  std::vector<double> out(xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) out[k] = q(xs[k]);
  return out;
}

VerificationReport empty_report(std::string identity, const PairedSample& sample,
                                double coefficient, double threshold) {
  VerificationReport report;
  report.identity = std::move(identity);
  report.statistic = "z";
  report.coefficient = coefficient;
  report.threshold = threshold;
  report.seed = sample.seed;
  report.samples = sample.x.size();
  return report;
}

}  // namespace

RegressionConstants constants_from_shapes(double p, double p_prime, int peirce) {
  if (!(p > 0.0) || !(p_prime > 0.0))
    throw std::invalid_argument("shapes p and p' must be positive");
  const double s = p + p_prime;
  const double half = 0.5 * peirce;
  if (std::abs(s - half) < 1e-14)
    throw std::invalid_argument("p + p' = d/2 makes b2 undefined");
  RegressionConstants c;
  c.p = p;
  c.p_prime = p_prime;
  c.peirce = peirce;
  c.a = p / s;
  c.b1 = c.a * (p + 1.0) / (s + 1.0);
  c.b2 = c.a * (p - half) / (s - half);
  return c;
}

RecoveredStructure recover_structure(double a, double b1, double b2, int n) {
  if (n < 3) throw std::invalid_argument("recover_structure needs n >= 3");
  if (!(b2 < a * a && a * a < b1 && b1 < a))
    throw InconsistentConstants("constants violate b2 < a^2 < b1 < a");
  RecoveredStructure out;
  out.d = 2.0 * (a - b1) / (b1 - a * a) * (a * a - b2) / (a - b2);
  const double dr = std::round(out.d);
  if (dr < 1.0 || std::abs(out.d - dr) > kIntegerTolerance)
    throw InconsistentConstants("recovered d = " + format_double(out.d) +
                                " is not a positive integer");
  out.peirce = static_cast<int>(dr);
  const double h = 0.5 * out.d;
  out.r = ((h - 1.0) + std::sqrt((1.0 - h) * (1.0 - h) + 4.0 * h * n)) / (2.0 * h);
  const double rr = std::round(out.r);
  if (rr < 2.0 || std::abs(out.r - rr) > kIntegerTolerance)
    throw InconsistentConstants("recovered r = " + format_double(out.r) +
                                " is not an integer >= 2");
  out.rank = static_cast<int>(rr);

  const int d = out.peirce;
  const int r = out.rank;
  if (d == 1) out.candidates.push_back({AlgebraKind::SymReal, r, std::nullopt});
  if (d == 2) out.candidates.push_back({AlgebraKind::HermComplex, r, std::nullopt});
  if (d == 4) out.candidates.push_back({AlgebraKind::HermQuaternion, r, std::nullopt});
  if (d == 8 && r == 3) out.candidates.push_back({AlgebraKind::Albert, r, std::nullopt});
  if (r == 2) out.candidates.push_back({AlgebraKind::SpinFactor, 2, d + 1});
  if (out.candidates.empty())
    throw InconsistentConstants("no simple Euclidean Jordan algebra has d = " +
                                std::to_string(d) + " and r = " + std::to_string(r));
  return out;
}

nlohmann::json to_json(const RegressionConstants& c) {
  return {{"p", c.p},   {"p_prime", c.p_prime}, {"d", c.peirce},
          {"a", c.a},   {"b1", c.b1},           {"b2", c.b2},
          {"ordering_b2_lt_a2_lt_b1_lt_a", c.ordering_holds()}};
}

nlohmann::json to_json(const RecoveredStructure& s) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : s.candidates) {
    nlohmann::json j = {{"kind", long_name(c.kind)}, {"r", c.rank}};
    if (c.spin_ambient_dim) j["ambient"] = *c.spin_ambient_dim;
    cands.push_back(std::move(j));
  }
  return {{"d_numeric", s.d}, {"r_numeric", s.r}, {"d", s.peirce}, {"r", s.rank},
          {"n", s.rank + s.peirce * s.rank * (s.rank - 1) / 2}, {"candidates", cands}};
}

DifferentialCheck diff_constants(const RegressionConstants& c) {
  const double a2 = c.a * c.a;
  auto pi = [&](double b) {
    if (c.a == b) throw std::invalid_argument("p_i is undefined when a = b_i");
    return (b - a2) / (a2 - c.a * b);
  };
  return {pi(c.b1), pi(c.b2)};
}

DifferentialCheck diff_constants_closed(double p, int peirce) {
  return {1.0 / p, -0.5 * peirce / p};
}

void VerificationReport::finalize() {
  pass = !records.empty();
  for (const auto& r : records) pass = pass && std::abs(r.error) <= threshold;
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j = {{"label", r.label}, {"theta", r.theta}, {"lhs", r.lhs}, {"rhs", r.rhs}};
    if (r.s) j["s"] = *r.s;
    if (report.statistic == "z") {
      j["standard_error"] = r.standard_error;
      j["z_score"] = r.error;
    } else {
      j["relative_error"] = r.error;
    }
    records.push_back(std::move(j));
  }
  nlohmann::json out = {{"identity", report.identity},
                        {"coefficient", report.coefficient},
                        {"statistic", report.statistic},
                        {"threshold", report.threshold},
                        {"records", records},
                        {"pass", report.pass}};
  if (report.statistic == "z") {
    out["seed"] = report.seed;
    out["samples"] = report.samples;
  }
  return out;
}

double jackknife_standard_error(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("jackknife needs at least two values");
  double total = 0.0;
  for (double v : values) total += v;
  const double mean = total / n;
  double acc = 0.0;
  for (double v : values) {
    const double loo = (total - v) / (n - 1.0);
    acc += (loo - mean) * (loo - mean);
  }
  return std::sqrt((n - 1.0) / n * acc);
}

PairedSample draw_pair(const WishartParams& x_params, const WishartParams& y_params,
                       std::size_t count, std::uint64_t seed, const SamplerOptions& options) {
  require_same_algebra(x_params.algebra(), y_params.algebra());
  if ((x_params.scale() - y_params.scale()).norm() > 0.0)
    throw std::invalid_argument("X and Y must share the scale sigma");
  PairedSample out;
  out.seed = seed;
  out.x = sample(x_params, count, stream_seed(seed, 0), options);
  const auto y = sample(y_params, count, stream_seed(seed, 1), options);
  out.sum.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.sum.push_back(out.x[k] + y[k]);
  return out;
}

VerificationReport check_linear(const PairedSample& sample, const std::vector<ThetaPoint>& grid,
                                double coefficient, double threshold) {
  auto report = empty_report("linear", sample, coefficient, threshold);
  const std::size_t n = sample.x.size();
  for (const auto& point : grid) {
    const auto w = weights(sample.sum, point.theta);
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
      lhs[k] = inner(point.theta, sample.x[k]) * w[k];
      rhs[k] = inner(point.theta, sample.sum[k]) * w[k];
    }
    report.records.push_back(make_record(point.label, point, paired_moments(lhs, rhs, coefficient)));
  }
  report.finalize();
  return report;
}

VerificationReport check_quadratic(const PairedSample& sample, int i,
                                   const std::vector<Element>& s_list,
                                   const std::vector<ThetaPoint>& grid, double coefficient,
                                   double threshold) {
  if (i != 1 && i != 2) throw std::invalid_argument("quadratic index must be 1 or 2");
  auto report = empty_report("quadratic_q" + std::to_string(i), sample, coefficient, threshold);
  const std::size_t n = sample.x.size();
  std::vector<std::vector<double>> ws;
  for (const auto& point : grid) ws.push_back(weights(sample.sum, point.theta));
  for (std::size_t si = 0; si < s_list.size(); ++si) {
    const QuadraticForm q = i == 1 ? q1s(s_list[si]) : q2s(s_list[si]);
    const auto qx = evaluate(q, sample.x);
    const auto qs = evaluate(q, sample.sum);
    for (std::size_t g = 0; g < grid.size(); ++g) {
      std::vector<double> lhs(n), rhs(n);
      for (std::size_t k = 0; k < n; ++k) {
        lhs[k] = qx[k] * ws[g][k];
        rhs[k] = qs[k] * ws[g][k];
      }
      auto rec = make_record("s" + std::to_string(si + 1) + " " + grid[g].label, grid[g],
                             paired_moments(lhs, rhs, coefficient));
      rec.s = to_vector(s_list[si]);
      report.records.push_back(std::move(rec));
    }
  }
  report.finalize();
  return report;
}

VerificationReport check_mixed(const PairedSample& sample, const QuadraticForm& q,
                               const PsiOperator& psi, const SpectralSplit& split,
                               const RegressionConstants& constants,
                               const std::vector<ThetaPoint>& grid, double threshold) {
  auto report = empty_report("mixed", sample, 1.0, threshold);
  const QuadraticSplit parts = decompose_quadratic(q, psi, split);
  const QuadraticForm target = parts.q1 * constants.b1 + parts.q2 * constants.b2;
  const auto qx = evaluate(q, sample.x);
  const auto qs = evaluate(target, sample.sum);
  const std::size_t n = sample.x.size();
  for (const auto& point : grid) {
    const auto w = weights(sample.sum, point.theta);
    std::vector<double> lhs(n), rhs(n);
    for (std::size_t k = 0; k < n; ++k) {
      lhs[k] = qx[k] * w[k];
      rhs[k] = qs[k] * w[k];
    }
    report.records.push_back(make_record(point.label, point, paired_moments(lhs, rhs, 1.0)));
  }
  report.finalize();
  return report;
}

VerificationReport mc_verify_linear(const WishartParams& x_params, const WishartParams& y_params,
                                    std::size_t count, std::uint64_t seed,
                                    const std::vector<ThetaPoint>& grid) {
  const auto c = constants_from_shapes(x_params.shape(), y_params.shape(),
                                       x_params.algebra()->peirce());
  return check_linear(draw_pair(x_params, y_params, count, seed), grid, c.a);
}

VerificationReport mc_verify_quadratic(const WishartParams& x_params,
                                       const WishartParams& y_params, int i,
                                       const std::vector<Element>& s_list, std::size_t count,
                                       std::uint64_t seed, const std::vector<ThetaPoint>& grid) {
  const auto c = constants_from_shapes(x_params.shape(), y_params.shape(),
                                       x_params.algebra()->peirce());
  return check_quadratic(draw_pair(x_params, y_params, count, seed), i, s_list, grid, c.b(i));
}

VerificationReport verify_diff_identity(const WishartParams& x_params,
                                        const WishartParams& y_params, int i, const Element& s,
                                        const Element& theta, double tolerance) {
  if (i != 1 && i != 2) throw std::invalid_argument("quadratic index must be 1 or 2");
  require_same_algebra(x_params.algebra(), y_params.algebra());
  const auto c = constants_from_shapes(x_params.shape(), y_params.shape(),
                                       x_params.algebra()->peirce());
  const double pi = diff_constants(c).p(i);
  const CumulantEvaluator kappa(x_params);
  if (!kappa.in_domain(theta)) throw DomainError("theta is outside the cumulant domain");
  const QuadraticForm q = i == 1 ? q1s(s) : q2s(s);

  VerificationReport report;
  report.identity = "differential_q" + std::to_string(i);
  report.statistic = "relative_error";
  report.coefficient = pi;
  report.threshold = tolerance;
  VerificationRecord rec;
  rec.label = "q" + std::to_string(i);
  rec.theta = to_vector(theta);
  rec.s = to_vector(s);
  rec.lhs = (q.endo().mat() * kappa.hessian(theta).mat()).trace();
  rec.rhs = pi * q(kappa.gradient(theta));
  rec.error = std::abs(rec.lhs / rec.rhs - 1.0);
  report.records.push_back(std::move(rec));
  report.finalize();
  return report;
}

}  // namespace symcone
