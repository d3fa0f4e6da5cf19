#include "symcone/wishart.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <thread>

#include "symcone/errors.hpp"
#include "symcone/random.hpp"
#include "symcone/spectral.hpp"

namespace symcone {
namespace {

double log_det_in_cone(const Element& u, const char* what) {
  const auto values = spectral_values(u);
  if (values.front() <= 0.0)
    throw DomainError(std::string(what) + ": argument is outside the open cone");
  double acc = 0.0;
  for (double v : values) acc += std::log(v);
  return acc;
}

bool is_integer(double x, double tol = 1e-12) { return std::abs(x - std::round(x)) <= tol; }

std::string format_double(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::vector<double> GyndikinSet::discrete_points() const {
  std::vector<double> out;
  for (int k = 1; k < rank; ++k) out.push_back(0.5 * peirce * k);
  return out;
}

double GyndikinSet::continuous_threshold() const { return 0.5 * peirce * (rank - 1); }

bool gyndikin_contains(const GyndikinSet& set, double p) {
  if (p > set.continuous_threshold()) return true;
  for (double q : set.discrete_points())
    if (std::abs(p - q) <= 1e-12) return true;
  return false;
}

WishartParams::WishartParams(double shape, Element scale)
    : shape_(shape), scale_(std::move(scale)), scale_sqrt_(scale_), transport_(SymEndo::zero(scale_.algebra())) {
  if (!gyndikin_contains(GyndikinSet::of(*scale_.algebra()), shape_))
    throw std::invalid_argument("shape " + format_double(shape_) +
                                " is not in the Gyndikin set of the algebra");
  if (!in_cone(scale_)) throw std::invalid_argument("scale must lie in the open cone");
  scale_sqrt_ = cone_sqrt(scale_);
  transport_ = pmap(scale_sqrt_);
}

double laplace(const WishartParams& params, const Element& theta) {
  require_same_algebra(params.algebra(), theta.algebra());
  const Element u = params.algebra()->identity() + params.transport().apply(theta);
  return std::exp(-params.shape() * log_det_in_cone(u, "laplace"));
}

CumulantEvaluator::CumulantEvaluator(WishartParams params, double relative_step)
    : params_(std::move(params)), relative_step_(relative_step) {
  radius_ = 1.0 / spectral_values(params_.scale()).back();
}

bool CumulantEvaluator::in_domain(const Element& theta) const {
  const Element u = params_.algebra()->identity() - params_.transport().apply(theta);
  return in_cone(u);
}

double CumulantEvaluator::value(const Element& theta) const {
  require_same_algebra(params_.algebra(), theta.algebra());
  const Element u = params_.algebra()->identity() - params_.transport().apply(theta);
  return -params_.shape() * log_det_in_cone(u, "cumulant");
}

double CumulantEvaluator::step(const Element& theta) const {
  return relative_step_ * std::max(1.0, theta.norm());
}

Element CumulantEvaluator::gradient(const Element& theta) const {
  const double h = step(theta);
  const int n = theta.dim();
  Eigen::VectorXd g(n);
  for (int i = 0; i < n; ++i) {
    const Element di = theta.algebra()->basis(i) * h;
    g[i] = (value(theta + di) - value(theta - di)) / (2.0 * h);
  }
  return theta.algebra()->element(std::move(g));
}

SymEndo CumulantEvaluator::hessian(const Element& theta) const {
  const double h = 10.0 * step(theta);
  const int n = theta.dim();
  const AlgebraPtr& alg = theta.algebra();
  const double f0 = value(theta);
  std::vector<Element> dirs;
  for (int i = 0; i < n; ++i) dirs.push_back(alg->basis(i) * h);
  Eigen::MatrixXd hess(n, n);
  for (int i = 0; i < n; ++i) {
    hess(i, i) = (value(theta + dirs[i]) - 2.0 * f0 + value(theta - dirs[i])) / (h * h);
    for (int j = i + 1; j < n; ++j) {
      const double v = (value(theta + dirs[i] + dirs[j]) - value(theta + dirs[i] - dirs[j]) -
                        value(theta - dirs[i] + dirs[j]) + value(theta - dirs[i] - dirs[j])) /
                       (4.0 * h * h);
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }
  return SymEndo(alg, hess);
}

SamplingPath sampling_path(const WishartParams& params) {
  const auto& alg = *params.algebra();
  if (alg.kind() != AlgebraKind::SymReal && alg.kind() != AlgebraKind::HermComplex)
    throw UnsupportedKind("sampling is implemented for SymReal and HermComplex only (got " +
                          std::string(long_name(alg.kind())) + ")");
  const double k = 2.0 * params.shape() / alg.peirce();
  if (is_integer(k)) return SamplingPath::RankOne;
  if (params.shape() <= GyndikinSet::of(alg).continuous_threshold())
    throw std::invalid_argument("shape outside the sampler's supported regime");
  return SamplingPath::Bartlett;
}

std::string stream_layout_description(std::size_t chunk_size) {
  return "chunk c of " + std::to_string(chunk_size) +
         " draws uses mt19937_64(stream_seed(seed, c)); per draw: gamma_{p,e} from the "
         "rank-one or Bartlett construction, then transported by P(sigma^1/2)";
}

std::vector<Element> sample(const WishartParams& params, std::size_t count, std::uint64_t seed,
                            const SamplerOptions& options) {
  const SamplingPath path = sampling_path(params);
  const AlgebraPtr& alg = params.algebra();
  const int r = alg->rank();
  const int width = alg->entry_width();
  const double p = params.shape();
  const int k = static_cast<int>(std::lround(2.0 * p / alg->peirce()));
  const Eigen::MatrixXd transport = params.transport().mat();
  const std::size_t chunk = std::max<std::size_t>(1, options.chunk_size);
  const std::size_t chunks = (count + chunk - 1) / chunk;

  std::vector<Eigen::VectorXd> coords(count);
  auto run_chunk = [&](std::size_t c) {
    Rng rng(stream_seed(seed, c));
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    auto draw_entry = [&]() {
      const double re = normal(rng);
      const double im = width == 2 ? normal(rng) : 0.0;
      return std::complex<double>(re, im);
    };
    const std::size_t end = std::min(count, (c + 1) * chunk);
    for (std::size_t idx = c * chunk; idx < end; ++idx) {
      Eigen::MatrixXcd x0 = Eigen::MatrixXcd::Zero(r, r);
      if (path == SamplingPath::RankOne) {
        Eigen::VectorXcd z(r);
        for (int m = 0; m < k; ++m) {
          for (int i = 0; i < r; ++i) z[i] = draw_entry();
          x0 += z * z.adjoint();
        }
      } else {
        Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(r, r);
        for (int i = 0; i < r; ++i) {
          std::gamma_distribution<double> gamma(p - 0.5 * alg->peirce() * i, 1.0);
          t(i, i) = std::sqrt(gamma(rng));
          for (int j = 0; j < i; ++j) t(i, j) = draw_entry();
        }
        x0 = t * t.adjoint();
      }
      const Eigen::MatrixXcd herm = 0.5 * (x0 + x0.adjoint());
      const Element base = alg->from_matrix(KMatrix::from_complex_embedding(herm, width));
      coords[idx] = transport * base.coords();
    }
  };

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = static_cast<unsigned>(std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(1, chunks)));
  if (workers == 1) {
    for (std::size_t c = 0; c < chunks; ++c) run_chunk(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t c = w; c < chunks; c += workers) run_chunk(c);
      });
    for (auto& t : pool) t.join();
  }

  std::vector<Element> out;
  out.reserve(count);
  for (auto& v : coords) out.emplace_back(alg, std::move(v));
  return out;
}

ThetaGridSpec ThetaGridSpec::parse(std::string_view text) {
  ThetaGridSpec spec;
  if (text.empty() || text == "default") return spec;
  spec.scales.clear();
  spec.random_directions = 0;
  std::string s(text);
  std::stringstream parts(s);
  std::string part;
  bool first = true;
  while (std::getline(parts, part, ';')) {
    if (part.rfind("random=", 0) == 0) {
      spec.random_directions = std::stoi(part.substr(7));
    } else if (part.rfind("norm=", 0) == 0) {
      spec.random_norm = std::stod(part.substr(5));
    } else if (first) {
      std::stringstream items(part);
      std::string item;
      while (std::getline(items, item, ','))
        if (!item.empty()) spec.scales.push_back(std::stod(item));
    } else {
      throw std::invalid_argument("unrecognised theta grid component '" + part + "'");
    }
    first = false;
  }
  if (spec.random_directions < 0 || spec.random_norm <= 0.0)
    throw std::invalid_argument("theta grid: random=K needs K >= 0 and norm > 0");
  for (double t : spec.scales)
    if (!(t >= 0.0)) throw std::invalid_argument("theta grid scales must be nonnegative");
  return spec;
}

std::string ThetaGridSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (i) out += ",";
    out += format_double(scales[i]);
  }
  out += ";random=" + std::to_string(random_directions) + ";norm=" + format_double(random_norm);
  return out;
}

std::vector<ThetaPoint> make_theta_grid(const AlgebraPtr& algebra, const ThetaGridSpec& spec,
                                        std::uint64_t seed) {
  std::vector<ThetaPoint> grid;
  for (double t : spec.scales)
    grid.push_back({"t=" + format_double(t), algebra->identity() * t});
  Rng rng(stream_seed(seed, 0x7e7a));
  for (int i = 0; i < spec.random_directions; ++i) {
    const Element dir = random_cone_element(algebra, rng);
    grid.push_back({"dir" + std::to_string(i + 1), dir * (spec.random_norm / dir.norm())});
  }
  return grid;
}

LaplaceGateReport laplace_gate(const WishartParams& params, std::span<const Element> samples,
                               const std::vector<ThetaPoint>& grid, double threshold,
                               double exact_shape) {
  if (samples.size() < 2) throw std::invalid_argument("laplace_gate needs at least two samples");
  const WishartParams exact_params(exact_shape > 0.0 ? exact_shape : params.shape(),
                                   params.scale());
  LaplaceGateReport report;
  report.threshold = threshold;
  report.pass = true;
  const double n = static_cast<double>(samples.size());
  for (const auto& point : grid) {
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& x : samples) {
      const double w = std::exp(-inner(point.theta, x));
      sum += w;
      sum_sq += w * w;
    }
    LaplaceGatePoint out;
    out.label = point.label;
    out.theta.assign(point.theta.coords().data(),
                     point.theta.coords().data() + point.theta.coords().size());
    out.empirical = sum / n;
    out.exact = laplace(exact_params, point.theta);
    const double var = std::max(0.0, (sum_sq - n * out.empirical * out.empirical) / (n - 1.0));
    out.standard_error = std::sqrt(var / n);
    out.z_score = out.standard_error > 0.0 ? (out.empirical - out.exact) / out.standard_error
                                           : (out.empirical == out.exact ? 0.0 : INFINITY);
    report.pass = report.pass && std::abs(out.z_score) <= threshold;
    report.points.push_back(std::move(out));
  }
  return report;
}

nlohmann::json to_json(const LaplaceGateReport& report) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& p : report.points) {
    grid.push_back({{"label", p.label},
                    {"theta", p.theta},
                    {"empirical", p.empirical},
                    {"exact", p.exact},
                    {"standard_error", p.standard_error},
                    {"z_score", p.z_score}});
  }
  return {{"laplace_grid", grid}, {"threshold", report.threshold}, {"pass", report.pass}};
}

}  // namespace symcone
