#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symcone/symcone.hpp"

namespace symcone::cli {
namespace {

nlohmann::json algebra_summary(const JordanAlgebra& alg) {
  nlohmann::json j = {{"kind", long_name(alg.kind())},
                      {"r", alg.rank()},
                      {"d", alg.peirce()},
                      {"n", alg.dim()}};
  if (alg.spin_ambient_dim()) j["ambient"] = *alg.spin_ambient_dim();
  return j;
}

std::vector<double> split_doubles(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

nlohmann::json base_report(const RunConfig& config) {
  return {{"command", config.command}, {"config", config.to_json()}};
}

bool all_pass(const nlohmann::json& checks) {
  for (const auto& [name, c] : checks.items())
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

// Concatenates per-(s, theta) differential reports into one report for index i.
VerificationReport differential_report(const WishartParams& x, const WishartParams& y, int i,
                                       const std::vector<Element>& s_list,
                                       const std::vector<ThetaPoint>& grid) {
  VerificationReport merged;
  const CumulantEvaluator kappa(x);
  for (std::size_t si = 0; si < s_list.size(); ++si) {
    for (const auto& point : grid) {
      if (!kappa.in_domain(point.theta)) continue;
      auto rep = verify_diff_identity(x, y, i, s_list[si], point.theta);
      if (merged.records.empty()) {
        merged.identity = rep.identity;
        merged.statistic = rep.statistic;
        merged.coefficient = rep.coefficient;
        merged.threshold = rep.threshold;
      }
      rep.records.front().label = "s" + std::to_string(si + 1) + " " + point.label;
      merged.records.push_back(std::move(rep.records.front()));
    }
  }
  merged.finalize();
  return merged;
}

void render(const nlohmann::json& j, int indent, std::ostringstream& os) {
  const std::string pad(indent, ' ');
  auto scalar = [](const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  };
  auto is_flat = [](const nlohmann::json& v) {
    for (const auto& x : v)
      if (x.is_structured()) return false;
    return true;
  };
  for (const auto& [key, value] : j.items()) {
    if (!value.is_structured()) {
      os << pad << key << ": " << scalar(value) << "\n";
    } else if (value.is_array() && is_flat(value)) {
      os << pad << key << ": " << value.dump() << "\n";
    } else if (value.is_array()) {
      os << pad << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          os << pad << "  -\n";
          render(item, indent + 4, os);
        } else {
          os << pad << "  - " << item.dump() << "\n";
        }
      }
    } else {
      os << pad << key << ":\n";
      render(value, indent + 2, os);
    }
  }
}

}  // namespace

void RunConfig::resolve() {
  const AlgebraKind kind = parse_kind(algebra);
  if (!rank) rank = kind == AlgebraKind::Albert ? 3 : 2;
  if (command == "info" || command == "check-identities" || command == "dims-table") return;
  if (command == "recover" && a && b1 && b2) return;
  const auto alg = cli::make_algebra(*this);
  if (!p) p = alg->half_peirce() * (alg->rank() - 1) + 1.0;
  if (!p_prime) p_prime = *p + 1.0;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j = {{"command", command},         {"algebra", algebra},
                      {"sigma", sigma},             {"samples", samples},
                      {"seed", seed},               {"theta_grid", theta_grid},
                      {"json", json}};
  auto put = [&j](const char* key, const auto& opt) {
    if (opt) j[key] = *opt;
  };
  put("rank", rank);
  put("ambient", ambient);
  put("p", p);
  put("pp", p_prime);
  put("a", a);
  put("b1", b1);
  put("b2", b2);
  put("n", n);
  if (!out.empty()) j["out"] = out;
  return j;
}

void RunConfig::merge(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "command") command = v.get<std::string>();
    else if (key == "algebra") algebra = v.get<std::string>();
    else if (key == "rank") rank = v.get<int>();
    else if (key == "ambient") ambient = v.get<int>();
    else if (key == "p") p = v.get<double>();
    else if (key == "pp") p_prime = v.get<double>();
    else if (key == "sigma") sigma = v.get<std::string>();
    else if (key == "samples") samples = v.get<std::size_t>();
    else if (key == "seed") seed = v.get<std::uint64_t>();
    else if (key == "theta_grid") theta_grid = v.get<std::string>();
    else if (key == "a") a = v.get<double>();
    else if (key == "b1") b1 = v.get<double>();
    else if (key == "b2") b2 = v.get<double>();
    else if (key == "n") n = v.get<int>();
    else if (key == "out") out = v.get<std::string>();
    else if (key == "json") json = v.get<bool>();
    else throw std::invalid_argument("unknown config key '" + key + "'");
  }
}

AlgebraPtr make_algebra(const RunConfig& config) {
  const AlgebraKind kind = parse_kind(config.algebra);
  if (kind == AlgebraKind::SpinFactor && !config.ambient)
    throw InvalidAlgebra("the spin factor needs --ambient (dim E >= 2)");
  if (kind != AlgebraKind::SpinFactor && config.ambient)
    throw InvalidAlgebra("--ambient applies to the spin factor only");
  const int rank = config.rank.value_or(kind == AlgebraKind::Albert ? 3 : 2);
  return symcone::make_algebra(kind, rank, config.ambient);
}

Element parse_sigma(const AlgebraPtr& algebra, const std::string& spec) {
  if (spec == "identity") return algebra->identity();
  if (spec.rfind("diag:", 0) == 0) {
    const auto values = split_doubles(spec.substr(5));
    if (static_cast<int>(values.size()) != algebra->rank())
      throw std::invalid_argument("diag sigma needs " + std::to_string(algebra->rank()) +
                                  " values");
    const JordanFrame frame = standard_frame(algebra);
    Element sigma = algebra->zero();
    for (std::size_t i = 0; i < values.size(); ++i)
      sigma = sigma + frame.idempotents[i] * values[i];
    return sigma;
  }
  if (spec.rfind("random:", 0) == 0) {
    Rng rng(std::stoull(spec.substr(7)));
    return random_cone_element(algebra, rng);
  }
  throw std::invalid_argument("sigma must be identity, diag:l1,...,lr or random:SEED");
}

nlohmann::json cmd_info(const RunConfig& config) {
  const auto alg = make_algebra(config);
  const PsiOperator psi = build_psi(alg);
  const SpectralSplit split = spectral_split(psi);
  const GyndikinSet gy = GyndikinSet::of(*alg);
  auto report = base_report(config);
  report["algebra"] = algebra_summary(*alg);
  report["dim_F1"] = split.dim1;
  report["dim_F2"] = split.dim2;
  report["trace_psi"] = trace_psi(psi);
  report["trace_psi_closed"] = trace_psi_closed(alg->rank(), alg->peirce());
  report["gyndikin"] = {{"discrete_points", gy.discrete_points()},
                        {"continuous_threshold", gy.continuous_threshold()}};
  report["pass"] = true;
  return report;
}

nlohmann::json cmd_check_identities(const RunConfig& config) {
  const auto alg = make_algebra(config);
  IdentityOptions options;
  options.seed = config.seed;
  const IdentityReport result = run_identity_suite(alg, options);
  auto report = base_report(config);
  const nlohmann::json body = to_json(result);
  for (const auto& [key, value] : body.items()) report[key] = value;
  return report;
}

nlohmann::json cmd_verify(const RunConfig& config) {
  const auto alg = make_algebra(config);
  if (alg->kind() != AlgebraKind::SymReal && alg->kind() != AlgebraKind::HermComplex)
    throw UnsupportedKind("verify needs a sampler; supported kinds are sym and herm (got " +
                          std::string(short_name(alg->kind())) + ")");
  const Element sigma = parse_sigma(alg, config.sigma);
  const WishartParams x(*config.p, sigma);
  const WishartParams y(*config.p_prime, sigma);
  const auto constants = constants_from_shapes(x.shape(), y.shape(), alg->peirce());
  const auto grid =
      make_theta_grid(alg, ThetaGridSpec::parse(config.theta_grid), stream_seed(config.seed, 2));

  Rng s_rng(stream_seed(config.seed, 3));
  std::vector<Element> s_list{alg->identity()};
  for (int k = 0; k < 2; ++k) s_list.push_back(random_cone_element(alg, s_rng));

  Rng q_rng(stream_seed(config.seed, 4));
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(alg->dim(), alg->dim());
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = normal(q_rng) / alg->dim();
  const QuadraticForm mixed_q(SymEndo(alg, 0.5 * (m + m.transpose())));
  const PsiOperator psi = build_psi(alg);
  const SpectralSplit split = spectral_split(psi);

  const PairedSample pair = draw_pair(x, y, config.samples, config.seed);
  nlohmann::json checks;
  checks["laplace_x"] = to_json(laplace_gate(x, pair.x, grid));
  checks["laplace_sum"] = to_json(laplace_gate(x, pair.sum, grid, 3.0, x.shape() + y.shape()));
  checks["linear"] = to_json(check_linear(pair, grid, constants.a));
  checks["quadratic_q1"] = to_json(check_quadratic(pair, 1, s_list, grid, constants.b1));
  checks["quadratic_q2"] = to_json(check_quadratic(pair, 2, s_list, grid, constants.b2));
  checks["mixed"] = to_json(check_mixed(pair, mixed_q, psi, split, constants, grid));
  checks["differential_q1"] = to_json(differential_report(x, y, 1, s_list, grid));
  if (split.dim2 > 0)
    checks["differential_q2"] = to_json(differential_report(x, y, 2, s_list, grid));

  auto report = base_report(config);
  report["algebra"] = algebra_summary(*alg);
  report["sigma"] = std::vector<double>(sigma.coords().data(),
                                        sigma.coords().data() + sigma.coords().size());
  report["constants"] = to_json(constants);
  const auto pi = diff_constants(constants);
  report["differential_constants"] = {{"p1", pi.p1}, {"p2", pi.p2}};
  report["sampler"] = {
      {"path", sampling_path(x) == SamplingPath::RankOne ? "rank_one" : "bartlett"},
      {"stream_layout", stream_layout_description(SamplerOptions{}.chunk_size)},
      {"x_stream", 0},
      {"y_stream", 1}};
  report["theta_grid"] = ThetaGridSpec::parse(config.theta_grid).to_string();
  report["checks"] = checks;
  report["pass"] = all_pass(checks);
  return report;
}

nlohmann::json cmd_recover(const RunConfig& config) {
  auto report = base_report(config);
  double a = 0, b1 = 0, b2 = 0;
  int n = 0;
  if (config.a || config.b1 || config.b2) {
    if (!(config.a && config.b1 && config.b2))
      throw std::invalid_argument("recover needs all of --a, --b1, --b2");
    a = *config.a;
    b1 = *config.b1;
    b2 = *config.b2;
    if (!config.n) throw std::invalid_argument("recover with explicit constants needs --n");
    n = *config.n;
  } else {
    const auto alg = make_algebra(config);
    const auto c = constants_from_shapes(*config.p, *config.p_prime, alg->peirce());
    report["source"] = {{"algebra", algebra_summary(*alg)}, {"constants", to_json(c)}};
    a = c.a;
    b1 = c.b1;
    b2 = c.b2;
    n = config.n.value_or(alg->dim());
  }
  report["input"] = {{"a", a}, {"b1", b1}, {"b2", b2}, {"n", n}};
  try {
    report["recovered"] = to_json(recover_structure(a, b1, b2, n));
    report["pass"] = true;
  } catch (const InconsistentConstants& e) {
    report["error"] = e.what();
    report["pass"] = false;
  }
  return report;
}

nlohmann::json cmd_dims_table(const RunConfig& config) {
  auto report = base_report(config);
  nlohmann::json rows = nlohmann::json::array();
  bool pass = true;
  for (const auto& spec : standard_algebras()) {
    const auto alg = spec.make();
    const PsiOperator psi = build_psi(alg);
    const SpectralSplit split = spectral_split(psi);
    const SplitDims closed = dims_closed_form(alg->rank(), alg->peirce());
    const double tr = trace_psi(psi);
    const double tr_closed = trace_psi_closed(alg->rank(), alg->peirce());
    const bool match = closed.dim1 == split.dim1 && closed.dim2 == split.dim2 &&
                       std::abs(tr - tr_closed) <= 1e-8;
    pass = pass && match;
    rows.push_back({{"algebra", spec.describe()},
                    {"r", alg->rank()},
                    {"d", alg->peirce()},
                    {"n", alg->dim()},
                    {"dim_F1", split.dim1},
                    {"dim_F2", split.dim2},
                    {"dim_F1_closed", closed.dim1},
                    {"dim_F2_closed", closed.dim2},
                    {"trace_psi", tr},
                    {"trace_psi_closed", tr_closed},
                    {"match", match}});
  }
  report["rows"] = rows;
  report["pass"] = pass;
  return report;
}

std::string render_text(const nlohmann::json& report) {
  std::ostringstream os;
  render(report, 0, os);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jordan algebra, symmetric cone and Wishart regression toolkit", "symcone"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, algebra, sigma, theta_grid, out_path;
  int rank = 0, ambient = 0, n = 0;
  double p = 0, pp = 0, a = 0, b1 = 0, b2 = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool json = false;

  app.add_option("--config", config_path, "JSON file with the same keys as the flags");
  auto* o_alg = app.add_option("--algebra", algebra, "sym | herm | quat | spin | albert");
  auto* o_rank = app.add_option("--rank", rank, "rank r")->check(CLI::PositiveNumber);
  auto* o_amb = app.add_option("--ambient", ambient, "dim E for the spin factor");
  auto* o_p = app.add_option("--p", p, "shape of X");
  auto* o_pp = app.add_option("--pp", pp, "shape of Y");
  auto* o_sigma = app.add_option("--sigma", sigma, "identity | diag:l1,...,lr | random:SEED");
  auto* o_samples = app.add_option("--samples", samples, "Monte Carlo sample count")
                        ->check(CLI::Range(std::size_t{2}, std::size_t{100000000}));
  auto* o_seed = app.add_option("--seed", seed, "64-bit seed");
  auto* o_grid = app.add_option("--theta-grid", theta_grid,
                                "default, or t1,t2,...;random=K;norm=X");
  auto* o_a = app.add_option("--a", a, "regression constant a (recover)");
  auto* o_b1 = app.add_option("--b1", b1, "regression constant b1 (recover)");
  auto* o_b2 = app.add_option("--b2", b2, "regression constant b2 (recover)");
  auto* o_n = app.add_option("--n", n, "dimension of V (recover)");
  auto* o_out = app.add_option("--out", out_path, "also write the JSON report here");
  auto* o_json = app.add_flag("--json", json, "print JSON instead of text");

  app.add_subcommand("info", "algebra summary, split dimensions and Gyndikin set");
  app.add_subcommand("check-identities", "algebraic identity and Psi checks");
  app.add_subcommand("verify", "Monte Carlo regression and differential identities");
  app.add_subcommand("recover", "recover (d, r, kind) from regression constants");
  app.add_subcommand("dims-table", "split dimensions for the standard algebras");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  RunConfig config;
  nlohmann::json report;
  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw std::invalid_argument("cannot read config file " + config_path);
      config.merge(nlohmann::json::parse(in));
    }
    config.command = app.get_subcommands().front()->get_name();
    if (o_alg->count()) config.algebra = algebra;
    if (o_rank->count()) config.rank = rank;
    if (o_amb->count()) config.ambient = ambient;
    if (o_p->count()) config.p = p;
    if (o_pp->count()) config.p_prime = pp;
    if (o_sigma->count()) config.sigma = sigma;
    if (o_samples->count()) config.samples = samples;
    if (o_seed->count()) config.seed = seed;
    if (o_grid->count()) config.theta_grid = theta_grid;
    if (o_a->count()) config.a = a;
    if (o_b1->count()) config.b1 = b1;
    if (o_b2->count()) config.b2 = b2;
    if (o_n->count()) config.n = n;
    if (o_out->count()) config.out = out_path;
    if (o_json->count()) config.json = json;
    config.resolve();

    if (config.command == "info") report = cmd_info(config);
    else if (config.command == "check-identities") report = cmd_check_identities(config);
    else if (config.command == "verify") report = cmd_verify(config);
    else if (config.command == "recover") report = cmd_recover(config);
    else report = cmd_dims_table(config);
  } catch (const nlohmann::json::exception& e) {
    err << "error: config: " << e.what() << "\n";
    return kUsageError;
  } catch (const StructuralFailure& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  const std::string text = report.dump(2) + "\n";
  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kUsageError;
    }
    file << text;
  }
  out << (config.json ? text : render_text(report));
  if (report.contains("error")) err << "error: " << report["error"].get<std::string>() << "\n";
  return report.at("pass").get<bool>() ? kPass : kCheckFailed;
}

}  // namespace symcone::cli
