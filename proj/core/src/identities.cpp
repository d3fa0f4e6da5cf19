#include "symcone/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "symcone/errors.hpp"
#include "symcone/frame.hpp"
#include "symcone/quadratic.hpp"
#include "symcone/random.hpp"

namespace symcone {
namespace {

double tr_prod(const Eigen::MatrixXd& f, const Eigen::MatrixXd& g) {
  return (f.array() * g.transpose().array()).sum();
}

// Accumulates the worst normalised error of one identity.
class Tracker {
 public:
  Tracker(std::string name, double tolerance) {
    rec_.name = std::move(name);
    rec_.tolerance = tolerance;
  }

  void add(double error) {
    if (!std::isfinite(error)) error = INFINITY;
    rec_.max_error = std::max(rec_.max_error, error);
    ++rec_.trials;
  }
  void add(double lhs, double rhs, double scale) {
    add(std::abs(lhs - rhs) / std::max(1.0, scale));
  }
  void detail(std::string text) { rec_.detail = std::move(text); }

  CheckRecord done() {
    rec_.pass = rec_.trials > 0 && rec_.max_error <= rec_.tolerance;
    return rec_;
  }

 private:
  CheckRecord rec_;
};

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

void kernel_checks(const AlgebraPtr& alg, Rng& rng, int trials, std::vector<CheckRecord>& out) {
  const int n = alg->dim();

  Tracker jordan("jordan_identity", 1e-10);
  auto jordan_error = [&](const Element& x, const Element& y) {
    const Element x2 = x.square();
    const Element diff = product(x2, product(x, y)) - product(x, product(x2, y));
    return diff.norm() / (1.0 + std::pow(x.norm(), 3) * y.norm());
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jordan.add(jordan_error(alg->basis(i), alg->basis(j)));
  for (int t = 0; t < trials; ++t)
    jordan.add(jordan_error(random_element(alg, rng), random_element(alg, rng)));
  out.push_back(jordan.done());

  Tracker lsym("l_symmetric", 1e-12);
  Tracker power("power_associativity", 1e-10);
  Tracker comm("commutativity", 1e-12);
  for (int t = 0; t < trials; ++t) {
    const Element x = random_element(alg, rng);
    const Element y = random_element(alg, rng);
    const Eigen::MatrixXd l = alg->multiplication_matrix(x.coords());
    lsym.add(max_abs(l - l.transpose()) / std::max(1.0, x.norm()));
    const Element x2 = x.square();
    power.add((product(x2, x2) - product(x, product(x, x2))).norm() /
              std::max(1.0, std::pow(x.norm(), 4)));
    comm.add((product(x, y) - product(y, x)).norm() / std::max(1.0, x.norm() * y.norm()));
  }
  out.push_back(lsym.done());
  out.push_back(power.done());
  out.push_back(comm.done());

  Tracker frame("frame_and_peirce", 1e-10);
  const JordanFrame jf = standard_frame(alg);
  try {
    validate_frame(jf);
    const PeirceBasis pb = peirce_basis(alg, jf);
    const int r = alg->rank();
    for (int s = 0; s < r; ++s) {
      for (int t = s; t < r; ++t) {
        const auto& block = pb.blocks.at({s, t});
        const int expected = s == t ? 1 : alg->peirce();
        frame.add(std::abs(static_cast<double>(block.size()) - expected));
        for (const Element& x : block) {
          if (s == t) {
            frame.add((product(jf.idempotents[s], x) - x).norm());
          } else {
            const Element half = (jf.idempotents[s] + jf.idempotents[t]) * 0.5;
            frame.add((x.square() - half).norm());
            frame.add((product(jf.idempotents[s], x) - x * 0.5).norm());
            frame.add((product(jf.idempotents[t], x) - x * 0.5).norm());
          }
        }
      }
    }
    frame.add(max_abs(pb.change_of_basis().transpose() * pb.change_of_basis() -
                      Eigen::MatrixXd::Identity(n, n)));
  } catch (const std::exception& e) {
    frame.add(INFINITY);
    frame.detail(e.what());
  }
  out.push_back(frame.done());

  Tracker det("determinant_laws", 1e-10);
  det.add(determinant(alg->identity()), 1.0, 1.0);
  for (int t = 0; t < trials; ++t) {
    const Element x = random_element(alg, rng);
    const Element y = random_element(alg, rng);
    const double dx = determinant(x);
    const double lambda = 0.5 + std::uniform_real_distribution<double>(0.0, 1.5)(rng);
    det.add(determinant(x * lambda), std::pow(lambda, alg->rank()) * dx,
            std::abs(std::pow(lambda, alg->rank()) * dx));
    const double dy = determinant(y);
    det.add(determinant(pmap(y).apply(x)), dy * dy * dx, std::abs(dy * dy * dx));
  }
  out.push_back(det.done());

  if (alg->kind() == AlgebraKind::SpinFactor) {
    Tracker ch("spin_cayley_hamilton", 1e-10);
    for (int t = 0; t < trials; ++t) {
      const Element x = random_element(alg, rng);
      const Element res = x.square() - x * trace(x) + alg->identity() * determinant(x);
      ch.add(res.norm() / std::max(1.0, x.norm() * x.norm()));
    }
    out.push_back(ch.done());
  }
}

void trace_identity_checks(const AlgebraPtr& alg, Rng& rng, int trials,
                           std::vector<CheckRecord>& out) {
  auto rnd = [&] { return random_element(alg, rng); };

  Tracker t1("trace_outer", 1e-10);
  Tracker t2("trace_outer_pair", 1e-10);
  Tracker t3("trace_outer_cyclic3", 1e-10);
  Tracker t4("trace_lmap_outer", 1e-10);
  Tracker t5("trace_pmap_outer", 1e-10);
  for (int t = 0; t < trials; ++t) {
    const Element a = rnd(), b = rnd(), c = rnd(), d = rnd();
    t1.add(outer(a, b).trace(), inner(a, b), a.norm() * b.norm());

    const double scale4 = a.norm() * b.norm() * c.norm() * d.norm();
    t2.add((outer(a, b) * outer(c, d)).trace(), inner(a, d) * inner(b, c), scale4);

    const Element a3 = rnd(), b3 = rnd();
    const LinearMap chain = outer(a, b) * outer(c, d) * outer(a3, b3);
    // Tr((a1 (x) b1)(a2 (x) b2)(a3 (x) b3)) = tr(a1 b3) tr(a2 b1) tr(a3 b2)
    t3.add(chain.trace(), inner(a, b3) * inner(c, b) * inner(a3, d),
           scale4 * a3.norm() * b3.norm());

    const LinearMap llcd = LinearMap(lmap(a)) * LinearMap(lmap(b)) * outer(c, d);
    t4.add(llcd.trace(), inner(product(a, product(b, c)), d), scale4);

    const SymEndo pa = pmap(a);
    t5.add((LinearMap(pa) * outer(b, c)).trace(), inner(pa.apply(b), c),
           a.norm() * a.norm() * b.norm() * c.norm());
  }
  out.push_back(t1.done());
  out.push_back(t2.done());
  out.push_back(t3.done());
  out.push_back(t4.done());
  out.push_back(t5.done());

  Tracker round("endo_q_roundtrip", 1e-10);
  const int n = alg->dim();
  for (int t = 0; t < std::min(trials, 20); ++t) {
    Eigen::MatrixXd m(n, n);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = normal(rng);
    const SymEndo f(alg, 0.5 * (m + m.transpose()));
    const SymEndo back = endo_of_q(alg, [&](const Element& x) { return q_of_endo(f, x); });
    round.add(max_abs(back.mat() - f.mat()) / std::max(1.0, max_abs(f.mat())));
  }
  out.push_back(round.done());
}

void psi_checks(const AlgebraPtr& alg, const PsiOperator& psi, const SpectralSplit& split,
                Rng& rng, const IdentityOptions& options, IdentityReport& report) {
  auto& out = report.checks;
  const double dp = alg->half_peirce();
  const int big_n = psi.size();
  const Eigen::MatrixXd id_f = Eigen::MatrixXd::Identity(big_n, big_n);

  Tracker sym("psi_symmetric", 1e-10);
  sym.add(psi.symmetry_residual());
  out.push_back(sym.done());

  Tracker square("psi_of_square", 1e-10);
  Tracker clm("psi_of_pmap", 1e-10);
  for (int t = 0; t < options.trials; ++t) {
    const Element y = random_element(alg, rng);
    const double scale = std::max(1.0, y.norm() * y.norm());
    const SymEndo yy(outer(y, y));
    const SymEndo py = pmap(y);
    square.add(max_abs(psi.apply(yy).mat() - py.mat()) / scale);
    const SymEndo rhs = yy * dp + py * (1.0 - dp);
    clm.add(max_abs(psi.apply(py).mat() - rhs.mat()) / (scale * scale));
  }
  out.push_back(square.done());
  out.push_back(clm.done());

  Tracker spectrum("psi_spectrum", 1e-9);
  spectrum.add(split.spectrum_residual);
  spectrum.detail("eigenvalues 1 and " + std::to_string(-dp));
  out.push_back(spectrum.done());

  Tracker proj("projectors", 1e-9);
  proj.add(max_abs(split.proj1 * split.proj1 - split.proj1));
  proj.add(max_abs(split.proj2 * split.proj2 - split.proj2));
  proj.add(max_abs(split.proj1 * split.proj2));
  proj.add(max_abs(split.proj1 + split.proj2 - id_f));
  out.push_back(proj.done());

  Tracker dims("dimensions", 0.0);
  try {
    const SplitDims closed = dims_closed_form(alg->rank(), alg->peirce());
    dims.add(std::abs(static_cast<double>(closed.dim1 - split.dim1)));
    dims.add(std::abs(static_cast<double>(closed.dim2 - split.dim2)));
    dims.add(std::abs(static_cast<double>(split.numeric_mult1 - split.dim1)));
    dims.add(std::abs(static_cast<double>(split.numeric_mult2 - split.dim2)));
    dims.detail("closed form (" + std::to_string(closed.dim1) + ", " +
                std::to_string(closed.dim2) + ")");
  } catch (const std::exception& e) {
    dims.add(INFINITY);
    dims.detail(e.what());
  }
  out.push_back(dims.done());

  Tracker trace("trace_psi", 1e-8);
  trace.add(std::abs(report.trace_numeric - report.trace_closed));
  out.push_back(trace.done());

  Tracker values("case_values", 1e-9);
  Tracker counts("case_counts", 0.0);
  double table_sum = 0.0;
  for (const auto& [label, entry] : report.case_table) {
    counts.add(std::abs(static_cast<double>(entry.count - entry.expected_count)));
    if (entry.count == 0) continue;
    values.add(std::max(std::abs(entry.min_value - entry.expected_value),
                        std::abs(entry.max_value - entry.expected_value)));
    table_sum += entry.value * entry.count;
  }
  values.add(std::abs(table_sum - report.trace_numeric));
  out.push_back(values.done());
  out.push_back(counts.done());

  // f_l lies in F1 exactly when C_l = 1; no basis element lies in F2.
  Tracker cls("case_f1_membership", 1e-9);
  for (int l = 0; l < big_n; ++l) {
    const Eigen::VectorXd f = Eigen::VectorXd::Unit(big_n, l);
    const double c = psi.matrix()(l, l);
    const double p2 = (split.proj2 * f).norm();
    const double p1 = (split.proj1 * f).norm();
    if (std::abs(c - 1.0) <= 1e-9)
      cls.add(p2);
    else
      cls.add(p2 > 1e-6 ? 0.0 : 1.0);
    cls.add(p1 > 1e-6 ? 0.0 : 1.0);
  }
  out.push_back(cls.done());

  Tracker q1("q1s_in_f1", 1e-9);
  Tracker q2("q2s_in_f2", 1e-9);
  for (int t = 0; t < options.quadratic_trials; ++t) {
    const Element s = random_element(alg, rng);
    const Eigen::VectorXd f1 = psi.to_f_coords(q1s(s).endo());
    const Eigen::VectorXd f2 = psi.to_f_coords(q2s(s).endo());
    q1.add((split.proj2 * f1).norm() / std::max(1.0, f1.norm()));
    q2.add((split.proj1 * f2).norm() / std::max(1.0, f2.norm()));
  }
  out.push_back(q1.done());
  out.push_back(q2.done());

  Tracker orth("f1_orthogonal_f2", 1e-9);
  Tracker crit("membership_criterion", 1e-9);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int t = 0; t < options.trials; ++t) {
    Eigen::VectorXd g(big_n), h(big_n);
    for (int l = 0; l < big_n; ++l) {
      g[l] = normal(rng);
      h[l] = normal(rng);
    }
    const Eigen::VectorXd f1 = split.proj1 * g;
    const Eigen::VectorXd f2 = split.proj2 * h;
    orth.add(std::abs(tr_prod(psi.from_f_coords(f1).mat(), psi.from_f_coords(f2).mat())) /
             std::max(1.0, f1.norm() * f2.norm()));
    // Tr[Psi(f) f] - Tr(f^2) = -(1 + d') |proj2 f|^2, so the gap vanishes
    // exactly on F1 and is strictly negative off it.
    auto gap = [&](const Eigen::VectorXd& f) { return f.dot(psi.matrix() * f) - f.dot(f); };
    crit.add(std::abs(gap(f1)) / std::max(1.0, f1.squaredNorm()));
    const double p2 = (split.proj2 * g).squaredNorm();
    crit.add(gap(g), -(1.0 + dp) * p2, g.squaredNorm());
    if (split.dim2 > 0 && p2 > 1e-6 && gap(g) >= -1e-9) crit.add(1.0);
  }
  out.push_back(orth.done());
  out.push_back(crit.done());

  if (alg->kind() == AlgebraKind::SpinFactor) {
    Tracker refl("spin_reflection_in_f2", 1e-12);
    const Element e = alg->identity();
    const SymEndo s_map = SymEndo(outer(e, e)) - pmap(e);
    const Eigen::VectorXd fs = psi.to_f_coords(s_map);
    refl.add((split.proj1 * fs).norm());
    for (int i = 0; i < alg->dim(); ++i) {
      const double sign = i == 0 ? 1.0 : -1.0;
      refl.add((s_map.apply(alg->basis(i)) - alg->basis(i) * sign).norm());
    }
    out.push_back(refl.done());
  }
}

}  // namespace

std::string AlgebraSpec::describe() const {
  std::string out(short_name(kind));
  if (kind == AlgebraKind::SpinFactor) return out + " E=" + std::to_string(ambient.value_or(0));
  if (kind == AlgebraKind::Albert) return out;
  return out + " r=" + std::to_string(rank);
}

std::vector<AlgebraSpec> standard_algebras() {
  std::vector<AlgebraSpec> out;
  for (int r = 1; r <= 4; ++r) out.push_back({AlgebraKind::SymReal, r, std::nullopt});
  for (int r = 2; r <= 3; ++r) out.push_back({AlgebraKind::HermComplex, r, std::nullopt});
  for (int r = 2; r <= 3; ++r) out.push_back({AlgebraKind::HermQuaternion, r, std::nullopt});
  for (int m = 2; m <= 6; ++m) out.push_back({AlgebraKind::SpinFactor, 2, m});
  out.push_back({AlgebraKind::Albert, 3, std::nullopt});
  return out;
}

nlohmann::json to_json(const CheckRecord& check) {
  nlohmann::json j = {{"name", check.name},
                      {"max_error", check.max_error},
                      {"tolerance", check.tolerance},
                      {"trials", check.trials},
                      {"pass", check.pass}};
  if (!check.detail.empty()) j["detail"] = check.detail;
  return j;
}

const CheckRecord& IdentityReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range("no identity check named " + name);
}

nlohmann::json to_json(const IdentityReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  const auto& alg = *report.algebra;
  return {{"algebra", long_name(alg.kind())},
          {"r", alg.rank()},
          {"d", alg.peirce()},
          {"n", alg.dim()},
          {"dim_F1", report.dim1},
          {"dim_F2", report.dim2},
          {"trace_psi_numeric", report.trace_numeric},
          {"trace_psi_closed", report.trace_closed},
          {"case_table", to_json(report.case_table)},
          {"checks", checks},
          {"pass", report.pass}};
}

IdentityReport run_identity_suite(const AlgebraPtr& algebra, const IdentityOptions& options) {
  IdentityReport report;
  report.algebra = algebra;
  Rng rng(stream_seed(options.seed, 0x1d));

  kernel_checks(algebra, rng, options.trials, report.checks);
  trace_identity_checks(algebra, rng, options.trials, report.checks);

  const PsiOperator psi = build_psi(algebra);
  report.trace_numeric = trace_psi(psi);
  report.trace_closed = trace_psi_closed(algebra->rank(), algebra->peirce());
  report.case_table = case_table(psi);
  try {
    const SpectralSplit split = spectral_split(psi);
    report.dim1 = split.dim1;
    report.dim2 = split.dim2;
    psi_checks(algebra, psi, split, rng, options, report);
  } catch (const StructuralFailure& e) {
    CheckRecord failed{"psi_spectrum", INFINITY, 1e-9, false, 1, e.what()};
    report.checks.push_back(failed);
  }

  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const CheckRecord& c) { return c.pass; });
  return report;
}

}  // namespace symcone
