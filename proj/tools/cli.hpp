#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/algebra.hpp"
#include "symcone/element.hpp"

namespace symcone::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsageError = 2 };

/// Everything a run depends on. A report embeds the resolved RunConfig, and
/// feeding that object back through --config reproduces the run.
struct RunConfig {
  std::string command;
  std::string algebra = "sym";
  std::optional<int> rank;
  std::optional<int> ambient;
  std::optional<double> p;
  std::optional<double> p_prime;
  std::string sigma = "identity";
  std::size_t samples = 100000;
  std::uint64_t seed = 42;
  std::string theta_grid = "default";
  std::optional<double> a;
  std::optional<double> b1;
  std::optional<double> b2;
  std::optional<int> n;
  std::string out;
  bool json = false;

  /// Fills rank, and p / p' when the command needs them, from the algebra.
  void resolve();
  nlohmann::json to_json() const;
  /// Overwrites the fields present in `j`; unknown keys are an error.
  void merge(const nlohmann::json& j);
};

AlgebraPtr make_algebra(const RunConfig& config);

/// identity | diag:l1,...,lr | random:SEED. A diagonal spec sets the spectral
/// values on the standard frame.
Element parse_sigma(const AlgebraPtr& algebra, const std::string& spec);

nlohmann::json cmd_info(const RunConfig& config);
nlohmann::json cmd_check_identities(const RunConfig& config);
nlohmann::json cmd_verify(const RunConfig& config);
nlohmann::json cmd_recover(const RunConfig& config);
nlohmann::json cmd_dims_table(const RunConfig& config);

/// Indented key: value listing of a report.
std::string render_text(const nlohmann::json& report);

/// Parses argv, runs the subcommand, writes the report to `out` (and to the
/// --out file) and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcone::cli
