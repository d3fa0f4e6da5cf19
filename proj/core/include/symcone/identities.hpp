#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcone/psi.hpp"

namespace symcone {

struct AlgebraSpec {
  AlgebraKind kind;
  int rank;
  std::optional<int> ambient;

  AlgebraPtr make() const { return make_algebra(kind, rank, ambient); }
  /// "sym r=3", "spin E=4", "albert".
  std::string describe() const;
};

/// The configurations used by dims-table and the acceptance suite: SymReal
/// r = 1..4, HermComplex and HermQuaternion r = 2, 3, spin factors with
/// dim E = 2..6, and the Albert algebra.
std::vector<AlgebraSpec> standard_algebras();

/// Outcome of one numerical identity: the largest (normalised) error seen
/// over `trials` inputs, compared against `tolerance`.
struct CheckRecord {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  int trials = 0;
  std::string detail;
};

nlohmann::json to_json(const CheckRecord& check);

struct IdentityReport {
  AlgebraPtr algebra;
  int dim1 = 0;
  int dim2 = 0;
  double trace_numeric = 0.0;
  double trace_closed = 0.0;
  std::map<std::string, CaseEntry> case_table;
  std::vector<CheckRecord> checks;
  bool pass = false;

  const CheckRecord& check(const std::string& name) const;
};

nlohmann::json to_json(const IdentityReport& report);

struct IdentityOptions {
  std::uint64_t seed = 1;
  /// Random inputs per algebraic identity.
  int trials = 100;
  /// Random s for the q1s / q2s membership checks.
  int quadratic_trials = 50;
};

/// Runs the algebra kernel identities (Jordan identity, symmetry of L, power
/// associativity, frame and Peirce invariants, determinant laws), the trace
/// identities for outer products, and every Psi check: defining relations,
/// spectrum, projectors, dimensions, trace, case table and the Q1 / Q2
/// membership of q1s / q2s.
IdentityReport run_identity_suite(const AlgebraPtr& algebra, const IdentityOptions& options = {});

}  // namespace symcone
