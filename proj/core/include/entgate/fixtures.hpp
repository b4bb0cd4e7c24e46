#pragma once

// Reference states with known verdicts, used by `entgate selftest` and the
// acceptance suite.

#include <optional>
#include <string>
#include <vector>

#include "entgate/criterion.hpp"

namespace entgate {

struct Fixture {
  std::string name;
  std::string description;
  SparseState state;
  VerdictKind expected_kind;
  std::optional<Reason> expected_reason;
  /// One side of the expected witness cut (either side matches).
  std::optional<std::vector<int>> expected_cut;
  /// Canonical forms that must have proportional rows.
  std::vector<std::string> required_forms;
  /// Canonical forms that must not have proportional rows.
  std::vector<std::string> excluded_forms;
  /// Expected coefficient matrix of the first proper structure.
  std::optional<CoeffMatrix> expected_matrix;
  std::optional<bool> expected_corollary3;
  /// Decide with the exhaustive oracle instead of classify().
  bool oracle_only = false;
};

std::vector<Fixture> reference_fixtures();

struct FixtureResult {
  std::string name;
  bool passed = false;
  std::string kind;  // observed verdict kind
  std::vector<std::string> failures;
};

std::vector<FixtureResult> run_fixtures(const std::vector<Fixture>& fixtures);

std::string fixture_results_to_json(const std::vector<FixtureResult>& results, int indent = 2);
std::string fixture_results_to_text(const std::vector<FixtureResult>& results);

}  // namespace entgate
