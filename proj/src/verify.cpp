#include "gmosaic/verify.hpp"

#include <algorithm>

#include "gmosaic/magnified.hpp"
#include "gmosaic/oracle.hpp"
#include "gmosaic/state_matrices.hpp"

namespace gmosaic {

namespace {

void record(SuiteOutcome& suite, bool ok, const std::string& where, const Count& formula, const Count& brute) {
  ++suite.checks;
  if (ok || !suite.passed) return;
  suite.passed = false;
  suite.first_mismatch = where + ": formula " + formula.str() + ", oracle " + brute.str();
}

void compare_matrices(SuiteOutcome& suite, const std::string& label, const Matrix<Count>& formula,
                      const Matrix<Count>& brute) {
  for (std::size_t i = 0; i < formula.dim(); ++i) {
    for (std::size_t j = 0; j < formula.dim(); ++j) {
      record(suite, formula(i, j) == brute(i, j),
             label + " entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")", formula(i, j),
             brute(i, j));
    }
  }
}

}  // namespace

std::vector<SuiteOutcome> run_verification(const VerifyOptions& options) {
  if (options.max_cells > oracle::kMaxGraphCells) {
    throw ResourceError("verify is limited to " + std::to_string(oracle::kMaxGraphCells) + " cells");
  }
  const unsigned cells = options.max_cells;
  std::vector<SuiteOutcome> suites;

  SuiteOutcome states;
  states.name = "state-matrices";
  for (unsigned m = 1; m <= std::min(oracle::kMaxStateLevel, cells); ++m) {
    const StateMatrices<Count> built = build_state_matrices<Count>(m);
    for (StateKind kind : kAllStateKinds) {
      compare_matrices(states, std::string(kind_name(kind)) + " m=" + std::to_string(m), built[kind],
                       oracle::brute_state_matrix(m, kind));
    }
  }
  suites.push_back(states);

  SuiteOutcome magnified;
  magnified.name = "magnified";
  for (unsigned m = 1; m < oracle::kMaxMagnifiedLevel; ++m) {
    for (unsigned n = 1; m + n <= oracle::kMaxMagnifiedLevel; ++n) {
      if (m * n > cells) continue;
      const std::string label = "N(" + std::to_string(m) + "," + std::to_string(n) + ")";
      compare_matrices(magnified, label, build_magnified<Count>(m, n, {options.threads}).entries,
                       oracle::brute_magnified(m, n).entries);
    }
  }
  suites.push_back(magnified);

  SuiteOutcome graphs;
  graphs.name = "graph-counts";
  const CensusOptions census{Backend::Bignum, options.threads};
  for (unsigned rows = 1; rows <= cells; ++rows) {
    for (unsigned cols = 1; rows * cols <= cells; ++cols) {
      const Count formula =
          count_graph_mosaics_as<Count>(rows, cols, census, options.weights ? &*options.weights : nullptr);
      const Count brute = oracle::brute_count_graph_mosaics(rows, cols);
      record(graphs, formula == brute, "D(" + std::to_string(rows) + "," + std::to_string(cols) + ")", formula,
             brute);
    }
  }
  suites.push_back(graphs);

  SuiteOutcome bridges;
  bridges.name = "boundary-weights";
  const BoundaryWeightTable<Count> weights = options.weights ? *options.weights : BoundaryWeightTable<Count>(12);
  for (unsigned t = 1; t <= std::min(12u, weights.max_k()); ++t) {
    const Count brute = oracle::brute_bridge_count(t);
    record(bridges, weights[t] == brute, "F_" + std::to_string(t), weights[t], brute);
  }
  suites.push_back(bridges);

  return suites;
}

}  // namespace gmosaic
