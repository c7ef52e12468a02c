#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gmosaic/census.hpp"
#include "gmosaic/count.hpp"

namespace gmosaic {

struct SuiteOutcome {
  std::string name;
  std::size_t checks = 0;
  bool passed = true;
  /// Coordinates and both values of the first disagreement, if any.
  std::string first_mismatch;
};

struct VerifyOptions {
  /// Largest grid (rows * cols) cross-checked against the brute-force count.
  unsigned max_cells = 9;
  unsigned threads = 1;
  /// Replaces the Lucas weights on the formula side (fault injection).
  std::optional<BoundaryWeightTable<Count>> weights;
};

/// Formula-vs-oracle cross-checks: state matrices, magnified matrices,
/// graph counts and boundary weights. Throws ResourceError if max_cells
/// is beyond the oracle's guard.
std::vector<SuiteOutcome> run_verification(const VerifyOptions& options);

}  // namespace gmosaic
