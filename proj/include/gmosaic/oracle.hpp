#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gmosaic/count.hpp"
#include "gmosaic/magnified.hpp"
#include "gmosaic/matrix.hpp"
#include "gmosaic/state_matrices.hpp"
#include "gmosaic/state_word.hpp"
#include "gmosaic/tile.hpp"

// Brute-force ground truth. Everything here enumerates actual tile grids;
// nothing below reuses the recursion, the state indexing, or the boundary
// weights of the formula path. Only the tile table is shared.
namespace gmosaic::oracle {

inline constexpr unsigned kMaxGraphCells = 20;
inline constexpr unsigned kMaxConstrainedCells = 12;
inline constexpr unsigned kMaxStateLevel = 3;
inline constexpr unsigned kMaxMagnifiedLevel = 4;
inline constexpr unsigned kMaxBridgePairs = 24;

/// Required boundary words; an absent side is unconstrained.
struct BoundaryRequirement {
  std::optional<StateWord> l;
  std::optional<StateWord> r;
  std::optional<StateWord> t;
  std::optional<StateWord> b;

  static BoundaryRequirement closed(unsigned rows, unsigned cols);
};

Count brute_count_graph_mosaics(unsigned rows, unsigned cols);

Count brute_count_suitably_connected(unsigned rows, unsigned cols, const BoundaryRequirement& req);

Matrix<Count> brute_state_matrix(unsigned m, StateKind kind);

/// For m = 0 or n = 0 the grid has no cells; the identity is returned by
/// convention.
MagnifiedStateMatrix<Count> brute_magnified(unsigned m, unsigned n);

/// Cyclic sequences of t bridged/unbridged flags with no two cyclically
/// adjacent unbridged flags.
Count brute_bridge_count(unsigned t);

/// Tiles whose left and top flags equal the given values.
std::vector<Tile> tiles_matching(bool l, bool t);

}  // namespace gmosaic::oracle
