#pragma once

// Test-only cross-check for grids too large for the DFS oracle: a cell-by-cell
// profile sweep. The frontier holds one bit per column (connection point
// crossing downward) plus the bit entering the next cell from the left.
// Shares only the tile table with the library.

#include <cstdint>
#include <unordered_map>

#include "gmosaic/count.hpp"
#include "gmosaic/tile.hpp"

namespace gmosaic::testing {

inline Count profile_count_graph_mosaics(unsigned rows, unsigned cols) {
  using Frontier = std::uint64_t;  // bits 0..cols-1 vertical, bit cols horizontal
  const Frontier horizontal = Frontier{1} << cols;
  std::unordered_map<Frontier, Count> current{{0, 1}};
  for (unsigned i = 0; i < rows; ++i) {
    for (unsigned j = 0; j < cols; ++j) {
      std::unordered_map<Frontier, Count> next;
      for (const auto& [state, ways] : current) {
        const bool from_left = (state & horizontal) != 0;
        const bool from_above = ((state >> j) & 1u) != 0;
        for (const CpPattern& p : kTilePatterns) {
          if (p.l != from_left || p.t != from_above) continue;
          if (j + 1 == cols && p.r) continue;
          if (i + 1 == rows && p.b) continue;
          Frontier s = state & ~horizontal & ~(Frontier{1} << j);
          if (p.b) s |= Frontier{1} << j;
          if (p.r) s |= horizontal;
          next[s] += ways;
        }
      }
      current = std::move(next);
    }
  }
  Count total = 0;
  for (const auto& [state, ways] : current) total += ways;
  return total;
}

}  // namespace gmosaic::testing
