#include "gmosaic/tile.hpp"

#include <string>

#include "gmosaic/errors.hpp"

namespace gmosaic {

Tile Tile::from_id(int id) {
  if (id < 0 || id >= kTileCount) {
    throw DomainError("tile id " + std::to_string(id) + " outside 0..15");
  }
  return Tile(static_cast<std::uint8_t>(id));
}

CpPattern cp_pattern(Tile tile) { return kTilePatterns[tile.id()]; }

CpPattern cp_pattern(int tile_id) { return cp_pattern(Tile::from_id(tile_id)); }

}  // namespace gmosaic
