#pragma once

#include <array>
#include <cstdint>

namespace gmosaic {

/// Presence of a connection point at each edge midpoint of a tile.
struct CpPattern {
  bool l = false;
  bool r = false;
  bool t = false;
  bool b = false;

  constexpr int count() const { return int(l) + int(r) + int(t) + int(b); }
  friend constexpr bool operator==(const CpPattern&, const CpPattern&) = default;
};

inline constexpr int kTileCount = 16;

/// One of the sixteen graph mosaic tiles T_0..T_15.
class Tile {
 public:
  constexpr Tile() = default;

  /// Throws DomainError unless 0 <= id <= 15.
  static Tile from_id(int id);

  constexpr int id() const { return id_; }
  friend constexpr bool operator==(Tile, Tile) = default;

 private:
  constexpr explicit Tile(std::uint8_t id) : id_(id) {}
  std::uint8_t id_ = 0;
};

// T_3/T_4 and the identities inside {T_7..T_10, T_15} are conventions; only
// the patterns and their multiplicities enter any count.
inline constexpr std::array<CpPattern, kTileCount> kTilePatterns{{
    {false, false, false, false},  // T_0  blank
    {true, false, false, true},    // T_1  arc l-b
    {false, true, false, true},    // T_2  arc r-b
    {true, false, true, false},    // T_3  arc l-t
    {false, true, true, false},    // T_4  arc r-t
    {true, true, false, false},    // T_5  horizontal
    {false, false, true, true},    // T_6  vertical
    {true, true, true, true},      // T_7  double arc
    {true, true, true, true},      // T_8  double arc
    {true, true, true, true},      // T_9  crossing
    {true, true, true, true},      // T_10 crossing
    {true, true, true, false},     // T_11 trivalent, no b
    {true, false, true, true},     // T_12 trivalent, no r
    {true, true, false, true},     // T_13 trivalent, no t
    {false, true, true, true},     // T_14 trivalent, no l
    {true, true, true, true},      // T_15 four-valent vertex
}};

CpPattern cp_pattern(Tile tile);

/// Pattern lookup by raw id; throws DomainError for ids outside 0..15.
CpPattern cp_pattern(int tile_id);

}  // namespace gmosaic
