#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gmosaic/state_word.hpp"
#include "gmosaic/tile.hpp"

namespace gmosaic {

enum class Side { Left, Right, Top, Bottom };

/// rows x cols grid of tiles; cell (i, j) is row i from the top, column j
/// from the left, both 0-based.
class Mosaic {
 public:
  /// All-blank grid. Throws DomainError if either side is zero.
  Mosaic(std::size_t rows, std::size_t cols);
  Mosaic(std::size_t rows, std::size_t cols, std::vector<Tile> cells);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Tile at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Tile t) { cells_[i * cols_ + j] = t; }

  friend bool operator==(const Mosaic&, const Mosaic&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Tile> cells_;
};

bool is_suitably_connected(const Mosaic& m);

/// Suitably connected with no connection point on the outer boundary.
bool is_graph_mosaic(const Mosaic& m);

StateWord boundary_state(const Mosaic& m, Side side);

/// `.mosaic` text: "<rows> <cols>" then one line of hex digits per row.
Mosaic parse_mosaic(std::string_view text);
std::string serialize_mosaic(const Mosaic& m);

/// 3x3 characters per tile. Debug output only.
std::string render_ascii(const Mosaic& m);

}  // namespace gmosaic
