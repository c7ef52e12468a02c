#include "gmosaic/oracle.hpp"

#include <string>

#include "gmosaic/errors.hpp"

namespace gmosaic::oracle {

namespace {

// Row-major DFS. Each cell's candidates are filtered against its left and
// upper neighbours and, on the outer edge, against the requirement.
class GridSearch {
 public:
  GridSearch(unsigned rows, unsigned cols, const BoundaryRequirement& req)
      : rows_(rows), cols_(cols), req_(req), grid_(std::size_t{rows} * cols) {}

  std::uint64_t run() {
    solutions_ = 0;
    place(0);
    return solutions_;
  }

 private:
  bool fits(unsigned i, unsigned j, const CpPattern& p) const {
    if (j == 0) {
      if (req_.l && p.l != req_.l->has_cp(i)) return false;
    } else if (p.l != kTilePatterns[grid_[i * cols_ + j - 1]].r) {
      return false;
    }
    if (i == 0) {
      if (req_.t && p.t != req_.t->has_cp(j)) return false;
    } else if (p.t != kTilePatterns[grid_[(i - 1) * cols_ + j]].b) {
      return false;
    }
    if (j + 1 == cols_ && req_.r && p.r != req_.r->has_cp(i)) return false;
    if (i + 1 == rows_ && req_.b && p.b != req_.b->has_cp(j)) return false;
    return true;
  }

  void place(std::size_t cell) {
    if (cell == grid_.size()) {
      ++solutions_;
      return;
    }
    const unsigned i = static_cast<unsigned>(cell / cols_);
    const unsigned j = static_cast<unsigned>(cell % cols_);
    for (int id = 0; id < kTileCount; ++id) {
      if (!fits(i, j, kTilePatterns[id])) continue;
      grid_[cell] = id;
      place(cell + 1);
    }
  }

  unsigned rows_;
  unsigned cols_;
  const BoundaryRequirement& req_;
  std::vector<int> grid_;
  std::uint64_t solutions_ = 0;
};

void check_requirement(unsigned rows, unsigned cols, const BoundaryRequirement& req) {
  auto check = [](const std::optional<StateWord>& w, unsigned want, const char* side) {
    if (w && w->size() != want) {
      throw DomainError(std::string(side) + "-state has " + std::to_string(w->size()) + " letters, grid needs " +
                        std::to_string(want));
    }
  };
  check(req.l, rows, "l");
  check(req.r, rows, "r");
  check(req.t, cols, "t");
  check(req.b, cols, "b");
}

// Word whose letter p is 'o' iff bit p of `bits` is set.
StateWord word_from_bits(std::uint64_t bits, unsigned length) {
  std::string letters;
  for (unsigned p = 0; p < length; ++p) letters.push_back(((bits >> p) & 1u) ? 'o' : 'x');
  return StateWord(std::move(letters));
}

StateWord word_from_bit(bool cp) { return StateWord(cp ? "o" : "x"); }

}  // namespace

BoundaryRequirement BoundaryRequirement::closed(unsigned rows, unsigned cols) {
  return {StateWord(std::string(rows, 'x')), StateWord(std::string(rows, 'x')), StateWord(std::string(cols, 'x')),
          StateWord(std::string(cols, 'x'))};
}

Count brute_count_graph_mosaics(unsigned rows, unsigned cols) {
  if (rows == 0 || cols == 0) throw DomainError("grid sides must be positive");
  if (rows * cols > kMaxGraphCells) {
    throw ResourceError("oracle limited to " + std::to_string(kMaxGraphCells) + " cells, asked for " +
                        std::to_string(rows * cols));
  }
  const BoundaryRequirement req = BoundaryRequirement::closed(rows, cols);
  return Count(GridSearch(rows, cols, req).run());
}

Count brute_count_suitably_connected(unsigned rows, unsigned cols, const BoundaryRequirement& req) {
  if (rows == 0 || cols == 0) throw DomainError("grid sides must be positive");
  if (rows * cols > kMaxConstrainedCells) {
    throw ResourceError("oracle limited to " + std::to_string(kMaxConstrainedCells) + " cells, asked for " +
                        std::to_string(rows * cols));
  }
  check_requirement(rows, cols, req);
  return Count(GridSearch(rows, cols, req).run());
}

Matrix<Count> brute_state_matrix(unsigned m, StateKind kind) {
  if (m == 0) throw DomainError("state matrix oracle needs at least one row");
  if (m > kMaxStateLevel) {
    throw ResourceError("state matrix oracle limited to m <= " + std::to_string(kMaxStateLevel));
  }
  const bool bottom_cp = kind == StateKind::OPlus || kind == StateKind::OMinus;
  const bool same = kind == StateKind::XPlus || kind == StateKind::OPlus;
  const bool top_cp = same ? bottom_cp : !bottom_cp;

  const std::size_t dim = std::size_t{1} << m;
  Matrix<Count> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      BoundaryRequirement req{word_from_bits(i, m), word_from_bits(j, m), word_from_bit(top_cp),
                              word_from_bit(bottom_cp)};
      out(i, j) = brute_count_suitably_connected(m, 1, req);
    }
  }
  return out;
}

MagnifiedStateMatrix<Count> brute_magnified(unsigned m, unsigned n) {
  if (m + n > kMaxMagnifiedLevel) {
    throw ResourceError("magnified oracle limited to m + n <= " + std::to_string(kMaxMagnifiedLevel));
  }
  const std::size_t dim = std::size_t{1} << (m + n);
  MagnifiedStateMatrix<Count> out{m, n, Matrix<Count>(dim)};
  if (m == 0 || n == 0) {
    for (std::size_t i = 0; i < dim; ++i) out.entries(i, i) = 1;
    return out;
  }
  // Low m bits carry the side word (l or r), the next n bits the t or b word.
  const std::uint64_t side_mask = (std::uint64_t{1} << m) - 1;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      BoundaryRequirement req{word_from_bits(i & side_mask, m), word_from_bits(j & side_mask, m),
                              word_from_bits(i >> m, n), word_from_bits(j >> m, n)};
      out.entries(i, j) = brute_count_suitably_connected(m, n, req);
    }
  }
  return out;
}

Count brute_bridge_count(unsigned t) {
  if (t == 0) throw DomainError("bridge count needs at least one pair");
  if (t > kMaxBridgePairs) {
    throw ResourceError("bridge oracle limited to " + std::to_string(kMaxBridgePairs) + " pairs");
  }
  std::uint64_t valid = 0;
  for (std::uint64_t flags = 0; flags < (std::uint64_t{1} << t); ++flags) {
    bool ok = true;
    for (unsigned p = 0; p < t && ok; ++p) {
      const bool bridged = (flags >> p) & 1u;
      const bool next_bridged = (flags >> ((p + 1) % t)) & 1u;
      ok = bridged || next_bridged;
    }
    if (ok) ++valid;
  }
  return Count(valid);
}

std::vector<Tile> tiles_matching(bool l, bool t) {
  std::vector<Tile> out;
  for (int id = 0; id < kTileCount; ++id) {
    if (kTilePatterns[id].l == l && kTilePatterns[id].t == t) out.push_back(Tile::from_id(id));
  }
  return out;
}

}  // namespace gmosaic::oracle
