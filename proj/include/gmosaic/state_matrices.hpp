#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gmosaic/count.hpp"
#include "gmosaic/errors.hpp"
#include "gmosaic/matrix.hpp"

namespace gmosaic {

/// Which (b-state, t-state) pair a state matrix counts for a single column:
/// X/O is the bottom letter, +/- says whether top equals bottom.
enum class StateKind { XPlus, XMinus, OPlus, OMinus };

inline constexpr std::array<StateKind, 4> kAllStateKinds{StateKind::XPlus, StateKind::XMinus,
                                                         StateKind::OPlus, StateKind::OMinus};

std::string_view kind_name(StateKind kind);

/// Accepts "X+", "X-", "O+", "O-" (and the Unicode minus sign).
std::optional<StateKind> parse_kind(std::string_view name);

inline constexpr unsigned kDefaultMaxLevel = 14;

/// Size guard and worker count shared by the matrix builders.
struct BuildOptions {
  unsigned threads = 1;
  unsigned max_level = kDefaultMaxLevel;
};

/// X_m^+, X_m^-, O_m^+, O_m^- for the suitably connected (m,1)-mosaics.
/// Rows index the l-state, columns the r-state.
template <typename T>
struct StateMatrices {
  unsigned m = 0;
  Matrix<T> x_plus;
  Matrix<T> x_minus;
  Matrix<T> o_plus;
  Matrix<T> o_minus;

  const Matrix<T>& operator[](StateKind kind) const {
    switch (kind) {
      case StateKind::XPlus:
        return x_plus;
      case StateKind::XMinus:
        return x_minus;
      case StateKind::OPlus:
        return o_plus;
      case StateKind::OMinus:
        break;
    }
    return o_minus;
  }
};

namespace detail {

// [[a, b], [b, c]]
template <typename T>
Matrix<T> assemble_symmetric_blocks(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c) {
  const std::size_t h = a.dim();
  Matrix<T> out(2 * h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) {
      out(i, j) = a(i, j);
      out(i, h + j) = b(i, j);
      out(h + i, j) = b(i, j);
      out(h + i, h + j) = c(i, j);
    }
  }
  return out;
}

}  // namespace detail

/// One bottom-tile extension of the four level-k matrices to level k+1.
template <typename T>
StateMatrices<T> extend_state_matrices(const StateMatrices<T>& s) {
  const T five(5);
  const Matrix<T> xp_om = s.x_plus + s.o_minus;
  const Matrix<T> xm_op = s.x_minus + s.o_plus;

  StateMatrices<T> next;
  next.m = s.m + 1;
  next.x_plus = detail::assemble_symmetric_blocks(s.x_plus, s.o_minus, xp_om);
  next.x_minus = detail::assemble_symmetric_blocks(s.x_minus, s.o_plus, xm_op);
  next.o_plus = detail::assemble_symmetric_blocks(s.o_plus, xm_op, s.x_minus + five * s.o_plus);
  next.o_minus = detail::assemble_symmetric_blocks(s.o_minus, xp_om, s.x_plus + five * s.o_minus);
  return next;
}

template <typename T>
StateMatrices<T> base_state_matrices() {
  StateMatrices<T> s;
  s.m = 0;
  s.x_plus = Matrix<T>::identity(1);
  s.x_minus = Matrix<T>(1);
  s.o_plus = Matrix<T>::identity(1);
  s.o_minus = Matrix<T>(1);
  return s;
}

/// Builds the four 2^m x 2^m state matrices bottom-up from level 0.
/// Throws ResourceError when m exceeds options.max_level.
template <typename T>
StateMatrices<T> build_state_matrices(unsigned m, const BuildOptions& options = {}) {
  if (m > options.max_level) {
    throw ResourceError("state matrix level " + std::to_string(m) + " exceeds the limit " +
                        std::to_string(options.max_level));
  }
  StateMatrices<T> s = base_state_matrices<T>();
  for (unsigned k = 0; k < m; ++k) s = extend_state_matrices(s);
  return s;
}

/// Entry (i, j), 1-based, of the level-m matrix of the given kind.
Count state_matrix_entry_count(unsigned m, StateKind kind, std::uint64_t i, std::uint64_t j);

}  // namespace gmosaic
