#pragma once

#include <cstddef>
#include <string>

#include "gmosaic/errors.hpp"
#include "gmosaic/matrix.hpp"
#include "gmosaic/parallel.hpp"
#include "gmosaic/state_matrices.hpp"

namespace gmosaic {

/// Counts of suitably connected (m,n)-mosaics, rows indexed by the lt-state
/// (l-word followed by t-word) and columns by the rb-state.
template <typename T>
struct MagnifiedStateMatrix {
  unsigned m = 0;
  unsigned n = 0;
  Matrix<T> entries;
};

namespace detail {

// out[row_off + i][col_off + c] += (a * (I_copies (x) b))[i][c]
//
// Block q of the result only reads block column q of `a`, so the Kronecker
// factor is never formed. Rows are split between workers; every output cell
// has exactly one writer and a fixed summation order.
template <typename T>
void block_diag_multiply_into(const Matrix<T>& a, const Matrix<T>& b, std::size_t copies, Matrix<T>& out,
                              std::size_t row_off, std::size_t col_off, unsigned threads) {
  const std::size_t bd = b.dim();
  parallel_for(a.dim(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto a_row = a.row(i);
      T* out_row = out.row(row_off + i).data() + col_off;
      for (std::size_t blk = 0; blk < copies; ++blk) {
        const std::size_t base = blk * bd;
        for (std::size_t q = 0; q < bd; ++q) {
          const T& av = a_row[base + q];
          if (is_zero(av)) continue;
          const auto b_row = b.row(q);
          for (std::size_t j = 0; j < bd; ++j) {
            if (!is_zero(b_row[j])) out_row[base + j] += av * b_row[j];
          }
        }
      }
    }
  });
}

}  // namespace detail

/// A * (I_copies (x) B). Throws DomainError unless dim(A) = copies * dim(B).
template <typename T>
Matrix<T> block_diag_multiply(const Matrix<T>& a, const Matrix<T>& b, std::size_t copies, unsigned threads = 1) {
  if (copies == 0 || a.dim() != copies * b.dim()) {
    throw DomainError("block_diag_multiply: dimension " + std::to_string(a.dim()) + " is not " +
                      std::to_string(copies) + " x " + std::to_string(b.dim()));
  }
  Matrix<T> out(a.dim());
  detail::block_diag_multiply_into(a, b, copies, out, 0, 0, threads);
  return out;
}

/// Appends one column on the right: [[N(I(x)X+), N(I(x)O-)], [N(I(x)X-), N(I(x)O+)]].
/// The new t-letter selects the block row and the new b-letter the block column.
template <typename T>
MagnifiedStateMatrix<T> extend_magnified(const MagnifiedStateMatrix<T>& prev, const StateMatrices<T>& s,
                                         unsigned threads = 1) {
  const std::size_t h = prev.entries.dim();
  const std::size_t copies = std::size_t{1} << prev.n;
  MagnifiedStateMatrix<T> next{prev.m, prev.n + 1, Matrix<T>(2 * h)};
  detail::block_diag_multiply_into(prev.entries, s.x_plus, copies, next.entries, 0, 0, threads);
  detail::block_diag_multiply_into(prev.entries, s.o_minus, copies, next.entries, 0, h, threads);
  detail::block_diag_multiply_into(prev.entries, s.x_minus, copies, next.entries, h, 0, threads);
  detail::block_diag_multiply_into(prev.entries, s.o_plus, copies, next.entries, h, h, threads);
  return next;
}

/// Builds N^(m,n) from N^(m,0) = I. Throws ResourceError when m + n exceeds
/// options.max_level.
template <typename T>
MagnifiedStateMatrix<T> build_magnified(const StateMatrices<T>& s, unsigned n, const BuildOptions& options = {}) {
  if (s.m + n > options.max_level) {
    throw ResourceError("magnified matrix dimension 2^" + std::to_string(s.m + n) + " exceeds the limit 2^" +
                        std::to_string(options.max_level));
  }
  MagnifiedStateMatrix<T> acc{s.m, 0, Matrix<T>::identity(std::size_t{1} << s.m)};
  for (unsigned k = 0; k < n; ++k) acc = extend_magnified(acc, s, options.threads);
  return acc;
}

template <typename T>
MagnifiedStateMatrix<T> build_magnified(unsigned m, unsigned n, const BuildOptions& options = {}) {
  if (m + n > options.max_level) {
    throw ResourceError("magnified matrix dimension 2^" + std::to_string(m + n) + " exceeds the limit 2^" +
                        std::to_string(options.max_level));
  }
  return build_magnified(build_state_matrices<T>(m, options), n, options);
}

}  // namespace gmosaic
