#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmosaic/count.hpp"
#include "gmosaic/errors.hpp"
#include "gmosaic/magnified.hpp"
#include "gmosaic/parallel.hpp"

namespace gmosaic {

/// F_0..F_max_k: the number of ways to close a boundary carrying k
/// connection points with one ring of tiles. F_0 = 2, F_1 = 1,
/// F_k = F_{k-1} + F_{k-2}; these are the Lucas numbers.
template <typename T>
class BoundaryWeightTable {
 public:
  explicit BoundaryWeightTable(unsigned max_k) {
    values_.reserve(max_k + 1);
    for (unsigned k = 0; k <= max_k; ++k) {
      if (k == 0) {
        values_.push_back(T(2));
      } else if (k == 1) {
        values_.push_back(T(1));
      } else {
        values_.push_back(values_[k - 1] + values_[k - 2]);
      }
    }
  }

  /// Arbitrary weights, for fault-injection tests of the verifier.
  static BoundaryWeightTable from_values(std::vector<T> values) {
    BoundaryWeightTable table(0);
    table.values_ = std::move(values);
    return table;
  }

  unsigned max_k() const { return static_cast<unsigned>(values_.size()) - 1; }
  const T& operator[](unsigned k) const { return values_.at(k); }

  template <typename U>
  BoundaryWeightTable<U> convert() const {
    std::vector<U> out;
    for (const T& v : values_) out.push_back(from_count<U>(to_count(v)));
    return BoundaryWeightTable<U>::from_values(std::move(out));
  }

 private:
  std::vector<T> values_;
};

/// Lucas number L_k by integer recursion.
Count lucas(unsigned k);

/// popcount(i - 1) + popcount(j - 1); i, j are 1-based state indices.
unsigned hamming_pair(std::uint64_t i, std::uint64_t j);

/// Sum over all entries x_ij of L_{b(i,j)} * x_ij.
template <typename T>
T theorem_sum(const MagnifiedStateMatrix<T>& magnified, const BoundaryWeightTable<T>& weights,
              unsigned threads = 1) {
  const Matrix<T>& x = magnified.entries;
  const unsigned max_b = 2 * (magnified.m + magnified.n);
  if (weights.max_k() < max_b) {
    throw DomainError("weight table stops at " + std::to_string(weights.max_k()) + ", need " +
                      std::to_string(max_b));
  }
  const std::size_t workers = std::min<std::size_t>(resolve_threads(threads), std::max<std::size_t>(x.dim(), 1));
  std::vector<T> partial(workers);
  parallel_for(workers, static_cast<unsigned>(workers), [&](std::size_t wb, std::size_t we) {
    for (std::size_t w = wb; w < we; ++w) {
      T acc{};
      for (std::size_t i = x.dim() * w / workers; i < x.dim() * (w + 1) / workers; ++i) {
        const auto row = x.row(i);
        const unsigned bi = static_cast<unsigned>(std::popcount(i));
        for (std::size_t j = 0; j < row.size(); ++j) {
          if (!is_zero(row[j])) acc += weights[bi + static_cast<unsigned>(std::popcount(j))] * row[j];
        }
      }
      partial[w] = acc;
    }
  });
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

template <typename T>
T theorem_sum(const MagnifiedStateMatrix<T>& magnified, unsigned threads = 1) {
  return theorem_sum(magnified, BoundaryWeightTable<T>(2 * (magnified.m + magnified.n)), threads);
}

enum class Backend { Auto, Fixed128, Bignum };
enum class Method { Formula, SpecialCase, Oracle };

std::string_view backend_name(Backend backend);
std::optional<Backend> parse_backend(std::string_view name);
std::string_view method_name(Method method);

struct CensusOptions {
  Backend backend = Backend::Auto;
  unsigned threads = 0;
  unsigned max_level = kDefaultMaxLevel;
};

struct CensusResult {
  unsigned rows = 0;
  unsigned cols = 0;
  Count count;
  Method method = Method::Formula;
  std::chrono::nanoseconds elapsed{0};
  /// Arithmetic actually used; "none" for the special case.
  std::string backend;
  /// Dimension of the largest matrix built (0 when none was).
  std::size_t peak_dimension = 0;
  unsigned threads = 1;
};

/// D(rows, cols) computed in the count type T. A side of length 1 admits
/// only the blank mosaic. Otherwise the smaller side minus 2 becomes the
/// state-matrix level and the larger side minus 2 the number of columns.
/// `weights` overrides the Lucas table (verification fault injection).
template <typename T>
T count_graph_mosaics_as(unsigned rows, unsigned cols, const CensusOptions& options = {},
                         const BoundaryWeightTable<T>* weights = nullptr) {
  if (rows == 0 || cols == 0) throw DomainError("grid sides must be positive");
  if (rows == 1 || cols == 1) return T(1);
  const unsigned m = std::min(rows, cols) - 2;
  const unsigned n = std::max(rows, cols) - 2;
  if (m + n > options.max_level) {
    throw ResourceError("grid " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " needs matrix dimension 2^" + std::to_string(m + n) + ", over the limit 2^" +
                        std::to_string(options.max_level));
  }
  const BuildOptions build{resolve_threads(options.threads), options.max_level};
  const MagnifiedStateMatrix<T> magnified = build_magnified<T>(m, n, build);
  if (weights) return theorem_sum(magnified, *weights, build.threads);
  return theorem_sum(magnified, build.threads);
}

/// Number of graph (rows, cols)-mosaics. Backend::Auto runs the 128-bit path
/// and reruns in arbitrary precision if it reports an overflow.
CensusResult count_graph_mosaics(unsigned rows, unsigned cols, const CensusOptions& options = {});

}  // namespace gmosaic
