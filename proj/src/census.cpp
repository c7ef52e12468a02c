#include "gmosaic/census.hpp"

namespace gmosaic {

Count lucas(unsigned k) {
  Count prev = 2;  // L_0
  Count cur = 1;   // L_1
  if (k == 0) return prev;
  for (unsigned t = 2; t <= k; ++t) {
    Count next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

unsigned hamming_pair(std::uint64_t i, std::uint64_t j) {
  if (i == 0 || j == 0) throw DomainError("state indices are 1-based");
  return static_cast<unsigned>(std::popcount(i - 1) + std::popcount(j - 1));
}

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::Auto:
      return "auto";
    case Backend::Fixed128:
      return "fixed128";
    case Backend::Bignum:
      break;
  }
  return "bignum";
}

std::optional<Backend> parse_backend(std::string_view name) {
  for (Backend b : {Backend::Auto, Backend::Fixed128, Backend::Bignum}) {
    if (name == backend_name(b)) return b;
  }
  return std::nullopt;
}

std::string_view method_name(Method method) {
  switch (method) {
    case Method::Formula:
      return "formula";
    case Method::SpecialCase:
      return "special-case";
    case Method::Oracle:
      break;
  }
  return "oracle";
}

CensusResult count_graph_mosaics(unsigned rows, unsigned cols, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusResult result;
  result.rows = rows;
  result.cols = cols;
  result.threads = resolve_threads(options.threads);

  if (rows == 0 || cols == 0) throw DomainError("grid sides must be positive");
  if (rows == 1 || cols == 1) {
    result.count = 1;
    result.method = Method::SpecialCase;
    result.backend = "none";
  } else {
    result.method = Method::Formula;
    result.peak_dimension = std::size_t{1} << (rows + cols - 4);
    switch (options.backend) {
      case Backend::Fixed128:
        result.count = to_count(count_graph_mosaics_as<Fixed128>(rows, cols, options));
        result.backend = "fixed128";
        break;
      case Backend::Bignum:
        result.count = count_graph_mosaics_as<Count>(rows, cols, options);
        result.backend = "bignum";
        break;
      case Backend::Auto:
        try {
          result.count = to_count(count_graph_mosaics_as<Fixed128>(rows, cols, options));
          result.backend = "fixed128";
        } catch (const OverflowError&) {
          result.count = count_graph_mosaics_as<Count>(rows, cols, options);
          result.backend = "bignum";
        }
        break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace gmosaic
