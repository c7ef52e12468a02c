#include "gmosaic/matrix.hpp"

namespace gmosaic {

Matrix<Count> read_matrix_dump(std::istream& in) {
  std::size_t dim = 0;
  if (!(in >> dim)) throw DomainError("matrix dump: missing dimension");
  Matrix<Count> a(dim);
  std::string token;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(in >> token)) {
        throw DomainError("matrix dump: missing entry (" + std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
      }
      a(i, j) = parse_decimal(token);
    }
  }
  return a;
}

}  // namespace gmosaic
