#include "gmosaic/count.hpp"

#include <string>

namespace gmosaic {

Count parse_decimal(std::string_view text) {
  if (text.empty()) throw DomainError("empty decimal string");
  Count value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw DomainError("'" + std::string(text) + "' is not a plain decimal");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace gmosaic
