#include "gmosaic/state_matrices.hpp"

namespace gmosaic {

std::string_view kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::XPlus:
      return "X+";
    case StateKind::XMinus:
      return "X-";
    case StateKind::OPlus:
      return "O+";
    case StateKind::OMinus:
      break;
  }
  return "O-";
}

std::optional<StateKind> parse_kind(std::string_view name) {
  for (StateKind kind : kAllStateKinds) {
    if (name == kind_name(kind)) return kind;
  }
  if (name == "X−") return StateKind::XMinus;
  if (name == "O−") return StateKind::OMinus;
  return std::nullopt;
}

Count state_matrix_entry_count(unsigned m, StateKind kind, std::uint64_t i, std::uint64_t j) {
  const StateMatrices<Count> s = build_state_matrices<Count>(m);
  const std::uint64_t dim = s[kind].dim();
  if (i < 1 || j < 1 || i > dim || j > dim) {
    throw DomainError("entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside a " +
                      std::to_string(dim) + "x" + std::to_string(dim) + " state matrix");
  }
  return s[kind](i - 1, j - 1);
}

}  // namespace gmosaic
