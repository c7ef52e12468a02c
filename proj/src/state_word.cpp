#include "gmosaic/state_word.hpp"

#include <string>

#include "gmosaic/errors.hpp"

namespace gmosaic {

StateWord::StateWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != 'x' && c != 'o') {
      throw DomainError(std::string("state letter '") + c + "' is not x or o");
    }
  }
}

StateWord StateWord::operator+(const StateWord& tail) const {
  StateWord w;
  w.letters_ = letters_ + tail.letters_;
  return w;
}

std::uint64_t state_index(const StateWord& w) {
  if (w.size() > 63) throw DomainError("state word longer than 63 letters");
  std::uint64_t bits = 0;
  for (std::size_t p = 0; p < w.size(); ++p) {
    if (w.has_cp(p)) bits |= std::uint64_t{1} << p;
  }
  return bits + 1;
}

StateWord state_word(std::uint64_t index, std::size_t length) {
  if (length > 63) throw DomainError("state word longer than 63 letters");
  if (index < 1 || index > (std::uint64_t{1} << length)) {
    throw DomainError("state index " + std::to_string(index) + " outside 1.." +
                      std::to_string(std::uint64_t{1} << length));
  }
  const std::uint64_t bits = index - 1;
  std::string letters(length, 'x');
  for (std::size_t p = 0; p < length; ++p) {
    if ((bits >> p) & 1u) letters[p] = 'o';
  }
  return StateWord(std::move(letters));
}

}  // namespace gmosaic
