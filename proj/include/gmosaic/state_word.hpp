#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gmosaic {

/// A boundary state: one letter per boundary edge, 'o' where a connection
/// point sits and 'x' where none does.
class StateWord {
 public:
  StateWord() = default;

  /// Throws DomainError on any letter other than 'x' or 'o'.
  explicit StateWord(std::string letters);

  const std::string& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool has_cp(std::size_t pos) const { return letters_[pos] == 'o'; }

  StateWord operator+(const StateWord& tail) const;
  friend bool operator==(const StateWord&, const StateWord&) = default;

 private:
  std::string letters_;
};

/// 1-based index of `w` in reverse lexicographic order: letter p is 'o' iff
/// bit p of (index - 1) is set.
std::uint64_t state_index(const StateWord& w);

/// Inverse of state_index. Throws DomainError unless 1 <= index <= 2^length.
StateWord state_word(std::uint64_t index, std::size_t length);

}  // namespace gmosaic
