#pragma once

// Exact nonnegative counts.
//
// Every counting routine is a template over its count type. Two families are
// provided:
//   * Count            arbitrary precision (boost cpp_int), never overflows
//   * Checked<U>       fixed width, throws OverflowError instead of wrapping
// Fixed128 is the fast path; the narrower Checked widths exist so tests can
// provoke an overflow at small grid sizes.

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

#include "gmosaic/errors.hpp"

namespace gmosaic {

using Count = boost::multiprecision::cpp_int;

template <typename U>
class Checked {
 public:
  constexpr Checked() = default;

  // Implicit on purpose: lets generic code write `T(5)` and `T{1}`.
  Checked(std::uint64_t v) {  // NOLINT(google-explicit-constructor)
    if constexpr (sizeof(U) < sizeof(std::uint64_t)) {
      if (v > static_cast<std::uint64_t>(U(~U{0}))) overflow("conversion");
    }
    value_ = static_cast<U>(v);
  }

  static Checked from_raw(U v) {
    Checked c;
    c.value_ = v;
    return c;
  }

  U raw() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Checked& operator+=(const Checked& o) {
    if (__builtin_add_overflow(value_, o.value_, &value_)) overflow("addition");
    return *this;
  }

  friend Checked operator+(Checked a, const Checked& b) { return a += b; }

  friend Checked operator*(const Checked& a, const Checked& b) {
    U r;
    if (__builtin_mul_overflow(a.value_, b.value_, &r)) overflow("multiplication");
    return from_raw(r);
  }

  friend bool operator==(const Checked& a, const Checked& b) = default;
  friend auto operator<=>(const Checked& a, const Checked& b) = default;

 private:
  [[noreturn]] static void overflow(const char* op);

  U value_ = 0;
};

using Fixed32 = Checked<std::uint32_t>;
using Fixed64 = Checked<std::uint64_t>;
using Fixed128 = Checked<unsigned __int128>;

template <typename T>
struct CountTraits;

template <>
struct CountTraits<Count> {
  static constexpr std::string_view name = "bignum";
};
template <>
struct CountTraits<Fixed32> {
  static constexpr std::string_view name = "fixed32";
};
template <>
struct CountTraits<Fixed64> {
  static constexpr std::string_view name = "fixed64";
};
template <>
struct CountTraits<Fixed128> {
  static constexpr std::string_view name = "fixed128";
};

template <typename U>
[[noreturn]] void Checked<U>::overflow(const char* op) {
  throw OverflowError(std::string(CountTraits<Checked<U>>::name) + " overflow in " + op);
}

inline bool is_zero(const Count& c) { return c.is_zero(); }
template <typename U>
bool is_zero(const Checked<U>& c) {
  return c.is_zero();
}

inline const Count& to_count(const Count& c) { return c; }

template <typename U>
Count to_count(const Checked<U>& c) {
  if constexpr (sizeof(U) <= sizeof(std::uint64_t)) {
    return Count(static_cast<std::uint64_t>(c.raw()));
  } else {
    Count hi(static_cast<std::uint64_t>(c.raw() >> 64));
    Count lo(static_cast<std::uint64_t>(c.raw()));
    return (hi << 64) | lo;
  }
}

/// Narrow an exact count into T; throws OverflowError if it does not fit.
template <typename T>
T from_count(const Count& c) {
  if constexpr (std::is_same_v<T, Count>) {
    return c;
  } else {
    using U = decltype(T{}.raw());
    if (c > to_count(T::from_raw(U(~U{0})))) {
      throw OverflowError(std::string(CountTraits<T>::name) + " overflow in conversion");
    }
    if constexpr (sizeof(U) <= sizeof(std::uint64_t)) {
      return T::from_raw(static_cast<U>(c.template convert_to<std::uint64_t>()));
    } else {
      const Count low_mask = (Count(1) << 64) - 1;
      const U hi = (c >> 64).template convert_to<std::uint64_t>();
      const U lo = (c & low_mask).template convert_to<std::uint64_t>();
      return T::from_raw((hi << 64) | lo);
    }
  }
}

template <typename T>
std::string to_decimal(const T& c) {
  return to_count(c).str();
}

/// Parse a plain decimal string (no sign, no separators).
Count parse_decimal(std::string_view text);

}  // namespace gmosaic
