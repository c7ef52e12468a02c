#include <doctest.h>

#include "gmosaic/count.hpp"

using namespace gmosaic;

TEST_CASE("checked arithmetic throws instead of wrapping") {
  const Fixed32 big(0xffffffffu);
  CHECK_THROWS_AS(big + Fixed32(1), OverflowError);
  CHECK_THROWS_AS(Fixed32(0x10000u) * Fixed32(0x10000u), OverflowError);
  CHECK((Fixed32(0xffffu) * Fixed32(0x10001u)).raw() == 0xffffffffu);
  CHECK_THROWS_AS(Fixed32(std::uint64_t{1} << 32), OverflowError);

  Fixed128 near_top = Fixed128::from_raw(~(unsigned __int128){0} - 1);
  near_top += Fixed128(1);
  CHECK_THROWS_AS(near_top += Fixed128(1), OverflowError);
  CHECK_THROWS_AS(Fixed128::from_raw((unsigned __int128){1} << 64) * Fixed128::from_raw((unsigned __int128){1} << 64),
                  OverflowError);
}

TEST_CASE("conversions between widths are exact") {
  const Count two_127 = Count(1) << 127;
  const Fixed128 f = from_count<Fixed128>(two_127 + 12345);
  CHECK(to_count(f) == two_127 + 12345);
  CHECK_THROWS_AS(from_count<Fixed128>(Count(1) << 128), OverflowError);
  CHECK_THROWS_AS(from_count<Fixed64>(Count(1) << 64), OverflowError);
  CHECK(to_count(from_count<Fixed64>(Count("18446744073709551615"))) == Count("18446744073709551615"));
  CHECK(to_decimal(Fixed128::from_raw(((unsigned __int128){1} << 100))) == "1267650600228229401496703205376");
}

TEST_CASE("plain decimal parsing") {
  CHECK(parse_decimal("0") == 0);
  CHECK(parse_decimal("3640808935014381109015655745683558") == Count("3640808935014381109015655745683558"));
  CHECK_THROWS_AS(parse_decimal(""), DomainError);
  CHECK_THROWS_AS(parse_decimal("1e5"), DomainError);
  CHECK_THROWS_AS(parse_decimal("-1"), DomainError);
  CHECK_THROWS_AS(parse_decimal("1,000"), DomainError);
}
