#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "gmosaic/errors.hpp"
#include "gmosaic/mosaic.hpp"
#include "gmosaic/state_word.hpp"
#include "gmosaic/tile.hpp"

using namespace gmosaic;

namespace {

Tile T(int id) { return Tile::from_id(id); }

Mosaic circle() { return Mosaic(2, 2, {T(2), T(1), T(4), T(3)}); }

}  // namespace

TEST_CASE("tile census by connection-point count") {
  std::array<int, 5> by_count{};
  for (int id = 0; id < kTileCount; ++id) ++by_count[cp_pattern(id).count()];
  CHECK(by_count[0] == 1);
  CHECK(by_count[1] == 0);
  CHECK(by_count[2] == 6);
  CHECK(by_count[3] == 4);
  CHECK(by_count[4] == 5);

  CHECK(cp_pattern(0).count() == 0);
  for (int id = 1; id <= 6; ++id) CHECK(cp_pattern(id).count() == 2);
  for (int id = 11; id <= 14; ++id) CHECK(cp_pattern(id).count() == 3);
  for (int id : {7, 8, 9, 10, 15}) CHECK(cp_pattern(id) == CpPattern{true, true, true, true});
}

TEST_CASE("two- and three-cp tiles realise every pattern exactly once") {
  auto key = [](const CpPattern& p) { return p.l * 8 + p.r * 4 + p.t * 2 + p.b; };
  std::set<int> two, three;
  for (int id = 1; id <= 6; ++id) two.insert(key(cp_pattern(id)));
  for (int id = 11; id <= 14; ++id) three.insert(key(cp_pattern(id)));
  CHECK(two.size() == 6);
  CHECK(three.size() == 4);
}

TEST_CASE("cp_pattern examples and quadrant-pinned tiles") {
  CHECK(cp_pattern(T(0)) == CpPattern{});
  CHECK(cp_pattern(T(6)) == CpPattern{false, false, true, true});
  CHECK(cp_pattern(T(15)) == CpPattern{true, true, true, true});
  CHECK(cp_pattern(T(13)) == CpPattern{true, true, false, true});
  CHECK(cp_pattern(T(12)) == CpPattern{true, false, true, true});
  CHECK(cp_pattern(T(14)) == CpPattern{false, true, true, true});
  CHECK((cp_pattern(T(1)).l && cp_pattern(T(1)).b));
  CHECK((cp_pattern(T(2)).r && cp_pattern(T(2)).b));
  CHECK_THROWS_AS(cp_pattern(16), DomainError);
  CHECK_THROWS_AS(Tile::from_id(-1), DomainError);
}

TEST_CASE("suitable connectedness") {
  CHECK(is_suitably_connected(Mosaic(2, 2)));
  for (int id = 0; id < kTileCount; ++id) CHECK(is_suitably_connected(Mosaic(1, 1, {T(id)})));
  CHECK_FALSE(is_suitably_connected(Mosaic(2, 1, {T(1), T(0)})));
  CHECK_FALSE(is_suitably_connected(Mosaic(1, 2, {T(5), T(0)})));
  CHECK(is_suitably_connected(Mosaic(1, 2, {T(5), T(5)})));
}

TEST_CASE("graph mosaics") {
  CHECK(is_graph_mosaic(Mosaic(1, 1, {T(0)})));
  CHECK_FALSE(is_graph_mosaic(Mosaic(1, 1, {T(5)})));
  CHECK(is_graph_mosaic(circle()));
  CHECK_FALSE(is_graph_mosaic(Mosaic(1, 2, {T(5), T(5)})));
}

TEST_CASE("boundary states") {
  CHECK(boundary_state(Mosaic(1, 1, {T(5)}), Side::Left).letters() == "o");
  CHECK(boundary_state(Mosaic(2, 2), Side::Top).letters() == "xx");
  for (Side s : {Side::Left, Side::Right, Side::Top, Side::Bottom}) {
    CHECK(boundary_state(circle(), s).letters() == "xx");
  }
  // Column of a vertical line over a left arc: l reads top to bottom.
  const Mosaic column(2, 1, {T(6), T(3)});
  CHECK(boundary_state(column, Side::Left).letters() == "xo");
  CHECK(boundary_state(column, Side::Right).letters() == "xx");
  CHECK(boundary_state(column, Side::Top).letters() == "o");
  CHECK(boundary_state(column, Side::Bottom).letters() == "x");
}

TEST_CASE("state index follows reverse lexicographic order") {
  const std::array<const char*, 8> order{"xxx", "oxx", "xox", "oox", "xxo", "oxo", "xoo", "ooo"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(state_index(StateWord(order[i])) == i + 1);
  }
  CHECK(state_word(2, 3).letters() == "oxx");
  CHECK(state_word(1, 5).letters() == "xxxxx");
  CHECK(state_word(4, 2).letters() == "oo");
  CHECK_THROWS_AS(state_word(0, 3), DomainError);
  CHECK_THROWS_AS(state_word(9, 3), DomainError);
  CHECK_THROWS_AS(StateWord("xa"), DomainError);
}

TEST_CASE("state_index and state_word are inverse bijections up to length 12") {
  for (std::size_t len = 0; len <= 12; ++len) {
    std::set<std::string> seen;
    for (std::uint64_t i = 1; i <= (std::uint64_t{1} << len); ++i) {
      const StateWord w = state_word(i, len);
      REQUIRE(w.size() == len);
      REQUIRE(state_index(w) == i);
      seen.insert(w.letters());
    }
    CHECK(seen.size() == (std::size_t{1} << len));
  }
}

TEST_CASE("parse and serialize") {
  CHECK(parse_mosaic("1 1\n0\n") == Mosaic(1, 1));
  CHECK(parse_mosaic("2 2\n21\n43\n") == circle());
  CHECK(serialize_mosaic(circle()) == "2 2\n21\n43\n");
  CHECK(parse_mosaic("1 2\nfa") == Mosaic(1, 2, {T(15), T(10)}));
  CHECK(serialize_mosaic(parse_mosaic("1  2 \r\nfa\r\n\n")) == "1 2\nFA\n");

  auto error_at = [](const char* text) -> std::pair<std::size_t, std::size_t> {
    try {
      parse_mosaic(text);
    } catch (const ParseError& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  };
  CHECK(error_at("1 2\n0G\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at("") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("2\n00\n") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(error_at("0 1\n0\n") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(error_at("2 2\n00\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_at("1 2\n000\n") == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(error_at("1 2\n0\n") == std::pair<std::size_t, std::size_t>{2, 2});
  CHECK(error_at("1 1\n0\n0\n") == std::pair<std::size_t, std::size_t>{3, 1});
  CHECK(error_at("1 1 1\n0\n") == std::pair<std::size_t, std::size_t>{1, 4});
}

TEST_CASE("round trip on random mosaics") {
  std::mt19937 rng(20161016);
  std::uniform_int_distribution<int> side(1, 7), tile(0, 15);
  for (int trial = 0; trial < 200; ++trial) {
    Mosaic m(side(rng), side(rng));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, T(tile(rng)));
    }
    const std::string text = serialize_mosaic(m);
    REQUIRE(parse_mosaic(text) == m);
    REQUIRE(serialize_mosaic(parse_mosaic(text)) == text);
  }
}

TEST_CASE("render_ascii is injective and fixed-size") {
  std::set<std::string> glyphs;
  for (int id = 0; id < kTileCount; ++id) {
    const std::string g = render_ascii(Mosaic(1, 1, {T(id)}));
    CHECK(g.size() == 12);  // three rows of three characters plus newlines
    glyphs.insert(g);
  }
  CHECK(glyphs.size() == kTileCount);
  CHECK(render_ascii(Mosaic(1, 1)) == "   \n   \n   \n");
  CHECK(render_ascii(Mosaic(1, 1, {T(6)})) == " | \n | \n | \n");
  CHECK(render_ascii(circle()) == "      \n +--+ \n |  | \n |  | \n +--+ \n      \n");
}
