#include <doctest.h>

#include "gmosaic/census.hpp"
#include "gmosaic/oracle.hpp"
#include "support/profile_count.hpp"

using namespace gmosaic;

TEST_CASE("lucas weights") {
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(2) == 3);
  CHECK(lucas(3) == 4);
  CHECK(lucas(4) == 7);
  CHECK(lucas(4) == oracle::brute_bridge_count(4));
  CHECK(lucas(90) == Count("6440026026380244498"));

  const BoundaryWeightTable<Fixed128> table(30);
  CHECK(table.max_k() == 30);
  for (unsigned k = 0; k <= 30; ++k) CHECK(to_count(table[k]) == lucas(k));
}

TEST_CASE("hamming pair") {
  CHECK(hamming_pair(12, 15) == 6);
  CHECK(hamming_pair(1, 1) == 0);
  CHECK(hamming_pair(2, 3) == 2);
  CHECK_THROWS_AS(hamming_pair(0, 1), DomainError);
}

TEST_CASE("weighted sum over magnified matrices") {
  CHECK(theorem_sum(build_magnified<Count>(0, 0)) == 2);
  CHECK(theorem_sum(build_magnified<Count>(1, 1)) == 71);
  CHECK(theorem_sum(build_magnified<Count>(2, 2)) == 144212);
  const auto n = build_magnified<Count>(2, 2);
  CHECK_THROWS_AS(theorem_sum(n, BoundaryWeightTable<Count>(7)), DomainError);
  for (unsigned threads : {2u, 5u}) CHECK(theorem_sum(n, threads) == 144212);
}

TEST_CASE("counts for small grids") {
  CHECK(count_graph_mosaics(1, 1).count == 1);
  CHECK(count_graph_mosaics(1, 1).method == Method::SpecialCase);
  CHECK(count_graph_mosaics(3, 3).count == 71);
  CHECK(count_graph_mosaics(4, 4).count == 144212);
  CHECK(count_graph_mosaics(5, 5).count == Count("9899808106"));
  // Hand count: blank, a circle on either 2x2 half, the long loop, the theta graph.
  CHECK(count_graph_mosaics(2, 3).count == 5);
  CHECK(count_graph_mosaics(3, 4).count == 1327);
  CHECK(count_graph_mosaics(4, 3).count == 1327);
  CHECK_THROWS_AS(count_graph_mosaics(0, 3), DomainError);
}

TEST_CASE("formula agrees with brute force on every grid up to 16 cells") {
  for (unsigned rows = 1; rows <= 16; ++rows) {
    for (unsigned cols = 1; rows * cols <= 16; ++cols) {
      CAPTURE(rows);
      CAPTURE(cols);
      CHECK(count_graph_mosaics(rows, cols).count == oracle::brute_count_graph_mosaics(rows, cols));
    }
  }
}

TEST_CASE("formula agrees with the profile sweep on larger grids") {
  for (auto [rows, cols] : {std::pair{5u, 7u}, {6u, 6u}, {2u, 11u}, {7u, 7u}}) {
    CAPTURE(rows);
    CAPTURE(cols);
    CHECK(count_graph_mosaics(rows, cols).count == testing::profile_count_graph_mosaics(rows, cols));
  }
}

TEST_CASE("exact diagonal values") {
  // Cross-checked by the profile sweep.
  CHECK(count_graph_mosaics(6, 6).count == Count("21965008855047380"));
  CHECK(count_graph_mosaics(7, 7).count == Count("1573773836263642885137617"));
  CHECK(testing::profile_count_graph_mosaics(8, 8) == Count("3640808935014381109015655745683558"));
}

TEST_CASE("transpose symmetry and monotonicity") {
  for (unsigned r = 1; r <= 6; ++r) {
    for (unsigned c = r + 1; c <= 6; ++c) CHECK(count_graph_mosaics(r, c).count == count_graph_mosaics(c, r).count);
  }
  for (unsigned r = 2; r <= 5; ++r) {
    for (unsigned c = 2; c <= 5; ++c) CHECK(count_graph_mosaics(r, c + 1).count >= count_graph_mosaics(r, c).count);
  }
}

TEST_CASE("backends") {
  CHECK(count_graph_mosaics(5, 6, {Backend::Bignum}).count == count_graph_mosaics(5, 6, {Backend::Fixed128}).count);
  CHECK(count_graph_mosaics(5, 6, {Backend::Bignum}).backend == "bignum");
  CHECK(count_graph_mosaics(5, 6).backend == "fixed128");
  CHECK(count_graph_mosaics(1, 6).backend == "none");
  CHECK(count_graph_mosaics(4, 6).peak_dimension == 64);
  CHECK_THROWS_AS(count_graph_mosaics_as<Fixed32>(5, 5), OverflowError);
  CHECK(to_count(count_graph_mosaics_as<Fixed64>(6, 6)) == Count("21965008855047380"));
  CHECK_THROWS_AS(count_graph_mosaics(10, 10), ResourceError);
  CHECK(parse_backend("fixed128") == Backend::Fixed128);
  CHECK_FALSE(parse_backend("double").has_value());
}
