#include <doctest.h>

#include "mwiso/ratio.hpp"

using mwiso::error;
using mwiso::ratio;

TEST_CASE("lowest terms and accessors") {
  ratio r(4, 6);
  CHECK(r.num() == 2);
  CHECK(r.den() == 3);
  CHECK(r.str() == "2/3");
  CHECK(ratio(0, 7) == ratio());
  CHECK(ratio(0, 7).den() == 1);
  CHECK(ratio(6, 3).str() == "2");
  CHECK_THROWS_AS(ratio(1, 0), error);
}

TEST_CASE("comparisons by cross multiplication") {
  CHECK(ratio(1, 3) < ratio(1, 2));
  CHECK(ratio(2, 3) <= ratio(2, 3));
  CHECK(ratio(5, 1) > ratio(9, 2));
  CHECK(!(ratio(1, 2) < ratio(1, 2)));
  // values that would overflow a naive 64-bit cross product
  ratio big1((1ULL << 40) + 1, (1ULL << 40));
  ratio big2((1ULL << 40) + 2, (1ULL << 40) + 1);
  CHECK(big2 < big1);
}

TEST_CASE("arithmetic") {
  CHECK(ratio(1, 2) + ratio(1, 3) == ratio(5, 6));
  CHECK(ratio(2, 3) * ratio(3, 4) == ratio(1, 2));
  CHECK(ratio(2, 3) * 3 == ratio(2, 1));
  CHECK(ratio(2, 3) / ratio(4, 9) == ratio(3, 2));
  CHECK(ratio(2, 3) / 2 == ratio(1, 3));
  CHECK(ratio::sub(ratio(5, 6), ratio(1, 2)) == ratio(1, 3));
  CHECK(ratio::abs_diff(ratio(1, 2), ratio(5, 6)) == ratio(1, 3));
  CHECK_THROWS_AS(ratio::sub(ratio(1, 3), ratio(1, 2)), error);
  CHECK_THROWS_AS(ratio(1, 2) / ratio(), error);
  CHECK_THROWS_AS(ratio(1, 2) / 0, error);
}

TEST_CASE("to_double and formatting") {
  CHECK(ratio(1, 4).to_double() == doctest::Approx(0.25));
  CHECK(ratio().str() == "0");
  CHECK(ratio(7, 1).str() == "7");
}
