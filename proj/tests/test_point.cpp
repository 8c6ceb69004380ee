#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "signpoly/point.hpp"

using namespace signpoly;

TEST_CASE("EuclideanPoint rejects empty and non-finite coordinates") {
  CHECK_THROWS_AS(EuclideanPoint(std::vector<double>{}), InvalidInput);
  CHECK_THROWS_AS(EuclideanPoint({1.0, std::numeric_limits<double>::quiet_NaN()}), InvalidInput);
  CHECK_THROWS_AS(EuclideanPoint({std::numeric_limits<double>::infinity()}), InvalidInput);
}

TEST_CASE("EuclideanPoint norms and arithmetic") {
  const EuclideanPoint p{3.0, -4.0, 0.0};
  CHECK(p.size() == 3);
  CHECK(p.sum() == -1.0);
  CHECK(p.norm1() == 7.0);
  CHECK(p.norm2() == 5.0);
  CHECK(p.norm_inf() == 4.0);
  CHECK(p.abs() == EuclideanPoint{3.0, 4.0, 0.0});
  CHECK((p + p) == 2.0 * p);
  CHECK((p - p) == EuclideanPoint::zeros(3));
  CHECK(EuclideanPoint::axis(3, 1, 2.5) == EuclideanPoint{0.0, 2.5, 0.0});
  CHECK_THROWS_AS(p + EuclideanPoint{1.0}, DimensionMismatch);
  CHECK_THROWS_AS(EuclideanPoint::axis(2, 2), InvalidInput);
}

TEST_CASE("SignedPermutation validates its bijection and signs") {
  CHECK_THROWS_AS(SignedPermutation({0, 0}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(SignedPermutation({0, 2}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(SignedPermutation({0, 1}, {1, 0}), InvalidInput);
  CHECK_THROWS_AS(SignedPermutation({0, 1}, {1}), DimensionMismatch);
}

TEST_CASE("SignedPermutation acts by reorder then sign") {
  const SignedPermutation sp({2, 0, 1}, {1, -1, 1});
  CHECK(sp.apply(EuclideanPoint{1.0, 2.0, 3.0}) == EuclideanPoint{3.0, -1.0, 2.0});
  CHECK(SignedPermutation::identity(3).apply(EuclideanPoint{1.0, 2.0, 3.0}) == EuclideanPoint{1.0, 2.0, 3.0});

  const std::vector<std::complex<double>> z{{1.0, 1.0}, {0.0, -2.0}};
  const SignedPermutation swap({1, 0}, {-1, 1});
  const auto out = swap.apply<std::complex<double>>(z);
  CHECK(out[0] == std::complex<double>(0.0, 2.0));
  CHECK(out[1] == std::complex<double>(1.0, 1.0));
}
