#include <doctest.h>

#include <random>

#include "signpoly/kernels.hpp"
#include "signpoly/quantum.hpp"

using namespace signpoly;

namespace {

std::vector<EuclideanPoint> random_points(std::size_t count, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<EuclideanPoint> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> c(n);
    for (double& v : c) v = u(rng);
    out.emplace_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("parallel batches match the serial reference") {
  const auto points = random_points(2000, 4, 31);
  const EuclideanPoint a{1.0, 0.5, 0.25, 0.0};
  const auto serial = kernels::sign_perm_member_batch(points, a, kDefaultTol, Execution::Serial);
  const auto parallel = kernels::sign_perm_member_batch(points, a, kDefaultTol, Execution::Parallel);
  CHECK(serial == parallel);

  const VertexSet v = enumerate_sign_perm_vertices(a);
  const std::vector<EuclideanPoint> few(points.begin(), points.begin() + 200);
  const auto lp_serial = kernels::hull_member_batch(few, v, kDefaultTol, Execution::Serial);
  const auto lp_parallel = kernels::hull_member_batch(few, v, kDefaultTol, Execution::Parallel);
  CHECK(lp_serial == lp_parallel);
  const std::vector<EuclideanPoint> head(points.begin(), points.begin() + 200);
  CHECK(lp_serial == kernels::sign_perm_member_batch(head, a, kDefaultTol, Execution::Serial));
}

TEST_CASE("Monte-Carlo estimate is independent of execution mode") {
  const auto s = kernels::monte_carlo_cross_polytope_volume(3, 1.0, 100'003, 99, Execution::Serial);
  const auto p = kernels::monte_carlo_cross_polytope_volume(3, 1.0, 100'003, 99, Execution::Parallel);
  CHECK(s.hits == p.hits);
  CHECK(s.volume == p.volume);
  CHECK(s.samples == 100'003);
  const auto other = kernels::monte_carlo_cross_polytope_volume(3, 1.0, 100'003, 100, Execution::Serial);
  CHECK(other.hits != s.hits);
}

TEST_CASE("cross_polytope_contained is monotone in alpha") {
  const VertexSet cube = enumerate_sign_perm_vertices({0.3, 0.3, 0.3});
  CHECK(kernels::cross_polytope_contained(0.0, cube));
  CHECK(kernels::cross_polytope_contained(0.1, cube));
  CHECK(kernels::cross_polytope_contained(0.3, cube));
  CHECK_FALSE(kernels::cross_polytope_contained(0.3 + 1e-6, cube));
  CHECK_FALSE(kernels::cross_polytope_contained(0.5, cube, kDefaultTol, Execution::Serial));
}

TEST_CASE("parallel pure-state enumeration preserves the canonical order") {
  std::mt19937_64 rng(32);
  std::normal_distribution<double> g;
  ComplexVector v = ComplexVector::Zero(8);
  v(0) = {g(rng), g(rng)};
  v(3) = {g(rng), g(rng)};
  v(6) = {g(rng), g(rng)};
  const auto psi = PureState::normalize(v).state;
  const auto serial = enumerate_pure_sign_perms(psi, PureFilter::WType, kStateTol, kDefaultEnumerationCap,
                                                Execution::Serial);
  const auto parallel = enumerate_pure_sign_perms(psi, PureFilter::WType, kStateTol, kDefaultEnumerationCap,
                                                  Execution::Parallel);
  REQUIRE(serial.states.size() == parallel.states.size());
  CHECK(serial.total == parallel.total);
  for (std::size_t i = 0; i < serial.states.size(); ++i) {
    CHECK(serial.states[i].amplitudes() == parallel.states[i].amplitudes());
  }
}
