// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// A criterion also fails when it overruns its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "signpoly/algorithms.hpp"
#include "signpoly/kernels.hpp"
#include "signpoly/majorization.hpp"
#include "signpoly/simplex.hpp"
#include "test_support.hpp"

using namespace signpoly;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

EuclideanPoint ones(std::size_t n) { return EuclideanPoint(std::vector<double>(n, 1.0)); }

Outcome vertex_count() {
  const EuclideanPoint a{0.758, 0, 0.809, 0, 0, 0.588, 0, 0.242};
  const auto count = count_sign_perm_vertices(a);
  const auto enumerated = enumerate_sign_perm_vertices(a).size();
  return {count == 26880 && enumerated == 26880,
          fmt("count %llu, enumerated %zu, expected 26880", static_cast<unsigned long long>(count), enumerated)};
}

Outcome cuboctahedron() {
  const double s = 1.0 / std::numbers::sqrt2;
  const auto rho = validate_state(testing::qubit_from_coords(s * s, 0, s * s));
  const auto e = enumerate_coord_sign_perms(rho);
  std::size_t pure = 0;
  for (const auto& m : e.states) pure += std::abs(purity(m) - 1.0) <= 1e-9;
  return {e.total == 12 && e.coords.size() == 12 && pure == 12,
          fmt("%llu candidates, %zu distinct vertices, %zu pure", static_cast<unsigned long long>(e.total),
              e.coords.size(), pure)};
}

Outcome w_filter() {
  ComplexVector amps = ComplexVector::Zero(8);
  amps[0] = Complex(0, 0.758);
  amps[2] = Complex(0.809, -0.588);
  amps[5] = Complex(0.809, 0.588);
  amps[7] = Complex(0.242, 0);
  const auto psi = PureState::normalize(amps).state;
  const auto e = enumerate_pure_sign_perms(psi, PureFilter::WType, 1e-9);
  const bool hard = e.total == 26880;
  const bool soft = e.states.size() == 5376;
  return {hard, fmt("enumerated %llu (hard target 26880), tau3 <= 1e-9 kept %zu (soft target 5376%s)",
                    static_cast<unsigned long long>(e.total), e.states.size(), soft ? ", matched" : ", differs")};
}

Outcome formula_consistency() {
  double worst = 0.0;
  for (std::size_t d : {2u, 3u, 4u}) {
    for (double alpha : {0.05, 0.2, 0.5, 1.0}) {
      const double rhs = cross_polytope_volume(d * d - 1, alpha);
      worst = std::max(worst, std::abs(robustness_fraction(d, alpha) * hs_volume(d) - rhs) / rhs);
    }
  }
  return {worst <= 1e-10, fmt("max relative error %.3g (limit 1e-10)", worst)};
}

Outcome hs_volume_qubit() {
  const double err = std::abs(hs_volume(2) - std::numbers::pi / 6.0);
  return {err <= 1e-12, fmt("hs_volume(2) = %.17g, |error| %.3g", hs_volume(2), err)};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2010);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  int disagreements = 0;
  int members = 0;
  int total = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> ac(n), xc(n);
      for (double& v : ac) v = u(rng);
      for (double& v : xc) v = 0.6 * u(rng);
      const EuclideanPoint a(ac);
      EuclideanPoint x(xc);
      // sign-permutation polytope
      const bool sp = sign_perm_member(x, a, kDefaultTol);
      disagreements += sp != hull_member_lp(x, enumerate_sign_perm_vertices(a), kDefaultTol).member;
      // permutahedron, with x moved onto the sum hyperplane every other trial
      if (trial % 2 == 0) x = x + ((a.sum() - x.sum()) / static_cast<double>(n)) * ones(n);
      const bool rado = rado_member(x, a, kDefaultTol);
      disagreements += rado != hull_member_lp(x, enumerate_permutation_vertices(a), kDefaultTol).member;
      members += sp + rado;
      total += 2;
    }
  }
  return {disagreements == 0, fmt("%d disagreements over %d comparisons (%d members)", disagreements, total, members)};
}

bool permutahedra_intersect_lp(const EuclideanPoint& a, const EuclideanPoint& b) {
  const VertexSet va = enumerate_permutation_vertices(a);
  const VertexSet vb = enumerate_permutation_vertices(b);
  const std::size_t n = a.size();
  DenseRows rows(n + 2, std::vector<double>(va.size() + vb.size(), 0.0));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < va.size(); ++i) rows[k][i] = va[i][k];
    for (std::size_t j = 0; j < vb.size(); ++j) rows[k][va.size() + j] = -vb[j][k];
  }
  for (std::size_t i = 0; i < va.size(); ++i) rows[n][i] = 1.0;
  for (std::size_t j = 0; j < vb.size(); ++j) rows[n + 1][va.size() + j] = 1.0;
  std::vector<double> rhs(n + 2, 0.0);
  rhs[n] = rhs[n + 1] = 1.0;
  return solve_feasibility(rows, rhs).feasible;
}

Outcome disjointness() {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> u(-3, 4);
  int disagreements = 0;
  int disjoint = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> ac(3), bc(3);
    for (double& v : ac) v = u(rng);
    for (double& v : bc) v = u(rng);
    // equal sums every other pair, so intersecting pairs show up too
    if (trial % 2 == 0) bc[0] += (ac[0] + ac[1] + ac[2]) - (bc[0] + bc[1] + bc[2]);
    const EuclideanPoint a(ac), b(bc);
    const bool d = hulls_disjoint(a, b);
    disjoint += d;
    disagreements += d == permutahedra_intersect_lp(a, b);
  }
  return {disagreements == 0, fmt("%d disagreements over 50 pairs (%d disjoint)", disagreements, disjoint)};
}

Outcome monte_carlo() {
  std::string detail;
  bool pass = true;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto mc = kernels::monte_carlo_cross_polytope_volume(n, 1.0, 1'000'000, 100 + n);
    const double exact = cross_polytope_volume(n, 1.0);
    const double z = std::abs(mc.volume - exact) / mc.std_error;
    pass = pass && z <= 3.0;
    detail += fmt("n=%zu: %.5f vs %.5f (%.2f sigma)%s", n, mc.volume, exact, z, n < 4 ? "; " : "");
  }
  return {pass, detail};
}

DecompositionInput qubit_decomposition(const std::vector<std::array<double, 3>>& coords) {
  std::vector<DensityMatrix> members;
  for (const auto& c : coords) members.push_back(validate_state(testing::qubit_from_coords(c[0], c[1], c[2])));
  const ConvexCombination w(std::vector<double>(coords.size(), 1.0 / static_cast<double>(coords.size())));
  const auto center = validate_state(ComplexMatrix::Identity(2, 2) / 2.0);
  return DecompositionInput(center, std::move(members), w);
}

Outcome algorithm_exactness() {
  const double r = 0.4;
  const double h = 0.3;
  const auto octa =
      max_inscribed_cross_polytope(qubit_decomposition({{r, 0, 0}, {-r, 0, 0}, {0, r, 0}, {0, -r, 0}, {0, 0, r}, {0, 0, -r}}));
  std::vector<std::array<double, 3>> corners;
  for (double sx : {h, -h}) {
    for (double sy : {h, -h}) {
      for (double sz : {h, -h}) corners.push_back({sx, sy, sz});
    }
  }
  const auto cube = max_inscribed_cross_polytope(qubit_decomposition(corners));
  const double e1 = std::abs(octa.alpha() - r);
  const double e2 = std::abs(cube.alpha() - h);
  return {e1 <= 1e-6 && e2 <= 1e-6,
          fmt("octahedron alpha %.10f (err %.2g), cube alpha %.10f (err %.2g)", octa.alpha(), e1, cube.alpha(), e2)};
}

Outcome isometry() {
  std::mt19937_64 rng(41);
  double worst = 0.0;
  for (std::size_t d : {2u, 3u}) {
    for (int i = 0; i < 50; ++i) {
      const auto a = validate_state(testing::random_density(d, rng));
      const auto b = validate_state(testing::random_density(d, rng));
      const double coord = (to_coords(a).point() - to_coords(b).point()).norm2();
      worst = std::max(worst, std::abs(hs_distance(a.matrix(), b.matrix()) - coord));
    }
  }
  return {worst <= 1e-10, fmt("max |HS - Euclidean| %.3g over 100 pairs", worst)};
}

Outcome tangle_anchors() {
  const double ghz = three_tangle(make_canonical(CanonicalState::GHZ));
  const double w = three_tangle(make_canonical(CanonicalState::W));
  ComplexVector zero = ComplexVector::Zero(8);
  zero[0] = 1.0;
  const double product = three_tangle(PureState(zero));
  return {std::abs(ghz - 1.0) <= 1e-10 && std::abs(w) <= 1e-10 && product == 0.0,
          fmt("GHZ %.12f, W %.3g, |000> %.3g", ghz, w, product)};
}

Outcome insphere_containment() {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int failures = 0;
  for (std::size_t n : {3u, 8u}) {
    const double alpha = 0.7;
    const double r = alpha / std::sqrt(static_cast<double>(n));
    const EuclideanPoint a = EuclideanPoint::axis(n, 0, alpha);
    for (int i = 0; i < 1000; ++i) {
      std::vector<double> c(n);
      for (double& v : c) v = g(rng);
      const EuclideanPoint dir(c);
      const double radius = r * std::pow(u(rng), 1.0 / static_cast<double>(n));
      failures += !sign_perm_member((radius / dir.norm2()) * dir, a);
    }
  }
  return {failures == 0, fmt("%d failures over 2000 points", failures)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "vertex count 26880", 10, vertex_count},
      {2, "cuboctahedron from (1/sqrt2, 0, 1/sqrt2)", 1, cuboctahedron},
      {3, "W-filter pipeline", 300, w_filter},
      {4, "fraction * hs_volume = cross volume", 1, formula_consistency},
      {5, "hs_volume(2) = pi/6", 1, hs_volume_qubit},
      {6, "majorization vs LP membership", 30, oracle_equivalence},
      {7, "hulls_disjoint vs LP intersection", 30, disjointness},
      {8, "Monte-Carlo cross-polytope volume", 30, monte_carlo},
      {9, "inscribed cross-polytope exactness", 10, algorithm_exactness},
      {10, "HS isometry of the coordinate map", 5, isometry},
      {11, "three-tangle anchors", 1, tangle_anchors},
      {12, "insphere containment", 5, insphere_containment},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    failed += !pass;
    std::printf("%s  %2d  %-42s %8.3f s (budget %g s)%s  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_seconds, in_time ? "" : " OVER BUDGET", outcome.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
