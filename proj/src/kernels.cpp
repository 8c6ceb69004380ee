#include "signpoly/kernels.hpp"

#include <cmath>
#include <random>

#include "signpoly/majorization.hpp"

namespace signpoly::kernels {

namespace {

constexpr std::uint64_t kChunk = 1U << 14U;

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32U)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32U) | words[1];
}

}  // namespace

std::vector<char> sign_perm_member_batch(std::span<const EuclideanPoint> points, const EuclideanPoint& a,
                                         double tol, Execution exec) {
  std::vector<char> out(points.size(), 0);
  for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = sign_perm_member(points[i], a, tol); });
  return out;
}

std::vector<char> hull_member_batch(std::span<const EuclideanPoint> points, const VertexSet& v, double tol,
                                    Execution exec) {
  std::vector<char> out(points.size(), 0);
  for_each_index(points.size(), exec, [&](std::size_t i) { out[i] = hull_member_lp(points[i], v, tol).member; });
  return out;
}

bool cross_polytope_contained(double alpha, const VertexSet& v, double tol, Execution exec) {
  const CrossPolytopeSpec spec(alpha, EuclideanPoint::zeros(v.dimension()));
  const auto vertices = spec.vertices();
  const auto inside = hull_member_batch(vertices, v, tol, exec);
  for (char c : inside) {
    if (!c) return false;
  }
  return true;
}

MonteCarloEstimate monte_carlo_cross_polytope_volume(std::size_t n, double alpha, std::uint64_t samples,
                                                     std::uint64_t seed, Execution exec) {
  MonteCarloEstimate est;
  est.samples = samples;
  if (samples == 0 || n == 0) return est;

  const std::uint64_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<std::uint64_t> hits(chunks, 0);
  for_each_index(static_cast<std::size_t>(chunks), exec, [&](std::size_t c) {
    std::mt19937_64 rng(chunk_seed(seed, c));
    std::uniform_real_distribution<double> coord(-alpha, alpha);
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min(samples, begin + kChunk);
    std::uint64_t local = 0;
    for (std::uint64_t s = begin; s < end; ++s) {
      double l1 = 0.0;
      for (std::size_t k = 0; k < n; ++k) l1 += std::abs(coord(rng));
      if (l1 <= alpha) ++local;
    }
    hits[c] = local;
  });

  for (std::uint64_t h : hits) est.hits += h;
  const double box = std::pow(2.0 * alpha, static_cast<double>(n));
  const double p = static_cast<double>(est.hits) / static_cast<double>(samples);
  est.volume = box * p;
  est.std_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return est;
}

}  // namespace signpoly::kernels
