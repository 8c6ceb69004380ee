#include "signpoly/signperm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "signpoly/error.hpp"

namespace signpoly {

namespace {

template <class T, class Magnitude, class SameUpToSign>
SignClassLayout classify(std::span<const T> values, double tol, Magnitude magnitude, SameUpToSign same) {
  SignClassLayout layout;
  layout.class_of.assign(values.size(), SignClassLayout::kZeroClass);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (magnitude(values[i]) <= tol) {
      ++layout.zero_count;
      continue;
    }
    std::size_t c = 0;
    while (c < representative.size() && !same(values[representative[c]], values[i])) ++c;
    if (c == representative.size()) {
      representative.push_back(i);
      layout.multiplicities.push_back(0);
    }
    layout.class_of[i] = static_cast<int>(c);
    ++layout.multiplicities[c];
  }
  return layout;
}

__extension__ using Wide = unsigned __int128;
constexpr Wide kSaturated = std::numeric_limits<std::uint64_t>::max();

Wide binomial_saturating(std::size_t n, std::size_t k) {
  Wide r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated + 1;
  }
  return r;
}

}  // namespace

SignClassLayout classify_up_to_sign(std::span<const double> values, double tol) {
  return classify<double>(
      values, tol, [](double v) { return std::abs(v); },
      [tol](double a, double b) { return std::abs(std::abs(a) - std::abs(b)) <= tol; });
}

SignClassLayout classify_up_to_sign(std::span<const std::complex<double>> values, double tol) {
  using C = std::complex<double>;
  return classify<C>(
      values, tol, [](const C& v) { return std::abs(v); },
      [tol](const C& a, const C& b) { return std::abs(a - b) <= tol || std::abs(a + b) <= tol; });
}

std::uint64_t count_arrangements(const SignClassLayout& layout) {
  // n! / (z! m_1! ... m_k!) as a product of binomials.
  Wide total = 1;
  std::size_t remaining = layout.size();
  auto take = [&](std::size_t k) {
    const Wide b = binomial_saturating(remaining, k);
    remaining -= k;
    if (b > kSaturated || total * b > kSaturated) {
      total = kSaturated;
      return false;
    }
    total *= b;
    return true;
  };
  if (!take(layout.zero_count)) return std::numeric_limits<std::uint64_t>::max();
  for (std::size_t m : layout.multiplicities) {
    if (!take(m)) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_signed_images(const SignClassLayout& layout) {
  const std::uint64_t arrangements = count_arrangements(layout);
  const std::size_t m = layout.nonzero_count();
  if (m >= 64) return std::numeric_limits<std::uint64_t>::max();
  const Wide total = Wide{arrangements} << m;
  if (arrangements == std::numeric_limits<std::uint64_t>::max() || total > kSaturated) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(total);
}

SignPermutationSet::SignPermutationSet(SignClassLayout layout, std::uint64_t cap)
    : layout_(std::move(layout)), nonzero_(layout_.nonzero_count()) {
  const std::uint64_t count = count_signed_images(layout_);
  if (count > cap) throw EnumerationTooLarge(count, cap);

  // Source indices of each class, in position order.
  const std::size_t k = layout_.multiplicities.size();
  std::vector<std::vector<std::size_t>> sources(k + 1);  // slot 0 holds zeros
  for (std::size_t i = 0; i < layout_.size(); ++i) {
    sources[static_cast<std::size_t>(layout_.class_of[i] + 1)].push_back(i);
  }

  std::vector<int> labels(layout_.class_of);
  std::sort(labels.begin(), labels.end());
  arrangements_.reserve(static_cast<std::size_t>(count_arrangements(layout_)));
  std::vector<std::size_t> next(k + 1);
  do {
    std::fill(next.begin(), next.end(), 0);
    std::vector<std::size_t> src(labels.size());
    for (std::size_t pos = 0; pos < labels.size(); ++pos) {
      const auto slot = static_cast<std::size_t>(labels[pos] + 1);
      src[pos] = sources[slot][next[slot]++];
    }
    arrangements_.push_back(std::move(src));
  } while (std::next_permutation(labels.begin(), labels.end()));
}

SignedPermutation SignPermutationSet::at(std::size_t index) const {
  const std::size_t arrangement = index >> nonzero_;
  std::size_t mask = index & ((std::size_t{1} << nonzero_) - 1);
  const auto& src = arrangements_.at(arrangement);
  std::vector<std::int8_t> signs(src.size(), 1);
  for (std::size_t pos = 0; pos < src.size(); ++pos) {
    if (layout_.class_of[src[pos]] == SignClassLayout::kZeroClass) continue;
    if (mask & 1U) signs[pos] = -1;
    mask >>= 1U;
  }
  return SignedPermutation(src, std::move(signs));
}

}  // namespace signpoly
