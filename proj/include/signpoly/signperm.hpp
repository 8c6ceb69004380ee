#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "signpoly/point.hpp"

// Enumeration of the distinct signed permutations of a vector.
//
// Entries are grouped into classes of values equal up to sign; zero entries
// form their own class and never receive a sign flip. A distinct image of the
// vector is then fixed by (a) an arrangement of class labels over positions
// and (b) a sign for every nonzero position, which gives the count
//
//     2^m · n! / (m_1! ··· m_k! · (n − m)!)
//
// with m nonzero entries, m_i the class multiplicities and n − m zeros.

namespace signpoly {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;
/// Two entries are in the same class when they agree up to sign within this.
inline constexpr double kClassTol = 1e-12;

struct SignClassLayout {
  /// Class label per position; kZeroClass marks (near-)zero entries.
  std::vector<int> class_of;
  /// Multiplicity of each nonzero class label 0..k-1.
  std::vector<std::size_t> multiplicities;
  std::size_t zero_count = 0;

  static constexpr int kZeroClass = -1;

  std::size_t size() const noexcept { return class_of.size(); }
  std::size_t nonzero_count() const noexcept { return size() - zero_count; }
};

SignClassLayout classify_up_to_sign(std::span<const double> values, double tol = kClassTol);
SignClassLayout classify_up_to_sign(std::span<const std::complex<double>> values, double tol = kClassTol);

/// Number of distinct signed images; saturates at UINT64_MAX.
std::uint64_t count_signed_images(const SignClassLayout& layout);
/// Number of distinct arrangements ignoring signs; saturates at UINT64_MAX.
std::uint64_t count_arrangements(const SignClassLayout& layout);

/// The distinct signed images of a vector, in a fixed order: arrangements of
/// class labels in lexicographic order (zeros first), then sign masks in
/// increasing order, bit j of the mask flipping the j-th nonzero position.
class SignPermutationSet {
 public:
  /// Throws EnumerationTooLarge when the image count exceeds cap.
  SignPermutationSet(SignClassLayout layout, std::uint64_t cap = kDefaultEnumerationCap);

  std::size_t size() const noexcept { return arrangements_.size() << nonzero_; }
  std::size_t arrangement_count() const noexcept { return arrangements_.size(); }
  const SignClassLayout& layout() const noexcept { return layout_; }

  /// Random access into the canonical order.
  SignedPermutation at(std::size_t index) const;

 private:
  SignClassLayout layout_;
  std::size_t nonzero_;
  // Source index per position for every arrangement.
  std::vector<std::vector<std::size_t>> arrangements_;
};

}  // namespace signpoly
