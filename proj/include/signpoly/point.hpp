#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "signpoly/error.hpp"

namespace signpoly {

/// A real n-vector with n >= 1 and finite entries. Immutable once built.
class EuclideanPoint {
 public:
  explicit EuclideanPoint(std::vector<double> coords);
  EuclideanPoint(std::initializer_list<double> coords);

  static EuclideanPoint zeros(std::size_t n);
  /// scale * e_k in n dimensions.
  static EuclideanPoint axis(std::size_t n, std::size_t k, double scale = 1.0);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  auto begin() const noexcept { return coords_.cbegin(); }
  auto end() const noexcept { return coords_.cend(); }

  double sum() const noexcept;
  double norm1() const noexcept;
  double norm2() const noexcept;
  double norm_inf() const noexcept;
  double dot(const EuclideanPoint& other) const;

  /// Componentwise absolute value, i.e. the image in the positive orthant.
  EuclideanPoint abs() const;

  bool approx_equal(const EuclideanPoint& other, double tol) const;

  friend EuclideanPoint operator+(const EuclideanPoint& a, const EuclideanPoint& b);
  friend EuclideanPoint operator-(const EuclideanPoint& a, const EuclideanPoint& b);
  friend EuclideanPoint operator*(double s, const EuclideanPoint& a);
  friend bool operator==(const EuclideanPoint& a, const EuclideanPoint& b) = default;

 private:
  std::vector<double> coords_;
};

void require_same_dimension(const EuclideanPoint& a, const EuclideanPoint& b);

/// x ↦ (s_1 x_{π(1)}, …, s_n x_{π(n)}) with π a bijection and s_i ∈ {+1, −1}.
class SignedPermutation {
 public:
  SignedPermutation(std::vector<std::size_t> perm, std::vector<std::int8_t> signs);

  static SignedPermutation identity(std::size_t n);

  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const std::size_t> perm() const noexcept { return perm_; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  EuclideanPoint apply(const EuclideanPoint& p) const;

  /// Works for any ring element type (double, std::complex<double>, ...).
  template <class T>
  std::vector<T> apply(std::span<const T> values) const {
    if (values.size() != perm_.size()) throw DimensionMismatch(perm_.size(), values.size());
    std::vector<T> out(values.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      out[i] = signs_[i] < 0 ? -values[perm_[i]] : values[perm_[i]];
    }
    return out;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<std::int8_t> signs_;
};

}  // namespace signpoly
