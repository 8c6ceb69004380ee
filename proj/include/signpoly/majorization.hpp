#pragma once

#include "signpoly/point.hpp"

// Majorization and weak majorization on real n-vectors, plus the two
// membership characterizations built on them:
//
//   x in conv{π(a)}   iff  x ≺ a        (permutahedron)
//   x in conv{±π(a)}  iff  |x| ≺_w |a|  (sign permutation polytope)
//
// All partial-sum comparisons are absolute with tolerance `tol`.

namespace signpoly {

inline constexpr double kDefaultTol = 1e-9;

/// How the total-sum comparison of weak majorization is made.
///   Closed: ∑x* <= ∑a* + tol, so polytope boundary points are members.
///   Strict: ∑x* <  ∑a*, the literal strict form (boundary excluded).
enum class Boundary { Closed, Strict };

/// Non-increasing rearrangement; stable among ties.
EuclideanPoint sort_desc(const EuclideanPoint& p);

/// True iff a ≺ b, i.e. a is majorized by b.
bool majorizes(const EuclideanPoint& b, const EuclideanPoint& a, double tol = kDefaultTol);

/// True iff x ≺_w a, comparing the descending rearrangements as given.
bool weakly_majorized(const EuclideanPoint& x, const EuclideanPoint& a, double tol = kDefaultTol,
                      Boundary boundary = Boundary::Closed);

/// Membership of x in the permutahedron conv{π(a) : π ∈ S_n}.
bool rado_member(const EuclideanPoint& x, const EuclideanPoint& a, double tol = kDefaultTol);

/// Membership of x in conv{±π(a)}. Both arguments are first folded into the
/// positive orthant by taking absolute values.
bool sign_perm_member(const EuclideanPoint& x, const EuclideanPoint& a, double tol = kDefaultTol,
                      Boundary boundary = Boundary::Closed);

}  // namespace signpoly
