#pragma once
// gl_n building blocks: reduced matrix elements of the fundamental tensor
// operator, reduced Wigner coefficients, Wigner coefficients of the standard
// representation, and the elementary lowering/raising action on gl patterns.
//
// Rows are indexed with negative indices: the upper row [m]_n has entries
// m_{-n,n}, ..., m_{-1,n} and the lower row [m]_{n-1} has entries
// m_{-n,n-1}, ..., m_{-2,n-1} (the upper-row indices shifted by one position,
// only index differences matter).  Every value is a signed square root of a
// rational; a negative radicand or a vanishing denominator raises DomainError.
//
// Readings fixed by exact comparison with the constructed gl_n modules:
//   red_me(i1)^2   = -prod_j (m_{j,n} - m_{i1,n-1} - j + i1 + 1)
//                     / prod_{j != i1} (m_{j,n-1} - m_{i1,n-1} - j + i1 + 1)
//   wigner(i)^2    =  prod_j (m_{j,n-1} - m_{i,n} - j + i)
//                     / prod_{j != i} (m_{j,n} - m_{i,n} - j + i)
//   red_wigner(i1, i2) = S(i2 - i1) * sqrt(
//        prod_{j != i2} (m_{j,n-1} - m_{i1,n} - j + i1) / prod_{j != i1} (m_{j,n} - m_{i1,n} - j + i1)
//      * prod_{j != i1} (m_{j,n} - m_{i2,n-1} - j + i2 + 1) / prod_{j != i2} (m_{j,n-1} - m_{i2,n-1} - j + i2 + 1))
// with S(x) = sign(x), S(0) = 1, and j running over the row named in each
// factor.  All are evaluated at the source rows (before the shift).

#include <utility>
#include <vector>

#include "gtbcd/numerics.hpp"
#include "gtbcd/patterns.hpp"

namespace gtbcd {

struct GlRowPair {
  Row upper;  // k entries
  Row lower;  // k - 1 entries
  /// ShapeError unless lower.size() + 1 == upper.size() and upper is nonempty.
  void check() const;
  /// True when upper_i >= lower_i >= upper_{i+1}.
  bool interlaces() const;
};

/// Squares of the kernel values (exact rationals, possibly negative outside
/// the selection rules).
Rational red_me_squared(const GlRowPair& rows, int i1);
Rational wigner_squared(const GlRowPair& rows, int i);
Rational red_wigner_squared(const GlRowPair& rows, int i1, int i2);

/// Reduced matrix element of the gl_{n-1} tensor operator E_{n,i1}; i1 in
/// -n..-2.  Nonnegative.
AlgebraicValue red_me(const GlRowPair& rows, int i1);
/// Reduced Wigner coefficient; i1 in -n..-1 (upper), i2 in -n..-2 (lower).
AlgebraicValue red_wigner(const GlRowPair& rows, int i1, int i2);
/// Wigner coefficient of the standard representation; i in -n..-1.
/// Nonnegative.
AlgebraicValue wigner(const GlRowPair& rows, int i);

/// The elementary lowering generator between rows k and k-1 (rows numbered
/// by length, the top row has length N) acting on a gl_N pattern: one term
/// per admissible decrement of an entry of row k-1, with the rational
/// coefficient red_me^2 of rows (k, k-1).  k in 2..N.
std::vector<std::pair<GlPattern, Rational>> gl_gt_lowering(const GlPattern& pattern, int k);
/// The companion raising generator (increment of an entry of row k-1) with
/// coefficient wigner^2 of rows (k-1, k-2) evaluated at the incremented row,
/// so that raising and lowering satisfy the gl_N commutation relations and
/// the product of the two coefficients of an edge is the squared matrix
/// element in the orthonormal basis.
std::vector<std::pair<GlPattern, Rational>> gl_gt_raising(const GlPattern& pattern, int k);

}  // namespace gtbcd
