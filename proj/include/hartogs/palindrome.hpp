#ifndef HARTOGS_PALINDROME_HPP
#define HARTOGS_PALINDROME_HPP

#include <array>
#include <cstdint>

#include "hartogs/arith.hpp"
#include "hartogs/poly.hpp"

namespace hartogs {

/// Q_{m,n}(s) = s^(1-2n) P_{m,n}(s, s), kept together with its five pieces
/// q0..q4 (q_i = s^(1-2n) p_i(s, s)). Palindromic of degree 2(m - n).
struct QPoly {
  PairMN pair;
  IntPoly poly;
  std::array<IntPoly, 5> pieces;
};

/// Builds q0..q4 from L and kappa, sums them, and cross-checks the result
/// against the diagonal restriction of the effective numerator.
/// Throws InternalMismatch if the two constructions disagree.
QPoly q_poly(const PairMN& pair);

/// s^(2k) q0(1/s) = q0, s^(2k) q1(1/s) = q4 and s^(2k) q2(1/s) = q3 with
/// k = m - n, checked by exact coefficient reversal at degree 2k.
bool verify_piece_identities(const QPoly& q);

/// Closed forms of Q along the families m - n = 1, pairs (l+1, l):
///     a0 (1 + s^2) + a1 s,  a0 = l(l+1)(l+2)/6,  a1 = (l+1)(2l^2+4l+3)/3,
/// and m - n = 2, pairs (2l+1, 2l-1):
///     a0 (1 + s^4) + a1 (s + s^3) + a2 s^2,
///     a0 = l(l+1)(2l+1)/6,  a1 = l(l+1)(2l+1),  a2 = (2l+1)(5l^2+5l+3)/3.
/// Throws UnsupportedFamily for k outside {1, 2} or ell < 1.
IntPoly family_closed_form(int k, std::int64_t ell);

/// The pair (m, n) indexed by (k, ell) in the families above.
PairMN family_pair(int k, std::int64_t ell);

}  // namespace hartogs

#endif  // HARTOGS_PALINDROME_HPP
