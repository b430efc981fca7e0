#ifndef HARTOGS_ROOTLOC_HPP
#define HARTOGS_ROOTLOC_HPP

// Exact localization of polynomial roots relative to the unit circle.
//
// All inside/on/outside decisions are made in exact integer or rational
// arithmetic; floating roots are diagnostics only.
//
// Circle roots of a palindromic p of degree 2k are counted through the
// Chebyshev reduction G(x) with p(s) = s^k G((s + 1/s)/2). The map
// s -> (s + 1/s)/2 is two-to-one from the circle onto [-1, 1]:
//   * a root x0 in (-1, 1) of multiplicity mu gives the conjugate pair
//     e^{+-i theta0}, each of multiplicity mu;
//   * a root x0 = +-1 of multiplicity mu gives the single root s = +-1 of
//     multiplicity 2 mu, since (s + 1/s)/2 -+ 1 = (s -+ 1)^2 / (2s).
// Either way the weighted circle count is twice the weighted number of
// roots of G in [-1, 1].
//
// Interior counts off the palindromic path use a Schur-Cohn recursion on
// integer polynomials. Circle roots are deflated first: g = gcd(p, p~) (p~
// the reversal) carries every circle root and every reciprocal pair r, 1/r,
// so its inside count is (deg g - on(g)) / 2, and p / g is circle-free.
// Singular steps of the recursion (|a0| = |aN|) are resolved without
// perturbation:
//   * self-reciprocal q: inside(q) = 1 + inside(q'), because Re(s q'/q) =
//     deg(q)/2 > 0 on the circle;
//   * otherwise q is multiplied by (2s - 1), which adds one known interior
//     root and makes the next step regular.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hartogs/arith.hpp"
#include "hartogs/poly.hpp"

namespace hartogs {

enum class CensusMethod { PalindromicPairing, SchurCohn };
const char* to_string(CensusMethod method);

enum class RootLocation { Inside, OnCircle, Outside };
const char* to_string(RootLocation loc);

struct ApproxRoot {
  Complex value;
  /// |p(r)| / sum_i |c_i| |r|^i.
  double residual = 0.0;
  RootLocation location = RootLocation::Inside;
};

struct RootCensus {
  std::size_t inside = 0;
  std::size_t on_circle = 0;
  std::size_t outside = 0;
  CensusMethod method = CensusMethod::PalindromicPairing;
  std::optional<std::vector<ApproxRoot>> float_roots;
  /// Disagreements between float classification and the exact census.
  std::vector<std::string> warnings;
};

/// Polynomial in x = cos(theta) with p(e^{i theta}) e^{-ik theta} = G(cos theta).
struct CirclePolynomial {
  RatPoly cheb;
};

/// Chebyshev reduction of a palindromic polynomial of degree 2k: returns
/// c_k + sum_{j=1..k} 2 c_{k+j} T_j(x). Throws NotPalindromic.
CirclePolynomial chebyshev_reduce(const IntPoly& p);

/// Chebyshev polynomial of the first kind, via T_{j+1} = 2x T_j - T_{j-1}.
IntPoly chebyshev_t(std::size_t j);

/// Number of distinct real roots of p in the half-open interval (a, b].
/// Repeated factors are removed by an exact gcd before the Sturm chain is built.
std::size_t sturm_count(const RatPoly& p, const Rational& a, const Rational& b);

/// Roots of a palindromic polynomial on |s| = 1, counted with multiplicity.
/// Throws NotPalindromic.
std::size_t circle_root_count(const IntPoly& p);

/// Interior count of p by the Schur-Cohn recursion. Requires p to have no
/// roots on the unit circle; roots at the origin count as interior.
std::size_t schur_cohn_inside(const IntPoly& p);

/// Exact census of roots inside / on / outside the unit circle.
/// Palindromic inputs without circle roots are split in half by pairing;
/// everything else goes through circle deflation and Schur-Cohn.
/// Throws ZeroConstantTerm when p(0) == 0 and DegenerateInput for constants.
RootCensus interior_root_count(const IntPoly& p);

/// All complex roots by Aberth-Ehrlich iteration, polished by Newton steps,
/// each with backward-error residual <= tol. Throws ConvergenceFailure when
/// the iteration budget is exhausted and DegenerateInput for constants.
std::vector<Complex> numeric_roots(const IntPoly& p, double tol = 1e-12);

/// Attaches float roots to the census: each root is classified against the
/// unit circle with a guard band of 1e-9, and every disagreement with the
/// exact counts is appended to census.warnings (never silently resolved).
void attach_float_roots(RootCensus& census, const IntPoly& p, double tol = 1e-12);

/// Backward-error residual |p(r)| / sum_i |c_i| |r|^i.
double root_residual(const IntPoly& p, Complex r);

}  // namespace hartogs

#endif  // HARTOGS_ROOTLOC_HPP
