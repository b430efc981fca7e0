#ifndef HARTOGS_KERNEL_HPP
#define HARTOGS_KERNEL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "hartogs/arith.hpp"
#include "hartogs/domain.hpp"
#include "hartogs/poly.hpp"

namespace hartogs {

/// Bergman kernel of H_{m/n} as a rational function of s = z1 conj(w1),
/// t = z2 conj(w2):
///
///     K(z, w) = P_{m,n}(s, t) / (m pi^2 (1 - t)^2 (t^n - s^m)^2).
///
/// Only the numerator is stored; the denominator is structural.
struct KernelRational {
  PairMN pair;
  BiPoly numerator;

  std::string denominator_string() const;
};

/// Numerator as the sum of the five closed-form pieces p0..p4, which are
/// driven by the index functions L and kappa. Produces exactly 4m - 3 terms.
BiPoly numerator_effective(const PairMN& pair);

/// The five pieces p0..p4 individually (p0 is the single peak monomial).
std::array<BiPoly, 5> numerator_pieces(const PairMN& pair);

/// Brute-force numerator: the D_m double sum over the full rectangle
/// 0 <= beta1 <= 2m-2, 0 <= beta2 <= 2n. Ground truth for numerator_effective.
BiPoly numerator_oracle(const PairMN& pair);

KernelRational kernel_rational(const PairMN& pair);

/// Floating evaluation of the closed-form kernel.
/// Throws OutsideDomain unless both points lie strictly inside H_{m/n}, and
/// DenominatorVanishes if |(1-t)^2 (t^n - s^m)^2| < 1e-300.
Complex eval_kernel(const KernelRational& kernel, const DomainPoint& z, const DomainPoint& w);
Complex eval_kernel(const PairMN& pair, const DomainPoint& z, const DomainPoint& w);

/// Monomial z1^a z2^b is square integrable on H_{m/n} iff a >= 0 and
/// m(b+1) + n(a+1) > 0.
bool is_allowable(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);

/// ||z1^a z2^b||^2 = pi^2 m / ((a+1)(m(b+1) + n(a+1))) for allowable (a, b),
/// from polar integration over {r1^(m/n) < r2 < 1}.
double monomial_norm_sq(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);

struct SeriesResult {
  Complex value;
  /// Geometric-domination estimate of the omitted tail (absolute).
  double tail_bound = 0.0;
  std::size_t terms = 0;
};

/// Truncated monomial expansion of the kernel over allowable (a, b) with
/// a, |b| <= cutoff. Works for any m >= n >= 1 (m == n == 1 is H_1), so it
/// also serves as an oracle for the H_1 closed form.
SeriesResult series_kernel(std::int64_t m, std::int64_t n, const DomainPoint& z,
                           const DomainPoint& w, std::int64_t cutoff);
SeriesResult series_kernel(const PairMN& pair, const DomainPoint& z, const DomainPoint& w,
                           std::int64_t cutoff);

/// Kernel restricted to {z1 = w1 = 0}, with t = z2 conj(w2):
///     (1 + (gamma - 1) t) / (gamma pi^2 t (1 - t)^2).
/// Throws DegenerateInput when t == 0 or |t| >= 1.
Complex restrict_s0(double gamma, Complex t);

/// The zero t = 1 / (1 - gamma) of the restricted kernel, which lies in the
/// punctured unit disc exactly when gamma > 2.
std::optional<Rational> restrict_s0_zero(const Rational& gamma);

/// Classical Hartogs triangle kernel
///     t / (pi^2 (1 - t)^2 (t - s)^2).
Complex k1_kernel(const DomainPoint& z, const DomainPoint& w);

}  // namespace hartogs

#endif  // HARTOGS_KERNEL_HPP
