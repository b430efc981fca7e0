#include "hartogs/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hartogs/error.hpp"

namespace hartogs {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

std::uint32_t exponent(std::int64_t e) {
  if (e < 0) throw HartogsError(ErrorKind::InternalMismatch, "negative exponent in numerator piece");
  return static_cast<std::uint32_t>(e);
}

void require_interior(std::int64_t m, std::int64_t n, const DomainPoint& z, const DomainPoint& w) {
  if (!in_domain(m, n, z) || !in_domain(m, n, w)) {
    throw HartogsError(ErrorKind::OutsideDomain, "point outside the domain H_{" + std::to_string(m) +
                                                     "/" + std::to_string(n) + "}");
  }
}

}  // namespace

std::string KernelRational::denominator_string() const {
  return std::to_string(pair.m()) + "*pi^2*(1-t)^2*(t^" + std::to_string(pair.n()) + "-s^" +
         std::to_string(pair.m()) + ")^2";
}

std::array<BiPoly, 5> numerator_pieces(const PairMN& pair) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  std::array<BiPoly, 5> p;
  p[0].add_term(exponent(m - 1), exponent(n), big(m * m));
  for (std::int64_t j = 0; j <= m - 2; ++j) {
    const std::int64_t L = index_L(pair, j);
    const std::int64_t kap = index_kappa(pair, j);
    p[1].add_term(exponent(j), exponent(2 * n - L), big((j + 1) * (kap + 1)));
    p[2].add_term(exponent(j), exponent(2 * n + 1 - L), big((j + 1) * (m - kap - 1)));
    p[3].add_term(exponent(j + m), exponent(n - L), big((m - j - 1) * (kap + 1)));
    p[4].add_term(exponent(j + m), exponent(n + 1 - L), big((m - j - 1) * (m - kap - 1)));
  }
  return p;
}

BiPoly numerator_effective(const PairMN& pair) {
  auto pieces = numerator_pieces(pair);
  BiPoly out;
  for (const auto& piece : pieces) out += piece;
  return out;
}

BiPoly numerator_oracle(const PairMN& pair) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  BiPoly out;
  for (std::int64_t b1 = 0; b1 <= 2 * m - 2; ++b1) {
    for (std::int64_t b2 = 0; b2 <= 2 * n; ++b2) {
      out.add_term(exponent(b1), exponent(b2), coeff_C(pair, {b1, b2}));
    }
  }
  return out;
}

KernelRational kernel_rational(const PairMN& pair) { return {pair, numerator_effective(pair)}; }

Complex eval_kernel(const KernelRational& kernel, const DomainPoint& z, const DomainPoint& w) {
  const std::int64_t m = kernel.pair.m();
  const std::int64_t n = kernel.pair.n();
  require_interior(m, n, z, w);
  const Complex s = z.z1 * std::conj(w.z1);
  const Complex t = z.z2 * std::conj(w.z2);
  // Numerator and denominator are both divided by t^(2n) and every power is
  // formed from logarithms, so large m, n neither underflow nor overflow:
  //     K = sum c_ij s^i t^(j-2n) / (m pi^2 (1-t)^2 (1 - s^m/t^n)^2).
  const double log_s = std::log(std::abs(s));
  const double log_t = std::log(std::abs(t));
  const double arg_s = std::arg(s);
  const double arg_t = std::arg(t);
  auto scaled_power = [&](std::int64_t i, std::int64_t j) {
    if (i == 0) return std::polar(std::exp(j * log_t), j * arg_t);
    return std::polar(std::exp(i * log_s + j * log_t), i * arg_s + j * arg_t);
  };
  Complex numer(0.0, 0.0);
  for (const auto& [e, c] : kernel.numerator.terms()) {
    if (e.first > 0 && s == Complex(0.0, 0.0)) continue;
    numer += c.get_d() * scaled_power(e.first, static_cast<std::int64_t>(e.second) - 2 * n);
  }
  const Complex u = s == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : scaled_power(m, -n);
  const Complex structural = (1.0 - t) * (1.0 - t) * (1.0 - u) * (1.0 - u);
  if (std::abs(structural) < 1e-300) {
    throw HartogsError(ErrorKind::DenominatorVanishes, "kernel denominator underflows");
  }
  return numer / (static_cast<double>(m) * kPi2 * structural);
}

Complex eval_kernel(const PairMN& pair, const DomainPoint& z, const DomainPoint& w) {
  return eval_kernel(kernel_rational(pair), z, w);
}

bool is_allowable(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b) {
  return a >= 0 && m * (b + 1) + n * (a + 1) > 0;
}

double monomial_norm_sq(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b) {
  if (!is_allowable(m, n, a, b)) {
    throw HartogsError(ErrorKind::DegenerateInput, "monomial is not square integrable");
  }
  const double weight = static_cast<double>(a + 1) * static_cast<double>(m * (b + 1) + n * (a + 1));
  return kPi2 * static_cast<double>(m) / weight;
}

SeriesResult series_kernel(std::int64_t m, std::int64_t n, const DomainPoint& z, const DomainPoint& w,
                           std::int64_t cutoff) {
  if (m < 1 || n < 1 || m < n) throw HartogsError(ErrorKind::DegenerateInput, "require m >= n >= 1");
  if (cutoff < 1) throw HartogsError(ErrorKind::DegenerateInput, "cutoff must be positive");
  require_interior(m, n, z, w);

  const Complex s = z.z1 * std::conj(w.z1);
  const Complex t = z.z2 * std::conj(w.z2);
  const double abs_s = std::abs(s);
  const double abs_t = std::abs(t);
  const double log_s = abs_s > 0.0 ? std::log(abs_s) : 0.0;
  const double log_t = std::log(abs_t);
  const double arg_s = std::arg(s);
  const double arg_t = std::arg(t);

  // Magnitudes and phases are assembled in log space: t^b with b << 0 and
  // s^a with a >> 0 individually over/underflow near the boundary.
  auto term = [&](std::int64_t a, std::int64_t b) -> Complex {
    const double inv_norm = 1.0 / monomial_norm_sq(m, n, a, b);
    if (a > 0 && abs_s == 0.0) return {0.0, 0.0};
    const double mag = std::exp(static_cast<double>(a) * log_s + static_cast<double>(b) * log_t);
    const double phase = static_cast<double>(a) * arg_s + static_cast<double>(b) * arg_t;
    return std::polar(mag * inv_norm, phase);
  };

  SeriesResult out;
  Complex sum(0.0, 0.0);
  double last_row = 0.0;
  double last_col = 0.0;
  for (std::int64_t a = 0; a <= cutoff; ++a) {
    const std::int64_t b_lo = std::max(-cutoff, floor_div(-n * (a + 1), m));
    for (std::int64_t b = b_lo; b <= cutoff; ++b) {
      const Complex v = term(a, b);
      sum += v;
      ++out.terms;
      if (a == cutoff) last_row += std::abs(v);
      if (b == cutoff) last_col += std::abs(v);
    }
  }
  out.value = sum;

  // Rows decay like (|s| |t|^(-n/m))^a and columns like |t|^b, up to
  // polynomial weights absorbed by the (1 + 3/cutoff) factor.
  const double slack = 1.0 + 3.0 / static_cast<double>(cutoff);
  const double rho_a = abs_s * std::pow(abs_t, -static_cast<double>(n) / static_cast<double>(m)) * slack;
  const double rho_b = abs_t * slack;
  auto geometric = [](double edge, double rho) {
    if (edge == 0.0) return 0.0;
    return rho < 1.0 ? edge * rho / (1.0 - rho) : std::numeric_limits<double>::infinity();
  };
  out.tail_bound = geometric(last_row, rho_a) + geometric(last_col, rho_b);
  return out;
}

SeriesResult series_kernel(const PairMN& pair, const DomainPoint& z, const DomainPoint& w,
                           std::int64_t cutoff) {
  return series_kernel(pair.m(), pair.n(), z, w, cutoff);
}

Complex restrict_s0(double gamma, Complex t) {
  if (!(gamma > 0.0)) throw HartogsError(ErrorKind::DegenerateInput, "gamma must be positive");
  if (t == Complex(0.0, 0.0) || !(std::abs(t) < 1.0)) {
    throw HartogsError(ErrorKind::DegenerateInput, "require 0 < |t| < 1");
  }
  const Complex one_minus_t = 1.0 - t;
  return (1.0 + (gamma - 1.0) * t) / (gamma * kPi2 * t * one_minus_t * one_minus_t);
}

std::optional<Rational> restrict_s0_zero(const Rational& gamma) {
  if (gamma <= 2) return std::nullopt;
  return Rational(1 / (1 - gamma));
}

Complex k1_kernel(const DomainPoint& z, const DomainPoint& w) {
  require_interior(1, 1, z, w);
  const Complex s = z.z1 * std::conj(w.z1);
  const Complex t = z.z2 * std::conj(w.z2);
  const Complex one_minus_t = 1.0 - t;
  const Complex gap = t - s;
  return t / (kPi2 * one_minus_t * one_minus_t * gap * gap);
}

}  // namespace hartogs
