#include "hartogs/rootloc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>

#include "hartogs/error.hpp"

namespace hartogs {

const char* to_string(CensusMethod method) {
  switch (method) {
    case CensusMethod::PalindromicPairing: return "palindromic_pairing";
    case CensusMethod::SchurCohn: return "schur_cohn";
  }
  return "unknown";
}

const char* to_string(RootLocation loc) {
  switch (loc) {
    case RootLocation::Inside: return "inside";
    case RootLocation::OnCircle: return "on_circle";
    case RootLocation::Outside: return "outside";
  }
  return "unknown";
}

IntPoly chebyshev_t(std::size_t j) {
  IntPoly prev{1};
  if (j == 0) return prev;
  IntPoly cur{0, 1};
  const IntPoly two_x{0, 2};
  for (std::size_t i = 1; i < j; ++i) {
    IntPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

CirclePolynomial chebyshev_reduce(const IntPoly& p) {
  if (!p.is_palindromic()) {
    throw HartogsError(ErrorKind::NotPalindromic, "Chebyshev reduction needs a palindromic polynomial");
  }
  const auto k = static_cast<std::size_t>(p.degree() / 2);
  IntPoly g = IntPoly::constant(p[k]);
  IntPoly prev{1};
  IntPoly cur{0, 1};
  const IntPoly two_x{0, 2};
  for (std::size_t j = 1; j <= k; ++j) {
    g += cur * Integer(2 * p[k + j]);
    IntPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {to_rational(g)};
}

namespace {

std::size_t sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& f : chain) {
    const int s = sgn(f.eval_exact(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Sturm chain of a squarefree f; members are primitive positive multiples of
// the classical chain, so sign patterns are unchanged.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
  std::vector<IntPoly> chain{primitive_part(f)};
  if (f.degree() <= 0) return chain;
  chain.push_back(primitive_part(chain.front().derivative()));
  while (chain.back().degree() > 0) {
    IntPoly r = primitive_remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

std::size_t sturm_count_squarefree(const IntPoly& f, const Rational& a, const Rational& b) {
  if (f.degree() <= 0) return 0;
  const auto chain = sturm_chain(f);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

IntPoly reversed_at(const IntPoly& p) { return p.reverse(); }

bool is_root(const IntPoly& p, long x) { return sgn(p.eval_exact(Rational(x))) == 0; }

}  // namespace

std::size_t sturm_count(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw HartogsError(ErrorKind::DegenerateInput, "Sturm count of the zero polynomial");
  if (!(a < b)) throw HartogsError(ErrorKind::DegenerateInput, "Sturm interval needs a < b");
  if (p.degree() == 0) return 0;
  return sturm_count_squarefree(primitive_part(squarefree_part(p)), a, b);
}

std::size_t circle_root_count(const IntPoly& p) {
  const RatPoly g = chebyshev_reduce(p).cheb;
  if (g.degree() <= 0) return 0;
  const Rational lo = -1;
  const Rational hi = 1;
  std::size_t weighted = 0;
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    std::size_t distinct = sturm_count_squarefree(primitive_part(factor), lo, hi);
    if (sgn(factor.eval_exact(lo)) == 0) ++distinct;
    weighted += distinct * mult;
  }
  return 2 * weighted;
}

namespace {

std::string format_tol(double tol) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", tol);
  return buf;
}

std::size_t schur_cohn_step(IntPoly q, int budget) {
  if (budget <= 0) {
    throw HartogsError(ErrorKind::InternalMismatch, "Schur-Cohn recursion exceeded its step budget");
  }
  const int origin = q.valuation();
  if (origin < 0) throw HartogsError(ErrorKind::DegenerateInput, "Schur-Cohn on the zero polynomial");
  q = q.shift_down(static_cast<std::size_t>(origin));
  const auto base = static_cast<std::size_t>(origin);
  const int degree = q.degree();
  if (degree == 0) return base;

  const Integer a0 = q[0];
  const Integer an = q.leading();
  const IntPoly rev = reversed_at(q);
  IntPoly reduced = q * a0 - rev * an;
  const Integer delta = a0 * a0 - an * an;

  if (sgn(delta) == 0) {
    if (reduced.is_zero()) {
      if (a0 != an || degree % 2 != 0 || circle_root_count(q) != 0) {
        throw HartogsError(ErrorKind::DegenerateInput, "Schur-Cohn input has roots on the unit circle");
      }
      return base + 1 + schur_cohn_step(q.derivative(), budget - 1);
    }
    const IntPoly lifted = q * IntPoly{-1, 2};
    return base + schur_cohn_step(lifted, budget - 1) - 1;
  }

  const std::size_t inner = schur_cohn_step(primitive_part(reduced), budget - 1);
  if (sgn(delta) > 0) return base + inner;
  return base + static_cast<std::size_t>(degree) - inner;
}

}  // namespace

std::size_t schur_cohn_inside(const IntPoly& p) {
  return schur_cohn_step(primitive_part(p), 4 * std::max(p.degree(), 1) + 16);
}

RootCensus interior_root_count(const IntPoly& p) {
  if (p.is_zero() || sgn(p[0]) == 0) {
    throw HartogsError(ErrorKind::ZeroConstantTerm, "root census needs p(0) != 0");
  }
  RootCensus census;
  const auto degree = static_cast<std::size_t>(p.degree());
  if (degree == 0) return census;

  if (p.is_palindromic()) {
    const std::size_t on = circle_root_count(p);
    if (on == 0) {
      census.method = CensusMethod::PalindromicPairing;
      census.inside = census.outside = degree / 2;
      return census;
    }
  }

  census.method = CensusMethod::SchurCohn;
  const IntPoly g = primitive_part(gcd(to_rational(p), to_rational(p.reverse())));

  std::size_t on = 0;
  IntPoly core = g;
  for (long root : {1L, -1L}) {
    const IntPoly linear{Integer(-root), Integer(1)};
    while (core.degree() > 0 && is_root(core, root)) {
      core = exact_div(core, linear);
      ++on;
    }
  }
  core = primitive_part(core);
  if (sgn(core.leading()) < 0) core = -core;
  if (!core.is_palindromic() && core.degree() > 0) {
    throw HartogsError(ErrorKind::InternalMismatch, "self-reciprocal factor is not palindromic");
  }
  if (core.degree() > 0) on += circle_root_count(core);

  const auto g_degree = static_cast<std::size_t>(g.degree());
  const std::size_t inside_g = (g_degree - on) / 2;
  const IntPoly h = exact_div(p, g);
  const std::size_t inside_h = h.degree() > 0 ? schur_cohn_inside(h) : 0;

  census.on_circle = on;
  census.inside = inside_g + inside_h;
  census.outside = degree - census.inside - census.on_circle;
  return census;
}

double root_residual(const IntPoly& p, Complex r) {
  // For |r| > 1 both numerator and scale are divided by |r|^N, which is the
  // same ratio evaluated on the reversed polynomial at 1/r.
  const bool flip = std::abs(r) > 1.0;
  const Complex x = flip ? 1.0 / r : r;
  const double ax = std::abs(x);
  const auto& c = p.coeffs();
  Complex f(0.0, 0.0);
  double scale = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double ci = (flip ? c[i] : c[c.size() - 1 - i]).get_d();
    f = f * x + ci;
    scale = scale * ax + std::abs(ci);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(f) / scale;
}

std::vector<Complex> numeric_roots(const IntPoly& p, double tol) {
  const int degree = p.degree();
  if (degree < 1) throw HartogsError(ErrorKind::DegenerateInput, "numeric roots need degree >= 1");

  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  const double lead = p.leading().get_d();
  for (const auto& x : p.coeffs()) c.emplace_back(x.get_d() / lead, 0.0);
  const auto n = static_cast<std::size_t>(degree);

  // Newton correction p/p' at z. Outside the unit disc it is computed from
  // the reversal q(w) = w^N p(1/w): p/p' = z / (N - w q'(w)/q(w)), w = 1/z,
  // which avoids overflow of z^N for large degrees.
  auto newton_ratio = [&](Complex z) -> std::optional<Complex> {
    const bool flip = std::abs(z) > 1.0;
    const Complex x = flip ? 1.0 / z : z;
    Complex f = flip ? c[0] : c[n];
    Complex df(0.0, 0.0);
    for (std::size_t i = 1; i <= n; ++i) {
      df = df * x + f;
      f = f * x + (flip ? c[i] : c[n - i]);
    }
    if (f == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
    if (!flip) {
      if (df == Complex(0.0, 0.0)) return std::nullopt;
      return f / df;
    }
    const Complex denom = static_cast<double>(n) - x * df / f;
    if (denom == Complex(0.0, 0.0)) return std::nullopt;
    return z / denom;
  };

  std::vector<Complex> z(n);
  if (n == 1) {
    z[0] = -c[0];
  } else {
    // Start on a circle of the geometric-mean root radius, rotated off the
    // real axis so that conjugate-symmetric inputs do not stall.
    const double radius = std::pow(std::max(std::abs(c[0]), 1e-300), 1.0 / static_cast<double>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
      z[k] = std::polar(radius, angle);
    }
    // A root is frozen once its correction is at rounding level relative to
    // its modulus; frozen roots still repel the others.
    constexpr int kMaxIter = 2000;
    std::vector<bool> frozen(n, false);
    std::size_t active = n;
    for (int iter = 0; iter < kMaxIter && active > 0; ++iter) {
      for (std::size_t k = 0; k < n; ++k) {
        if (frozen[k]) continue;
        const auto r = newton_ratio(z[k]);
        if (!r) continue;
        if (*r == Complex(0.0, 0.0)) {
          frozen[k] = true;
          --active;
          continue;
        }
        const Complex ratio = *r;
        Complex repulsion(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
          if (j != k) repulsion += 1.0 / (z[k] - z[j]);
        }
        const Complex step = ratio / (1.0 - ratio * repulsion);
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
        z[k] -= step;
        if (std::abs(step) <= 1e-15 * std::abs(z[k])) {
          frozen[k] = true;
          --active;
        }
      }
    }
  }

  // Newton polish: only accepted when the backward error improves.
  for (auto& r : z) {
    for (int i = 0; i < 3; ++i) {
      const auto ratio = newton_ratio(r);
      if (!ratio) break;
      const Complex candidate = r - *ratio;
      if (root_residual(p, candidate) < root_residual(p, r)) r = candidate;
      else break;
    }
  }

  for (const auto& r : z) {
    if (!(root_residual(p, r) <= tol)) {
      throw HartogsError(ErrorKind::ConvergenceFailure,
                         "root finder did not reach residual " + format_tol(tol));
    }
  }
  std::sort(z.begin(), z.end(), [](Complex a, Complex b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a.imag() < b.imag();
  });
  return z;
}

void attach_float_roots(RootCensus& census, const IntPoly& p, double tol) {
  constexpr double kGuard = 1e-9;
  std::vector<ApproxRoot> roots;
  std::size_t inside = 0, on = 0, outside = 0;
  for (const auto& r : numeric_roots(p, tol)) {
    ApproxRoot a{r, root_residual(p, r), RootLocation::Inside};
    const double mod = std::abs(r);
    if (mod < 1.0 - kGuard) {
      a.location = RootLocation::Inside;
      ++inside;
    } else if (mod > 1.0 + kGuard) {
      a.location = RootLocation::Outside;
      ++outside;
    } else {
      a.location = RootLocation::OnCircle;
      ++on;
    }
    roots.push_back(a);
  }
  if (inside != census.inside || on != census.on_circle || outside != census.outside) {
    census.warnings.push_back("float classification (inside=" + std::to_string(inside) +
                              ", on=" + std::to_string(on) + ", outside=" + std::to_string(outside) +
                              ") disagrees with exact census (inside=" + std::to_string(census.inside) +
                              ", on=" + std::to_string(census.on_circle) +
                              ", outside=" + std::to_string(census.outside) + ")");
  }
  census.float_roots = std::move(roots);
}

}  // namespace hartogs
