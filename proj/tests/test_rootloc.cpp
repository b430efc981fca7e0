#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hartogs/palindrome.hpp"
#include "hartogs/rootloc.hpp"
#include "support.hpp"

using namespace hartogs;

namespace {

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntPoly from_vec(const std::vector<long>& c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

IntPoly pow(const IntPoly& p, int e) {
  IntPoly out = ip({1});
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace

TEST(Chebyshev, FirstKind) {
  EXPECT_EQ(chebyshev_t(0), ip({1}));
  EXPECT_EQ(chebyshev_t(1), ip({0, 1}));
  EXPECT_EQ(chebyshev_t(4), ip({1, 0, -8, 0, 8}));
}

TEST(Chebyshev, Reduction) {
  EXPECT_EQ(chebyshev_reduce(ip({1, 6, 13, 6, 1})).cheb, to_rational(ip({11, 12, 4})));
  EXPECT_EQ(chebyshev_reduce(ip({1, 6, 1})).cheb, to_rational(ip({6, 2})));
  EXPECT_HARTOGS_ERROR(chebyshev_reduce(ip({1, 2})), ErrorKind::NotPalindromic);
  EXPECT_HARTOGS_ERROR(chebyshev_reduce(ip({1, 2, 3})), ErrorKind::NotPalindromic);
}

TEST(Chebyshev, ReductionEvaluatesOnCircle) {
  const IntPoly p = q_poly(PairMN(9, 4)).poly;
  const int k = p.degree() / 2;
  const RatPoly g = chebyshev_reduce(p).cheb;
  for (double theta : {0.1, 0.9, 2.0, 3.0}) {
    const Complex s = std::polar(1.0, theta);
    const Complex lhs = p.eval_complex(s) * std::polar(1.0, -k * theta);
    double gx = 0.0;
    for (int i = g.degree(); i >= 0; --i) gx = gx * std::cos(theta) + g[i].get_d();
    EXPECT_NEAR(lhs.real(), gx, 1e-9 * std::abs(gx) + 1e-9);
    EXPECT_NEAR(lhs.imag(), 0.0, 1e-9 * std::abs(gx) + 1e-9);
  }
}

TEST(Sturm, Counts) {
  // (x - 1)(x + 1)(x - 1/2)^2
  const RatPoly p = to_rational(ip({-1, 0, 1})) * RatPoly({Rational(-1, 2), Rational(1)}) *
                    RatPoly({Rational(-1, 2), Rational(1)});
  EXPECT_EQ(sturm_count(p, -2, 2), 3u);
  EXPECT_EQ(sturm_count(p, -1, 1), 2u);
  EXPECT_EQ(sturm_count(p, 0, Rational(1, 2)), 1u);
  EXPECT_EQ(sturm_count(p, Rational(1, 2), Rational(9, 10)), 0u);
  EXPECT_EQ(sturm_count(to_rational(ip({1, 0, 1})), -10, 10), 0u);
}

TEST(CircleCount, Multiplicities) {
  // s^2 + 1: two simple roots on the circle.
  EXPECT_EQ(circle_root_count(ip({1, 0, 1})), 2u);
  // (s + 1)^2: G has a simple root at x = -1, giving s = -1 twice.
  EXPECT_EQ(circle_root_count(ip({1, 2, 1})), 2u);
  // (s - 1)^2 (s^2 + 1)^2
  EXPECT_EQ(circle_root_count(pow(ip({-1, 1}), 2) * pow(ip({1, 0, 1}), 2)), 6u);
  // (s^2 + s + 1)^2 (s^2 + 3s + 1)
  EXPECT_EQ(circle_root_count(pow(ip({1, 1, 1}), 2) * ip({1, 3, 1})), 4u);
  EXPECT_EQ(circle_root_count(ip({5, 30, 55, 30, 5})), 0u);
}

TEST(Census, PalindromicPairing) {
  const RootCensus c = interior_root_count(ip({1, 6, 13, 6, 1}));
  EXPECT_EQ(c.inside, 2u);
  EXPECT_EQ(c.on_circle, 0u);
  EXPECT_EQ(c.outside, 2u);
  EXPECT_EQ(c.method, CensusMethod::PalindromicPairing);
}

TEST(Census, DoubleInteriorRoot) {
  const RootCensus c = interior_root_count(ip({5, 30, 55, 30, 5}));
  EXPECT_EQ(c.inside, 2u);
  EXPECT_EQ(c.outside, 2u);
}

TEST(Census, CircleRootsUseSchurCohn) {
  // (s^2 + 1)(s^2 + 3s + 1)
  const RootCensus c = interior_root_count(ip({1, 0, 1}) * ip({1, 3, 1}));
  EXPECT_EQ(c.on_circle, 2u);
  EXPECT_EQ(c.inside, 1u);
  EXPECT_EQ(c.outside, 1u);
  EXPECT_EQ(c.method, CensusMethod::SchurCohn);
}

TEST(Census, NonPalindromic) {
  // (2s - 1)(s - 3)(s + 1)
  const RootCensus c = interior_root_count(ip({-1, 2}) * ip({-3, 1}) * ip({1, 1}));
  EXPECT_EQ(c.inside, 1u);
  EXPECT_EQ(c.on_circle, 1u);
  EXPECT_EQ(c.outside, 1u);
}

TEST(Census, Degenerate) {
  EXPECT_HARTOGS_ERROR(interior_root_count(ip({0, 1, 1})), ErrorKind::ZeroConstantTerm);
  const RootCensus c = interior_root_count(ip({7}));
  EXPECT_EQ(c.inside + c.on_circle + c.outside, 0u);
}

TEST(SchurCohn, SingularSteps) {
  // |a0| = |aN| without being self-reciprocal: s^2 + s - 1 has roots
  // (-1 +- sqrt 5)/2, one inside and one outside.
  EXPECT_EQ(schur_cohn_inside(ip({-1, 1, 1})), 1u);
  // Palindromic and circle-free: (s^2 + 3s + 1)(s^2 + 5s + 1).
  EXPECT_EQ(schur_cohn_inside(ip({1, 3, 1}) * ip({1, 5, 1})), 2u);
  // Roots at the origin count as inside.
  EXPECT_EQ(schur_cohn_inside(ip({0, 0, -3, 1})), 2u);
}

TEST(SchurCohn, RandomAgainstFloatRoots) {
  std::mt19937 rng(123);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::uniform_int_distribution<int> deg(1, 9);
  int checked = 0;
  while (checked < 300) {
    std::vector<long> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.front() == 0 || c.back() == 0) continue;
    const IntPoly p = from_vec(c);
    std::vector<Complex> roots;
    try {
      roots = numeric_roots(p, 1e-10);
    } catch (const HartogsError&) {
      continue;
    }
    std::size_t inside = 0;
    bool clear = true;
    for (const Complex& r : roots) {
      if (std::abs(std::abs(r) - 1.0) < 1e-6) clear = false;
      if (std::abs(r) < 1.0) ++inside;
    }
    if (!clear) continue;
    EXPECT_EQ(interior_root_count(p).inside, inside) << p.to_string();
    ++checked;
  }
}

TEST(SchurCohn, RandomWithCircleFactors) {
  std::mt19937 rng(321);
  std::uniform_int_distribution<long> coef(-6, 6);
  const IntPoly circle_factors[] = {ip({1, 1}), ip({-1, 1}), ip({1, 0, 1}), ip({1, 1, 1}), ip({1, -1, 1})};
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> c(1 + trial % 5);
    for (auto& x : c) x = coef(rng);
    c.push_back(1 + trial % 3);
    c.front() = c.front() == 0 ? 2 : c.front();
    IntPoly base = from_vec(c);
    std::vector<Complex> roots;
    try {
      roots = numeric_roots(base, 1e-10);
    } catch (const HartogsError&) {
      continue;
    }
    std::size_t inside = 0;
    std::size_t on = 0;
    bool clear = true;
    for (const Complex& r : roots) {
      const double d = std::abs(r) - 1.0;
      if (std::abs(d) < 1e-6) clear = false;
      inside += d < 0 ? 1 : 0;
    }
    if (!clear) continue;
    const IntPoly& f = circle_factors[trial % 5];
    const int e = 1 + trial % 2;
    on += static_cast<std::size_t>(f.degree() * e);
    const RootCensus census = interior_root_count(base * pow(f, e));
    EXPECT_EQ(census.inside, inside) << base.to_string();
    EXPECT_EQ(census.on_circle, on) << base.to_string();
    EXPECT_EQ(census.inside + census.on_circle + census.outside,
              static_cast<std::size_t>(base.degree() + f.degree() * e));
  }
}

TEST(NumericRoots, KnownRoots) {
  const auto roots = numeric_roots(ip({1, 6, 1}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_NEAR(roots[0].real(), -3.0 + 2.0 * std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(roots[1].real(), -3.0 - 2.0 * std::sqrt(2.0), 1e-11);
  const auto q31 = numeric_roots(ip({1, 6, 13, 6, 1}));
  EXPECT_NEAR(q31[0].real(), -0.27525513, 1e-8);
  EXPECT_NEAR(std::abs(q31[0].imag()), 0.15891862, 1e-8);
  EXPECT_NEAR(numeric_roots(ip({4, 19, 4}))[0].real(), -0.220789007548, 1e-11);
}

TEST(NumericRoots, ResidualAndCensus) {
  const IntPoly p = q_poly(PairMN(11, 4)).poly;
  for (const Complex& r : numeric_roots(p)) EXPECT_LT(root_residual(p, r), 1e-12);
  RootCensus c = interior_root_count(p);
  attach_float_roots(c, p);
  ASSERT_TRUE(c.float_roots.has_value());
  EXPECT_EQ(c.float_roots->size(), 14u);
  EXPECT_TRUE(c.warnings.empty());
  std::size_t inside = 0;
  for (const auto& r : *c.float_roots) inside += r.location == RootLocation::Inside ? 1 : 0;
  EXPECT_EQ(inside, c.inside);
}

TEST(NumericRoots, LargeDegreeWithWideModuli) {
  // Roots of modulus up to ~150: evaluating p directly would overflow.
  const IntPoly p = q_poly(PairMN(301, 2)).poly;
  const auto roots = numeric_roots(p);
  ASSERT_EQ(roots.size(), 598u);
  std::size_t inside = 0;
  for (const Complex& r : roots) inside += std::abs(r) < 1.0 ? 1 : 0;
  EXPECT_EQ(inside, interior_root_count(p).inside);
  EXPECT_GT(std::abs(roots.back()), 100.0);
}

TEST(SchurCohn, AgreesWithPairingOnQ) {
  for (std::int64_t m = 2; m <= 22; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      if (gcd64(m, n) != 1) continue;
      const IntPoly q = q_poly(PairMN(m, n)).poly;
      EXPECT_EQ(schur_cohn_inside(q), interior_root_count(q).inside) << m << "," << n;
    }
  }
}
