// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "hartogs/arith.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/luqikeng.hpp"
#include "hartogs/palindrome.hpp"
#include "hartogs/rootloc.hpp"

using namespace hartogs;

namespace {

constexpr std::int64_t kOracleMaxM = 30;
constexpr std::int64_t kPalindromeMaxM = 40;
constexpr std::int64_t kFamilyMaxEll = 100;
constexpr std::int64_t kLimitEll = 10000;
constexpr double kLimitTolK1 = 1e-3;
constexpr double kLimitTolK2 = 1e-2;
constexpr double kSeriesRelTol = 1e-8;
constexpr std::int64_t kSeriesCutoff = 400;
constexpr int kSeriesPoints = 24;
constexpr double kQuadratureRelTol = 1e-6;
constexpr double kWitnessTol = 1e-8;
constexpr std::int64_t kScanMaxM = 40;
constexpr std::int64_t kIdentityMaxM = 50;
constexpr std::int64_t kValueMaxM = 40;

constexpr double kBudgetAc1 = 10.0;
constexpr double kBudgetAc5 = 30.0;
constexpr double kBudgetAc7 = 60.0;
constexpr double kBudgetAc9 = 300.0;

std::vector<PairMN> coprime_pairs(std::int64_t m_max) {
  std::vector<PairMN> out;
  for (std::int64_t m = 2; m <= m_max; ++m)
    for (std::int64_t n = 1; n < m; ++n)
      if (gcd64(m, n) == 1) out.emplace_back(m, n);
  return out;
}

std::string pair_str(const PairMN& p) { return "(" + std::to_string(p.m()) + "," + std::to_string(p.n()) + ")"; }

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<Outcome()>& body, double budget_s = 0.0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0.0 && secs > budget_s) {
    std::ostringstream os;
    os << "runtime " << secs << " s exceeds " << budget_s << " s";
    out.fail(os.str());
  }
  if (!out.pass) ++failures;
  std::printf("%s %s: %s [%.2f s]%s%s\n", id, out.pass ? "PASS" : "FAIL", title, secs,
              out.detail.empty() ? "" : " ", out.detail.c_str());
  std::fflush(stdout);
}

IntPoly ip(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return IntPoly(v);
}

Outcome ac1() {
  Outcome o;
  const auto pairs = coprime_pairs(kOracleMaxM);
  for (const auto& p : pairs) {
    if (!(numerator_effective(p) == numerator_oracle(p))) o.fail("mismatch at " + pair_str(p));
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs, exact";
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto pairs = coprime_pairs(kOracleMaxM);
  for (const auto& p : pairs) {
    const auto count = numerator_effective(p).term_count();
    if (count != static_cast<std::size_t>(4 * p.m() - 3)) {
      o.fail(pair_str(p) + " has " + std::to_string(count) + " terms");
    }
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs";
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto pairs = coprime_pairs(kPalindromeMaxM);
  for (const auto& p : pairs) {
    const QPoly q = q_poly(p);
    if (!q.poly.is_palindromic()) o.fail(pair_str(p) + " not palindromic");
    if (q.poly.degree() != 2 * p.k()) o.fail(pair_str(p) + " wrong degree");
    for (const auto& c : q.poly.coeffs())
      if (sgn(c) <= 0) o.fail(pair_str(p) + " nonpositive coefficient");
    if (!verify_piece_identities(q)) o.fail(pair_str(p) + " piece identity");
  }
  if (o.pass) o.detail = std::to_string(pairs.size()) + " pairs";
  return o;
}

Outcome ac4() {
  Outcome o;
  if (!(q_poly(PairMN(2, 1)).poly == ip({1, 6, 1}))) o.fail("Q_{2,1} spot value");
  if (!(q_poly(PairMN(3, 1)).poly == ip({1, 6, 13, 6, 1}))) o.fail("Q_{3,1} spot value");
  for (std::int64_t ell = 1; ell <= kFamilyMaxEll; ++ell) {
    for (int k : {1, 2}) {
      if (!(q_poly(family_pair(k, ell)).poly == family_closed_form(k, ell))) {
        o.fail("k=" + std::to_string(k) + " ell=" + std::to_string(ell));
      }
    }
  }
  if (o.pass) o.detail = "ell <= " + std::to_string(kFamilyMaxEll) + " for k = 1, 2";
  return o;
}

Outcome ac5() {
  Outcome o;
  for (std::int64_t ell = 1; ell <= kFamilyMaxEll; ++ell) {
    const RootCensus c1 = interior_root_count(q_poly(family_pair(1, ell)).poly);
    if (c1.inside != 1 || c1.on_circle != 0) o.fail("k=1 ell=" + std::to_string(ell));
    const RootCensus c2 = interior_root_count(q_poly(family_pair(2, ell)).poly);
    if (c2.inside != 2 || c2.on_circle != 0) o.fail("k=2 ell=" + std::to_string(ell));
  }
  const RatPoly g = chebyshev_reduce(q_poly(PairMN(3, 1)).poly).cheb;
  if (!(g == to_rational(ip({11, 12, 4})))) o.fail("Chebyshev reduction of Q_{3,1} is " + g.to_string("x"));
  if (o.pass) o.detail = "G_{3,1} = " + g.to_string("x");
  return o;
}

Outcome ac6() {
  Outcome o;
  const double target = -2.0 + std::sqrt(3.0);
  const auto r1 = interior_roots(family_pair(1, kLimitEll));
  if (r1.size() != 1) {
    o.fail("k=1 interior root count " + std::to_string(r1.size()));
    return o;
  }
  const double d1 = std::abs(r1[0] - target);
  if (d1 >= kLimitTolK1) o.fail("k=1 distance " + std::to_string(d1));

  const auto r2 = interior_roots(family_pair(2, kLimitEll));
  if (r2.size() != 2) {
    o.fail("k=2 interior root count " + std::to_string(r2.size()));
    return o;
  }
  const double near_m1 = std::min(std::abs(r2[0] + 1.0), std::abs(r2[1] + 1.0));
  const double near_t = std::min(std::abs(r2[0] - target), std::abs(r2[1] - target));
  if (near_m1 >= kLimitTolK2) o.fail("k=2 distance to -1 " + std::to_string(near_m1));
  if (near_t >= kLimitTolK2) o.fail("k=2 distance to -2+sqrt3 " + std::to_string(near_t));
  std::ostringstream os;
  os << "k=1 |r-(-2+sqrt3)|=" << d1 << "; k=2 |r+1|=" << near_m1 << ", |r-(-2+sqrt3)|=" << near_t;
  if (o.pass) o.detail = os.str();
  return o;
}

// Sample (z, w) with |t| in [0.2, 0.7] and |s| <= 0.8 |t|^(n/m).
std::pair<DomainPoint, DomainPoint> sample_points(std::mt19937& rng, const PairMN& p) {
  std::uniform_real_distribution<double> tmod(0.2, 0.7);
  std::uniform_real_distribution<double> sfrac(0.02, 0.8);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  std::uniform_real_distribution<double> split(0.9, 1.1);
  const double gamma_inv = static_cast<double>(p.n()) / p.m();
  for (;;) {
    const double at = tmod(rng);
    const double as = sfrac(rng) * std::pow(at, gamma_inv);
    const double lt = split(rng);
    const double ls = split(rng);
    const DomainPoint z{std::polar(std::sqrt(as) * ls, ang(rng)), std::polar(std::sqrt(at) * lt, ang(rng))};
    const double phase_s = ang(rng);
    const double phase_t = ang(rng);
    const DomainPoint w{std::polar(std::sqrt(as) / ls, phase_s), std::polar(std::sqrt(at) / lt, phase_t)};
    if (in_domain(p.m(), p.n(), z) && in_domain(p.m(), p.n(), w)) return {z, w};
  }
}

Outcome ac7() {
  Outcome o;
  std::mt19937 rng(20240611);
  double worst = 0.0;
  int points = 0;
  for (const auto& p : {PairMN(2, 1), PairMN(3, 2), PairMN(3, 1), PairMN(5, 3)}) {
    for (int i = 0; i < kSeriesPoints; ++i) {
      const auto [z, w] = sample_points(rng, p);
      const Complex closed = eval_kernel(p, z, w);
      const Complex series = series_kernel(p, z, w, kSeriesCutoff).value;
      const double rel = std::abs(closed - series) / std::abs(closed);
      worst = std::max(worst, rel);
      ++points;
      if (!(rel < kSeriesRelTol)) o.fail(pair_str(p) + " relative error " + std::to_string(rel));
    }
  }

  using boost::math::quadrature::gauss_kronrod;
  const struct {
    std::int64_t m, n, a, b;
  } norms[] = {{3, 2, 0, 0}, {3, 1, 2, -1}, {5, 3, 3, 2}};
  double worst_norm = 0.0;
  for (const auto& c : norms) {
    const double gamma_inv = static_cast<double>(c.n) / c.m;
    auto outer = [&](double r2) {
      auto inner = [&](double r1) { return std::pow(r1, 2 * c.a + 1); };
      return std::pow(r2, 2 * c.b + 1) *
             gauss_kronrod<double, 31>::integrate(inner, 0.0, std::pow(r2, gamma_inv), 8, 1e-13);
    };
    const double quad = 4.0 * std::numbers::pi * std::numbers::pi *
                        gauss_kronrod<double, 61>::integrate(outer, 0.0, 1.0, 12, 1e-13);
    const double rel = std::abs(quad / monomial_norm_sq(c.m, c.n, c.a, c.b) - 1.0);
    worst_norm = std::max(worst_norm, rel);
    if (!(rel < kQuadratureRelTol)) o.fail("norm quadrature relative error " + std::to_string(rel));
  }
  std::ostringstream os;
  os << points << " points, worst relative " << worst << "; norm quadrature worst " << worst_norm;
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome ac8() {
  Outcome o;
  double worst = 0.0;
  for (const auto& p : {PairMN(2, 1), PairMN(3, 2), PairMN(3, 1), PairMN(5, 3)}) {
    const ZeroWitness w = zero_witness(p);
    if (!in_domain(p.m(), p.n(), w.z) || !in_domain(p.m(), p.n(), w.w)) o.fail(pair_str(p) + " not interior");
    const double k = std::abs(eval_kernel(p, w.z, w.w));
    worst = std::max(worst, k);
    if (!(k < kWitnessTol)) o.fail(pair_str(p) + " |K| = " + std::to_string(k));
  }
  std::ostringstream os;
  os << "worst |K| = " << worst;
  if (o.pass) o.detail = os.str();
  return o;
}

Outcome ac9() {
  Outcome o;
  ScanOptions opt;
  opt.m_max = kScanMaxM;
  opt.workers = 1;
  const auto rows = scan(opt);
  std::size_t findings = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      o.fail("(" + std::to_string(row.m) + "," + std::to_string(row.n) + ") error: " + row.error);
    } else if (!row.conjecture_holds) {
      if (is_proven_family(row.k)) {
        o.fail("proven family violated at (" + std::to_string(row.m) + "," + std::to_string(row.n) + ")");
      } else {
        ++findings;
        std::printf("  finding: (%lld,%lld) circle=%lld interior=%lld\n", static_cast<long long>(row.m),
                    static_cast<long long>(row.n), static_cast<long long>(row.circle_count),
                    static_cast<long long>(row.interior_count));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(rows.size()) + " rows, " + std::to_string(findings) + " flagged findings";
  }
  return o;
}

Outcome ac10() {
  Outcome o;
  for (std::int64_t m = 2; m <= kIdentityMaxM; ++m)
    for (std::int64_t n = 1; n < m; ++n)
      if (gcd64(m, n) == 1 && !verify_index_identities(PairMN(m, n))) o.fail("index identity at m=" + std::to_string(m));
  for (const auto& p : coprime_pairs(kValueMaxM)) {
    const Integer cube = Integer(static_cast<long>(p.m() * p.m() * p.m()));
    if (numerator_effective(p).eval_exact(1, 1) != cube) o.fail(pair_str(p) + " P(1,1)");
    if (q_poly(p).poly.eval_exact(1) != Rational(cube)) o.fail(pair_str(p) + " Q(1)");
  }
  return o;
}

}  // namespace

int main() {
  report("AC1", "effective numerator equals the D_m double sum, m <= 30", ac1, kBudgetAc1);
  report("AC2", "numerator has exactly 4m-3 terms, m <= 30", ac2);
  report("AC3", "Q palindromic, degree 2(m-n), positive, piece identities, m <= 40", ac3);
  report("AC4", "closed forms for k = 1, 2 families, ell <= 100", ac4);
  report("AC5", "interior root counts for k = 1, 2 families; Chebyshev form of Q_{3,1}", ac5, kBudgetAc5);
  report("AC6", "limit roots at ell = 10^4", ac6);
  report("AC7", "closed form vs series (cutoff 400) and monomial norms vs quadrature", ac7, kBudgetAc7);
  report("AC8", "zero witnesses with |K| < 1e-8", ac8);
  report("AC9", "scan m <= 40: no circle roots, m - n interior roots", ac9, kBudgetAc9);
  report("AC10", "index identities m <= 50; P(1,1) = Q(1) = m^3 for m <= 40", ac10);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
