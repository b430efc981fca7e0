#include "hartogs/luqikeng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "hartogs/error.hpp"
#include "hartogs/kernel.hpp"
#include "hartogs/palindrome.hpp"
#include "hartogs/rootloc.hpp"

namespace hartogs {

namespace {

constexpr int kBisectionSteps = 80;

// Exact-sign bisection of a squarefree integer polynomial on [lo, hi];
// nullopt when the endpoints do not bracket a sign change.
std::optional<double> bisect_real_root(const IntPoly& f, double lo_d, double hi_d) {
  Rational lo(lo_d);
  Rational hi(hi_d);
  int s_lo = sgn(f.eval_exact(lo));
  const int s_hi = sgn(f.eval_exact(hi));
  if (s_lo == 0) return lo_d;
  if (s_hi == 0) return hi_d;
  if (s_lo == s_hi) return std::nullopt;
  for (int i = 0; i < kBisectionSteps; ++i) {
    Rational mid = (lo + hi) / 2;
    const int s_mid = sgn(f.eval_exact(mid));
    if (s_mid == 0) return mid.get_d();
    if (s_mid == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return Rational((lo + hi) / 2).get_d();
}

ZeroWitness build_witness(const PairMN& pair, const KernelRational& kernel, Complex s0) {
  const double rho = std::sqrt(std::abs(s0));
  const Complex zc = std::polar(rho, std::arg(s0));
  ZeroWitness out{pair, s0, {zc, zc}, {Complex(rho, 0.0), Complex(rho, 0.0)}, {}, 0.0, 0.0};
  out.margin = std::min(domain_margin(pair.m(), pair.n(), out.z), domain_margin(pair.m(), pair.n(), out.w));
  if (out.margin < kWitnessMargin) {
    throw HartogsError(ErrorKind::WitnessMargin,
                       "witness interior margin " + std::to_string(out.margin) + " is below 1e-6");
  }
  out.kernel_value = eval_kernel(kernel, out.z, out.w);
  out.residual = std::abs(out.kernel_value);
  return out;
}

}  // namespace

std::vector<Complex> interior_roots(const PairMN& pair) {
  const IntPoly q = q_poly(pair).poly;
  const IntPoly f = primitive_part(squarefree_part(to_rational(q)));
  const RootCensus exact = interior_root_count(f);

  std::vector<Complex> inside;
  for (const Complex& r : numeric_roots(f)) {
    if (std::abs(r) >= 1.0) continue;
    Complex refined = r;
    const double width = 1e-6 * std::max(1.0, std::abs(r.real()));
    if (std::abs(r.imag()) < width) {
      if (auto x = bisect_real_root(f, r.real() - width, r.real() + width)) refined = Complex(*x, 0.0);
    }
    inside.push_back(refined);
  }
  if (inside.size() != exact.inside) {
    throw HartogsError(ErrorKind::InternalMismatch,
                       "float interior roots (" + std::to_string(inside.size()) +
                           ") disagree with exact census (" + std::to_string(exact.inside) + ")");
  }
  return inside;
}

ZeroWitness zero_witness(const PairMN& pair) {
  const RootCensus census = interior_root_count(q_poly(pair).poly);
  if (census.inside == 0) throw HartogsError(ErrorKind::NoInteriorRoot, "Q has no root inside the unit disc");
  const auto roots = interior_roots(pair);
  return build_witness(pair, kernel_rational(pair), roots.front());
}

std::vector<ZeroWitness> zero_witnesses(const PairMN& pair) {
  const RootCensus census = interior_root_count(q_poly(pair).poly);
  if (census.inside == 0) throw HartogsError(ErrorKind::NoInteriorRoot, "Q has no root inside the unit disc");
  const KernelRational kernel = kernel_rational(pair);
  std::vector<ZeroWitness> out;
  for (const Complex& s0 : interior_roots(pair)) out.push_back(build_witness(pair, kernel, s0));
  return out;
}

bool is_proven_family(std::int64_t k) { return k == 1 || k == 2 || k == 3 || k == 4 || k == 6; }

ScanRow scan_pair(const PairMN& pair) {
  const auto start = std::chrono::steady_clock::now();
  ScanRow row;
  row.m = pair.m();
  row.n = pair.n();
  row.k = pair.k();
  row.degree = 2 * pair.k();
  try {
    const RootCensus census = interior_root_count(q_poly(pair).poly);
    row.circle_count = static_cast<std::int64_t>(census.on_circle);
    row.interior_count = static_cast<std::int64_t>(census.inside);
    row.conjecture_holds = census.on_circle == 0 && row.interior_count == row.k;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.circle_count = row.interior_count = -1;
    row.conjecture_holds = false;
  }
  const auto stop = std::chrono::steady_clock::now();
  row.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return row;
}

std::vector<ScanRow> scan(const ScanOptions& options) {
  std::vector<PairMN> pairs;
  for (std::int64_t m = 2; m <= options.m_max; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      if (gcd64(m, n) != 1) continue;
      if (options.k_filter && m - n != *options.k_filter) continue;
      pairs.emplace_back(m, n);
    }
  }

  std::vector<ScanRow> rows(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < pairs.size(); i = next++) rows[i] = scan_pair(pairs[i]);
  };
  const std::size_t workers = std::clamp<std::size_t>(options.workers, 1, std::max<std::size_t>(pairs.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return rows;
}

}  // namespace hartogs
