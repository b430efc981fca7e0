#include "hartogs/arith.hpp"

#include <numeric>
#include <string>

#include "hartogs/error.hpp"

namespace hartogs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidPair: return "InvalidPair";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::InternalMismatch: return "InternalMismatch";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NoInteriorRoot: return "NoInteriorRoot";
    case ErrorKind::WitnessMargin: return "WitnessMargin";
  }
  return "Unknown";
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return floor_div(a + b - 1, b);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

PairMN::PairMN(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (n < 1 || m <= n) {
    throw HartogsError(ErrorKind::InvalidPair,
                       "require m > n >= 1 (got m=" + std::to_string(m) +
                           ", n=" + std::to_string(n) + ")");
  }
  if (std::gcd(m, n) != 1) {
    throw HartogsError(ErrorKind::InvalidPair,
                       "m,n must be coprime (got m=" + std::to_string(m) +
                           ", n=" + std::to_string(n) + ")");
  }
  if (m > kMaxM) {
    throw HartogsError(ErrorKind::InvalidPair,
                       "m exceeds supported maximum " + std::to_string(kMaxM));
  }
}

std::int64_t index_L(const PairMN& pair, std::int64_t j) {
  return ceil_div(1 + pair.n() * (j + 1), pair.m());
}

std::int64_t index_kappa(const PairMN& pair, std::int64_t j) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  return m + n - 1 + n * j - m * index_L(pair, j);
}

std::int64_t index_kappa(const PairMN& pair, const IndexPair& idx) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  return m * idx.beta2 + n * idx.beta1 + m + n - 1 - 2 * m * n;
}

std::int64_t d_m(std::int64_t m, std::int64_t beta) {
  if (beta >= 0 && beta <= m - 1) return beta + 1;
  if (beta >= m && beta <= 2 * m - 2) return 2 * m - 1 - beta;
  return 0;
}

Integer coeff_C(const PairMN& pair, const IndexPair& idx) {
  const std::int64_t left = d_m(pair.m(), idx.beta1);
  if (left == 0) return 0;
  const std::int64_t right = d_m(pair.m(), index_kappa(pair, idx));
  Integer out = static_cast<long>(left);
  out *= static_cast<long>(right);
  return out;
}

bool verify_index_identities(const PairMN& pair) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  for (std::int64_t j = 0; j <= 2 * m - 2; ++j) {
    if (index_L(pair, j + m) != index_L(pair, j) + n) return false;
    if (index_kappa(pair, j + m) != index_kappa(pair, j)) return false;
  }
  for (std::int64_t j = 0; j <= m - 2; ++j) {
    if (index_L(pair, j) + index_L(pair, m - 2 - j) != n + 1) return false;
    if (index_kappa(pair, j) + index_kappa(pair, m - 2 - j) != m - 2) return false;
  }
  return true;
}

}  // namespace hartogs
