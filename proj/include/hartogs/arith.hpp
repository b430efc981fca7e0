#ifndef HARTOGS_ARITH_HPP
#define HARTOGS_ARITH_HPP

#include <cstdint>

#include <gmpxx.h>

namespace hartogs {

using Integer = mpz_class;
using Rational = mpq_class;

/// Floor of a/b for b > 0, correct for negative a.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
/// Ceiling of a/b for b > 0, correct for negative a.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

/// A coprime pair m > n >= 1 indexing the rational Hartogs triangle
/// {|z1|^(m/n) < |z2| < 1}.
///
/// Construction never reduces its input: a non-coprime pair or m <= n
/// throws HartogsError(InvalidPair). Index arithmetic runs in 64-bit
/// integers, so m is capped at kMaxM to keep n*(j+1) and m*L(j) far from
/// overflow for every j the library evaluates (|j| <= 3m).
class PairMN {
 public:
  static constexpr std::int64_t kMaxM = 1'000'000;

  PairMN(std::int64_t m, std::int64_t n);

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return m_ - n_; }

  friend bool operator==(const PairMN&, const PairMN&) = default;
  friend auto operator<=>(const PairMN&, const PairMN&) = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

struct IndexPair {
  std::int64_t beta1;
  std::int64_t beta2;
};

/// L(j) = ceil((1 + n(j+1)) / m).
std::int64_t index_L(const PairMN& pair, std::int64_t j);

/// kappa(j) = m + n - 1 + n j - m L(j); lies in {0,...,m-2} for 0 <= j <= m-2.
std::int64_t index_kappa(const PairMN& pair, std::int64_t j);

/// Two-index form m*beta2 + n*beta1 + m + n - 1 - 2mn.
std::int64_t index_kappa(const PairMN& pair, const IndexPair& idx);

/// Tent function: coefficients of ((1 - x^m)/(1 - x))^2.
std::int64_t d_m(std::int64_t m, std::int64_t beta);

/// C(beta1, beta2) = D_m(beta1) * D_m(kappa(beta1, beta2)).
Integer coeff_C(const PairMN& pair, const IndexPair& idx);

/// Checks the shift and reflection identities of L and kappa:
///   L(j+m) = L(j) + n and kappa(j+m) = kappa(j) on 0..2m-2,
///   L(j) + L(m-2-j) = n + 1 and kappa(j) + kappa(m-2-j) = m - 2 on 0..m-2.
bool verify_index_identities(const PairMN& pair);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

}  // namespace hartogs

#endif  // HARTOGS_ARITH_HPP
