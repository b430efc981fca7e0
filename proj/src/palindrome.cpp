#include "hartogs/palindrome.hpp"

#include <string>

#include "hartogs/error.hpp"
#include "hartogs/kernel.hpp"

namespace hartogs {

namespace {

Integer big(std::int64_t x) { return Integer(static_cast<long>(x)); }

void accumulate(std::vector<Integer>& v, std::int64_t degree, std::int64_t c) {
  if (degree < 0) throw HartogsError(ErrorKind::InternalMismatch, "negative exponent in Q piece");
  const auto idx = static_cast<std::size_t>(degree);
  if (idx >= v.size()) v.resize(idx + 1, Integer(0));
  v[idx] += big(c);
}

// Coefficient reversal at a fixed nominal degree (not the actual degree).
IntPoly reflect(const IntPoly& p, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree + 1), Integer(0));
  for (int i = 0; i <= p.degree(); ++i) {
    if (i > degree) throw HartogsError(ErrorKind::InternalMismatch, "piece exceeds nominal degree");
    v[static_cast<std::size_t>(degree - i)] = p[static_cast<std::size_t>(i)];
  }
  return IntPoly(std::move(v));
}

Integer divide_exact(const Integer& num, long den, const char* what) {
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den))) {
    throw HartogsError(ErrorKind::InternalMismatch, std::string("closed-form coefficient ") + what +
                                                        " is not divisible by " + std::to_string(den));
  }
  Integer out;
  mpz_divexact_ui(out.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(den));
  return out;
}

}  // namespace

QPoly q_poly(const PairMN& pair) {
  const std::int64_t m = pair.m();
  const std::int64_t n = pair.n();
  std::array<std::vector<Integer>, 5> v;
  accumulate(v[0], m - n, m * m);
  for (std::int64_t j = 0; j <= m - 2; ++j) {
    const std::int64_t e = j - index_L(pair, j) + 1;
    const std::int64_t kap = index_kappa(pair, j);
    accumulate(v[1], e, (j + 1) * (kap + 1));
    accumulate(v[2], e + 1, (j + 1) * (m - kap - 1));
    accumulate(v[3], e + m - n, (m - j - 1) * (kap + 1));
    accumulate(v[4], e + m - n + 1, (m - j - 1) * (m - kap - 1));
  }

  QPoly out{pair, IntPoly{}, {}};
  for (std::size_t i = 0; i < 5; ++i) {
    out.pieces[i] = IntPoly(std::move(v[i]));
    out.poly += out.pieces[i];
  }

  const IntPoly diagonal = numerator_effective(pair).restrict_diagonal().shift_down(
      static_cast<std::size_t>(2 * n - 1));
  if (!(diagonal == out.poly)) {
    throw HartogsError(ErrorKind::InternalMismatch,
                       "piecewise Q and diagonal restriction disagree for (m,n)=(" + std::to_string(m) +
                           "," + std::to_string(n) + ")");
  }
  return out;
}

bool verify_piece_identities(const QPoly& q) {
  const int degree = static_cast<int>(2 * q.pair.k());
  const auto& p = q.pieces;
  return reflect(p[0], degree) == p[0] && reflect(p[1], degree) == p[4] &&
         reflect(p[2], degree) == p[3];
}

IntPoly family_closed_form(int k, std::int64_t ell) {
  if (ell < 1) throw HartogsError(ErrorKind::UnsupportedFamily, "ell must be positive");
  const Integer l = big(ell);
  if (k == 1) {
    const Integer a0 = divide_exact(Integer(l * (l + 1) * (l + 2)), 6, "alpha0");
    const Integer a1 = divide_exact(Integer((l + 1) * (2 * l * l + 4 * l + 3)), 3, "alpha1");
    return IntPoly{a0, a1, a0};
  }
  if (k == 2) {
    const Integer base = l * (l + 1) * (2 * l + 1);
    const Integer a0 = divide_exact(base, 6, "alpha0");
    const Integer a1 = base;
    const Integer a2 = divide_exact(Integer((2 * l + 1) * (5 * l * l + 5 * l + 3)), 3, "alpha2");
    return IntPoly{a0, a1, a2, a1, a0};
  }
  throw HartogsError(ErrorKind::UnsupportedFamily,
                     "closed forms exist only for k in {1,2} (got " + std::to_string(k) + ")");
}

PairMN family_pair(int k, std::int64_t ell) {
  if (k == 1) return PairMN(ell + 1, ell);
  if (k == 2) return PairMN(2 * ell + 1, 2 * ell - 1);
  throw HartogsError(ErrorKind::UnsupportedFamily,
                     "closed forms exist only for k in {1,2} (got " + std::to_string(k) + ")");
}

}  // namespace hartogs
