#ifndef HARTOGS_POLY_HPP
#define HARTOGS_POLY_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hartogs/arith.hpp"
#include "hartogs/error.hpp"

namespace hartogs {

using Complex = std::complex<double>;

/// Dense univariate polynomial; coeffs()[i] is the coefficient of s^i.
///
/// Scalar is Integer or Rational. The representation is kept normalized:
/// the leading stored coefficient is nonzero, and the zero polynomial has
/// no stored coefficients (degree() == -1).
template <class Scalar>
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static UniPoly constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }
  static UniPoly monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  /// Coefficient of s^i; zero beyond the degree.
  Scalar operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Lowest degree carrying a nonzero coefficient; -1 for the zero polynomial.
  int valuation() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (sgn(coeffs_[i]) != 0) return static_cast<int>(i);
    }
    return -1;
  }

  UniPoly& operator+=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    normalize();
    return *this;
  }
  UniPoly& operator*=(const Scalar& c) {
    if (sgn(c) == 0) {
      coeffs_.clear();
      return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a) { return a *= Scalar(-1); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] != b.coeffs_[i]) return false;
    }
    return true;
  }

  /// Multiplication by s^e.
  UniPoly shift_up(std::size_t e) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(e, Scalar(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return UniPoly(std::move(v));
  }

  /// Exact division by s^e; throws NotDivisible when the valuation is below e.
  UniPoly shift_down(std::size_t e) const {
    if (is_zero()) return {};
    if (valuation() < static_cast<int>(e)) {
      throw HartogsError(ErrorKind::NotDivisible,
                         "polynomial is not divisible by s^" + std::to_string(e));
    }
    return UniPoly(std::vector<Scalar>(coeffs_.begin() + static_cast<std::ptrdiff_t>(e), coeffs_.end()));
  }

  /// Coefficient reversal s^deg p(1/s). Drops degree when p(0) == 0.
  UniPoly reverse() const { return UniPoly(std::vector<Scalar>(coeffs_.rbegin(), coeffs_.rend())); }

  bool is_palindromic() const {
    if (is_zero() || degree() % 2 != 0) return false;
    return *this == reverse();
  }

  UniPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
    return UniPoly(std::move(v));
  }

  template <class Point>
  Point eval(const Point& x) const {
    Point acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Point(*it);
    return acc;
  }

  Complex eval_complex(Complex x) const {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Complex(it->get_d(), 0.0);
    return acc;
  }

  Rational eval_exact(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
  }

  /// Coefficients in ascending degree as decimal strings (rationals as "p/q").
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
  }

  /// Human-readable form, highest degree first, e.g. "s^2 + 6*s + 1".
  std::string to_string(const char* var = "s") const;

 private:
  void normalize() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using IntPoly = UniPoly<Integer>;
using RatPoly = UniPoly<Rational>;

template <class Scalar>
std::string UniPoly<Scalar>::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    Scalar mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = (mag == 1);
    if (i == 0 || !unit) out += mag.get_str();
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

RatPoly to_rational(const IntPoly& p);

/// Scales p by a positive rational so that it becomes a primitive integer
/// polynomial; signs of all coefficients are preserved.
IntPoly primitive_part(const RatPoly& p);
IntPoly primitive_part(const IntPoly& p);

/// Euclidean division over the rationals; throws DegenerateInput on b == 0.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Exact quotient a / b; throws NotDivisible when the remainder is nonzero.
RatPoly exact_div(const RatPoly& a, const RatPoly& b);
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Primitive positive multiple of the remainder of a by b, computed by
/// fraction-free pseudo-division. Throws DegenerateInput on b == 0.
IntPoly primitive_remainder(const IntPoly& a, const IntPoly& b);

/// Monic gcd over the rationals (zero when both inputs are zero).
RatPoly gcd(RatPoly a, RatPoly b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(IntPoly a, IntPoly b);

/// Squarefree factorization (Yun): pairs (f_i, i) with p = c * prod f_i^i,
/// each f_i monic, squarefree and pairwise coprime. Factors equal to 1 are omitted.
std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p);

/// Monic squarefree part p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

/// Sparse bivariate polynomial in formal variables (s, t) with integer
/// coefficients, keyed by the exponent pair (deg_s, deg_t). Iteration order is
/// lexicographic by (deg_s, deg_t); no stored coefficient is zero.
class BiPoly {
 public:
  using Exponent = std::pair<std::uint32_t, std::uint32_t>;
  using Terms = std::map<Exponent, Integer>;

  BiPoly() = default;

  /// Accumulates c * s^i t^j, erasing the term if it cancels to zero.
  void add_term(std::uint32_t i, std::uint32_t j, const Integer& c);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Integer coeff(std::uint32_t i, std::uint32_t j) const;

  /// Maximum of deg_s + deg_t over stored terms; -1 for zero.
  int total_degree() const;
  int degree_s() const;
  int degree_t() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const Integer& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Integer& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

  /// Substitutes t := s.
  IntPoly restrict_diagonal() const;

  Complex eval_complex(Complex s, Complex t) const;
  Integer eval_exact(const Integer& s, const Integer& t) const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace hartogs

#endif  // HARTOGS_POLY_HPP
