#include "hartogs/poly.hpp"

#include <algorithm>

namespace hartogs {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return RatPoly(std::move(v));
}

IntPoly primitive_part(const RatPoly& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> v;
  v.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer x = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
    v.push_back(std::move(x));
  }
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(v));
}

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return {};
  Integer content = 0;
  for (const auto& c : p.coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content == 1) return p;
  std::vector<Integer> v = p.coeffs();
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), content.get_mpz_t());
  return IntPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw HartogsError(ErrorKind::DegenerateInput, "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  const Rational lead_inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational q = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (sgn(q) == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly exact_div(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw HartogsError(ErrorKind::NotDivisible, "inexact polynomial division");
  return q;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw HartogsError(ErrorKind::DegenerateInput, "polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw HartogsError(ErrorKind::NotDivisible, "inexact polynomial division");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lead = b.leading();
  std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db + 1));
  Integer q;
  for (int i = a.degree(); i >= db; --i) {
    Integer& top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw HartogsError(ErrorKind::NotDivisible, "quotient is not integral");
    }
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), q.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(i - db)] = q;
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(rem[static_cast<std::size_t>(i)]) != 0) {
      throw HartogsError(ErrorKind::NotDivisible, "inexact polynomial division");
    }
  }
  return IntPoly(std::move(quot));
}

IntPoly primitive_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw HartogsError(ErrorKind::DegenerateInput, "polynomial division by zero");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lead = b.leading();
  const bool negative_lead = sgn(lead) < 0;
  bool flipped = false;
  Integer g;
  Integer top;
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    top = rem[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    // rem <- (lead / g) rem - (top / g) s^(i-db) b with g = gcd(lead, top),
    // so every step multiplies the running remainder by lead / g.
    mpz_gcd(g.get_mpz_t(), lead.get_mpz_t(), top.get_mpz_t());
    Integer lf = lead / g;
    Integer tf = top / g;
    if (negative_lead) flipped = !flipped;
    for (int j = 0; j < i; ++j) rem[static_cast<std::size_t>(j)] *= lf;
    for (int j = 0; j < db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(i - db + j)].get_mpz_t(), tf.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    rem[static_cast<std::size_t>(i)] = 0;
    Integer content = 0;
    for (int j = 0; j < i; ++j) {
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), rem[static_cast<std::size_t>(j)].get_mpz_t());
      if (content == 1) break;
    }
    if (sgn(content) > 0 && content != 1) {
      for (int j = 0; j < i; ++j) {
        mpz_divexact(rem[static_cast<std::size_t>(j)].get_mpz_t(), rem[static_cast<std::size_t>(j)].get_mpz_t(),
                     content.get_mpz_t());
      }
    }
  }
  IntPoly r(std::move(rem));
  if (flipped) r = -r;
  return primitive_part(r);
}

IntPoly gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    IntPoly r = primitive_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && sgn(a.leading()) < 0) a = -a;
  return a;
}

namespace {

RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  return p * Rational(1 / p.leading());
}

}  // namespace

RatPoly gcd(RatPoly a, RatPoly b) {
  return make_monic(to_rational(gcd(primitive_part(a), primitive_part(b))));
}

std::vector<std::pair<RatPoly, unsigned>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, unsigned>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm on the primitive part; by Gauss's lemma every quotient
  // below is integral.
  const IntPoly q = primitive_part(p);
  const IntPoly dq = q.derivative();
  const IntPoly a = gcd(q, dq);
  IntPoly b = exact_div(q, a);
  IntPoly c = exact_div(dq, a);
  IntPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    const IntPoly f = gcd(b, d);
    b = exact_div(b, f);
    c = exact_div(d, f);
    d = c - b.derivative();
    if (f.degree() > 0) out.emplace_back(make_monic(to_rational(f)), i);
    ++i;
  }
  return out;
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return make_monic(p);
  const IntPoly q = primitive_part(p);
  return make_monic(to_rational(exact_div(q, gcd(q, q.derivative()))));
}

// ---------------------------------------------------------------------------
// BiPoly

void BiPoly::add_term(std::uint32_t i, std::uint32_t j, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Integer BiPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

int BiPoly::degree_s() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
  return d;
}

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
  return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e.first, e.second, Integer(-c));
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.first + eb.first, ea.second + eb.second, Integer(ca * cb));
    }
  }
  return out;
}

IntPoly BiPoly::restrict_diagonal() const {
  const int d = total_degree();
  if (d < 0) return {};
  std::vector<Integer> v(static_cast<std::size_t>(d + 1), Integer(0));
  for (const auto& [e, c] : terms_) v[e.first + e.second] += c;
  return IntPoly(std::move(v));
}

Complex BiPoly::eval_complex(Complex s, Complex t) const {
  // Powers are cached per exponent; term counts are small (4m - 3 for P_{m,n}).
  const int ds = degree_s();
  const int dt = degree_t();
  std::vector<Complex> spow(static_cast<std::size_t>(std::max(ds, 0) + 1));
  std::vector<Complex> tpow(static_cast<std::size_t>(std::max(dt, 0) + 1));
  spow[0] = tpow[0] = Complex(1.0, 0.0);
  for (std::size_t i = 1; i < spow.size(); ++i) spow[i] = spow[i - 1] * s;
  for (std::size_t i = 1; i < tpow.size(); ++i) tpow[i] = tpow[i - 1] * t;
  Complex acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) acc += c.get_d() * spow[e.first] * tpow[e.second];
  return acc;
}

Integer BiPoly::eval_exact(const Integer& s, const Integer& t) const {
  Integer acc = 0;
  for (const auto& [e, c] : terms_) {
    Integer sp, tp;
    mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), e.first);
    mpz_pow_ui(tp.get_mpz_t(), t.get_mpz_t(), e.second);
    acc += c * sp * tp;
  }
  return acc;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Integer mag = abs(c);
    const bool unit = (mag == 1);
    const bool bare = e.first == 0 && e.second == 0;
    if (!unit || bare) out += mag.get_str();
    auto var = [&](const char* name, std::uint32_t p) {
      if (p == 0) return;
      if (!out.empty() && out.back() != ' ' && out.back() != '-') out += "*";
      out += name;
      if (p > 1) out += "^" + std::to_string(p);
    };
    var("s", e.first);
    var("t", e.second);
  }
  return out;
}

}  // namespace hartogs
