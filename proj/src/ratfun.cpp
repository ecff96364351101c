#include "machin/ratfun.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "machin/gauss.hpp"

namespace machin {

namespace {

void trim(std::vector<Int>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void check_j(int j) {
  if (j < 0 || j > 3) throw std::invalid_argument("j must be in 0..3");
}

// Applies the j-th transform to tan(n theta) = s / c given as a pair (c, s).
// R_0 = s/c, R_1 = (c+s)/(c-s), R_2 = -c/s, R_3 = (s-c)/(s+c).
std::pair<Int, Int> rotate(int j, const Int& c, const Int& s) {
  switch (j) {
    case 0: return {s, c};
    case 1: return {c + s, c - s};
    case 2: return {-c, s};
    default: return {s - c, s + c};
  }
}

RjValue finish(Int num, Int den, bool content_is_two_power) {
  if (den == 0) {
    if (num == 0) throw std::logic_error("R_j numerator and denominator vanish together");
    return RjValue::infinity();
  }
  if (content_is_two_power) return RjValue::finite(ratio_coprime_up_to_two(std::move(num), std::move(den)));
  return RjValue::finite(Rat(num, den));
}

RjValue eval_poly(int j, unsigned long n, const Rat& x) {
  const auto nn = static_cast<unsigned>(n);
  const Rat N = numer_poly(nn).eval(x);
  const Rat D = denom_poly(nn).eval(x);
  // Scale both to integers over a common denominator before rotating.
  const Int common = lcm(N.den(), D.den());
  const Int s = N.num() * (common / N.den());
  const Int c = D.num() * (common / D.den());
  auto [num, den] = rotate(j, c, s);
  return finish(std::move(num), std::move(den), false);
}

RjValue eval_binpow(int j, unsigned long n, const Rat& x) {
  // (b + a i)^n = c + s i with x = a/b in lowest terms: any common factor of
  // the rotated pair is a power of two.
  const GaussInt z = pow(GaussInt{x.den(), x.num()}, n);
  auto [num, den] = rotate(j, z.re, z.im);
  return finish(std::move(num), std::move(den), true);
}

RjValue eval_pow2chain(int j, unsigned long n, const Rat& x) {
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("pow2chain needs n a power of two");
  // Homogeneous tangent (s : c); doubling maps it to (2sc : c^2 - s^2).
  Int s = x.num(), c = x.den();
  for (unsigned long k = n; k > 1; k >>= 1) {
    Int s2 = s * c;
    s2 <<= 1;
    Int c2 = (c - s) * (c + s);
    // gcd(s, c) = 1 keeps the content of (s2, c2) a power of two.
    const mp_bitcnt_t strip = std::min(s2 == 0 ? ~mp_bitcnt_t{0} : mpz_scan1(s2.get_mpz_t(), 0),
                                       c2 == 0 ? ~mp_bitcnt_t{0} : mpz_scan1(c2.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(s.get_mpz_t(), s2.get_mpz_t(), strip);
    mpz_tdiv_q_2exp(c.get_mpz_t(), c2.get_mpz_t(), strip);
  }
  auto [num, den] = rotate(j, c, s);
  return finish(std::move(num), std::move(den), true);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Int> c) : coeffs(std::move(c)) { trim(coeffs); }

Rat IntPolynomial::eval(const Rat& x) const {
  Rat acc;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + Rat(coeffs[k]);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<Int> c(std::max(a.coeffs.size(), b.coeffs.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) + b.coeff(k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> c = coeffs;
  for (auto& v : c) v = -v;
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Int& c = coeffs[k];
    if (c == 0) continue;
    const Int mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

IntPolynomial numer_poly(unsigned n) {
  std::vector<Int> c(n + 1);
  for (unsigned r = 0; 2 * r + 1 <= n; ++r) c[2 * r + 1] = (r % 2 == 0 ? 1 : -1) * binomial(n, 2 * r + 1);
  return IntPolynomial(std::move(c));
}

IntPolynomial denom_poly(unsigned n) {
  std::vector<Int> c(n + 1);
  for (unsigned r = 0; 2 * r <= n; ++r) c[2 * r] = (r % 2 == 0 ? 1 : -1) * binomial(n, 2 * r);
  return IntPolynomial(std::move(c));
}

long common_factor_degree(const IntPolynomial& p, const IntPolynomial& q) {
  // Euclid over Q.
  auto to_rat = [](const IntPolynomial& f) {
    std::vector<Rat> r;
    for (const auto& c : f.coeffs) r.emplace_back(c);
    return r;
  };
  std::vector<Rat> a = to_rat(p), b = to_rat(q);
  if (a.empty()) return b.empty() ? -1 : static_cast<long>(b.size()) - 1;
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      const Rat factor = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= factor * b[k];
      while (!a.empty() && a.back().is_zero()) a.pop_back();
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

Strategy parse_strategy(std::string_view name) {
  if (name == "poly") return Strategy::poly;
  if (name == "binpow") return Strategy::binpow;
  if (name == "pow2chain") return Strategy::pow2chain;
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::poly: return "poly";
    case Strategy::binpow: return "binpow";
    default: return "pow2chain";
  }
}

RjValue eval_R(int j, unsigned long n, const Rat& x, Strategy strategy) {
  check_j(j);
  switch (strategy) {
    case Strategy::poly: return eval_poly(j, n, x);
    case Strategy::binpow: return eval_binpow(j, n, x);
    default: return eval_pow2chain(j, n, x);
  }
}

std::pair<IntPolynomial, IntPolynomial> rj_display(int j, unsigned n) {
  check_j(j);
  if (j == 2 && n == 0) throw std::domain_error("R_2(0, x) is undefined");
  const IntPolynomial s = numer_poly(n), c = denom_poly(n);
  IntPolynomial num, den;
  switch (j) {
    case 0: num = s, den = c; break;
    case 1: num = c + s, den = c - s; break;
    case 2: num = -c, den = s; break;
    default: num = s - c, den = s + c; break;
  }
  Int g = 0;
  for (const auto& v : num.coeffs) g = gcd(g, v);
  for (const auto& v : den.coeffs) g = gcd(g, v);
  if (g > 1) {
    for (auto& v : num.coeffs) v /= g;
    for (auto& v : den.coeffs) v /= g;
  }
  if (den.coeffs.back() < 0) {
    num = -num;
    den = -den;
  }
  return {num, den};
}

}  // namespace machin
