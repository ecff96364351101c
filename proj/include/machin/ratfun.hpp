#pragma once

// R_j(n, x) = tan(n atan(x) + j pi/4) as exact rational functions, with three
// evaluation routes: explicit polynomials, (b + a i)^n by squaring, and
// repeated tangent doubling when n is a power of two.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "machin/rat.hpp"

namespace machin {

struct IntPolynomial {
  std::vector<Int> coeffs;  // coeffs[k] multiplies x^k; no trailing zeros

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> c);

  bool is_zero() const { return coeffs.empty(); }
  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Int coeff(std::size_t k) const { return k < coeffs.size() ? coeffs[k] : Int(0); }
  Rat eval(const Rat& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs == b.coeffs; }

  // Descending powers, e.g. "-x^3-3x^2+3x+1"; "0" for the zero polynomial.
  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

IntPolynomial numer_poly(unsigned n);  // sum (-1)^r C(n, 2r+1) x^(2r+1)
IntPolynomial denom_poly(unsigned n);  // sum (-1)^r C(n, 2r) x^(2r)

// Degree of gcd(p, q) over Q; 0 means no common complex root.
long common_factor_degree(const IntPolynomial& p, const IntPolynomial& q);

struct RjValue {
  bool pole = false;
  Rat value;

  static RjValue finite(Rat v) { return {false, std::move(v)}; }
  static RjValue infinity() { return {true, Rat()}; }
  friend bool operator==(const RjValue& a, const RjValue& b) {
    return a.pole == b.pole && (a.pole || a.value == b.value);
  }
  std::string str() const { return pole ? "pole" : value.str(); }
};

enum class Strategy { poly, binpow, pow2chain };
Strategy parse_strategy(std::string_view name);
const char* strategy_name(Strategy s);

// Throws std::invalid_argument for j outside 0..3 and for pow2chain with n
// not a power of two (n = 1 is 2^0 and allowed).
RjValue eval_R(int j, unsigned long n, const Rat& x, Strategy strategy = Strategy::binpow);

// (numerator, denominator) of R_j(n, x), content-reduced, denominator's
// leading coefficient positive. Throws std::domain_error for j = 2, n = 0.
std::pair<IntPolynomial, IntPolynomial> rj_display(int j, unsigned n);

}  // namespace machin
