#pragma once

// Gaussian rationals Q[i] and the integer sub-case Z[i].

#include <iosfwd>
#include <string>
#include <string_view>

#include "machin/rat.hpp"

namespace machin {

// Z[i] with arbitrary-precision parts. Used on hot paths where both parts are
// known to be integers (powers of b + a i).
struct GaussInt {
  Int re{0};
  Int im{0};

  GaussInt conj() const { return {re, -im}; }
  Int norm() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b);
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

GaussInt square(const GaussInt& z);
// Left-to-right binary exponentiation.
GaussInt pow(const GaussInt& z, unsigned long n);

struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r, Rat i = Rat()) : re(std::move(r)), im(std::move(i)) {}  // NOLINT
  explicit GaussRat(const GaussInt& z) : re(z.re), im(z.im) {}

  static GaussRat parse(std::string_view text);

  GaussRat conj() const { return {re, -im}; }
  Rat norm() const { return re * re + im * im; }
  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_gauss_integer() const { return re.is_integer() && im.is_integer(); }

  GaussRat operator-() const { return {-re, -im}; }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& z);

// z^n by binary exponentiation; negative n goes through conj(z)^|n| / norm(z)^|n|.
// Throws std::domain_error for a zero base with negative exponent.
GaussRat gauss_pow(const GaussRat& z, long long n);

}  // namespace machin
