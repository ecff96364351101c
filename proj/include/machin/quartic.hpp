#pragma once

// Elements of the biquadratic field Q(i, sqrt5), stored as coordinates over
// the basis {1, sqrt5, i, i*sqrt5}.

#include <iosfwd>
#include <string>

#include "machin/rat.hpp"

namespace machin {

struct QuarticNum {
  Rat c1;
  Rat c5;
  Rat ci;
  Rat ci5;

  QuarticNum() = default;
  QuarticNum(Rat a, Rat b = Rat(), Rat c = Rat(), Rat d = Rat())  // NOLINT
      : c1(std::move(a)), c5(std::move(b)), ci(std::move(c)), ci5(std::move(d)) {}

  static QuarticNum i() { return {0, 0, 1, 0}; }
  static QuarticNum sqrt5() { return {0, 1, 0, 0}; }

  bool is_zero() const { return c1.is_zero() && c5.is_zero() && ci.is_zero() && ci5.is_zero(); }
  bool is_rational() const { return c5.is_zero() && ci.is_zero() && ci5.is_zero(); }

  QuarticNum operator-() const { return {-c1, -c5, -ci, -ci5}; }
  friend QuarticNum operator+(const QuarticNum& a, const QuarticNum& b) {
    return {a.c1 + b.c1, a.c5 + b.c5, a.ci + b.ci, a.ci5 + b.ci5};
  }
  friend QuarticNum operator-(const QuarticNum& a, const QuarticNum& b) { return a + (-b); }
  friend QuarticNum operator*(const QuarticNum& a, const QuarticNum& b);
  friend QuarticNum operator*(const Rat& s, const QuarticNum& q) { return {s * q.c1, s * q.c5, s * q.ci, s * q.ci5}; }
  friend bool operator==(const QuarticNum& a, const QuarticNum& b) {
    return a.c1 == b.c1 && a.c5 == b.c5 && a.ci == b.ci && a.ci5 == b.ci5;
  }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const QuarticNum& q);

// i -> -i. Fixes Q(sqrt5) pointwise.
QuarticNum quartic_conj_i(const QuarticNum& q);
// sqrt5 -> -sqrt5. Fixes Q(i) pointwise.
QuarticNum quartic_conj_sqrt5(const QuarticNum& q);

// Full norm to Q: product of q with its three conjugates.
Rat quartic_norm(const QuarticNum& q);

QuarticNum quartic_inverse(const QuarticNum& q);
QuarticNum quartic_pow(const QuarticNum& q, long long n);

}  // namespace machin
