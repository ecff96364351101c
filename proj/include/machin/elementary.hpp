#pragma once

// Rigorous enclosures of arctan, atanh/ln, sin/cos/tan, square roots and pi.
// Every result is a rational interval guaranteed to contain the true value.

#include <cstddef>

#include "machin/enclosure.hpp"
#include "machin/rat.hpp"

namespace machin {

// Fixed-point evaluation of sum_m s^m x^(2m+1)/(2m+1) with x = a/b, 0 <= a < b,
// scaled by `scale` (s = -1 gives arctan, s = +1 gives atanh). The returned
// integer `sum` satisfies |sum - scale*f(x)| <= error_ulps. Stops at the first
// vanishing truncated power, which makes `terms` ~ log(scale)/(2 log(1/x)).
struct SeriesSum {
  Int sum;
  Int error_ulps;
  std::size_t terms = 0;
};
SeriesSum odd_power_series(const Int& a, const Int& b, const Int& scale, bool alternating);

// Width <= 2^-bits.
Enclosure atan_at_bits(const Rat& x, unsigned bits);
Enclosure atanh_at_bits(const Rat& x, unsigned bits);  // |x| <= 1/2
Enclosure ln_at_bits(const Rat& y, unsigned bits);     // y > 0
Enclosure sin_at_bits(const Rat& t, unsigned bits);    // |t| <= 1
Enclosure cos_at_bits(const Rat& t, unsigned bits);    // |t| <= 1

// Monotone lifts to interval arguments. Width grows with the input width.
Enclosure atan_of(const Enclosure& x, unsigned bits);
Enclosure ln_of(const Enclosure& y, unsigned bits);
Enclosure log10_of(const Enclosure& y, unsigned bits);
Enclosure sin_of(const Enclosure& t, unsigned bits);  // t within [-1, 1]
Enclosure cos_of(const Enclosure& t, unsigned bits);  // t within [-1, 1]
Enclosure tan_of(const Enclosure& t, unsigned bits);  // t within [-1, 1]

// arctan(x) with width <= eps. Successive calls for one x with shrinking eps
// return nested intervals: levels run at 64 * 2^j bits and are intersected.
Enclosure atan_enclosure(const Rat& x, const Rat& eps);

// Pi on the same ladder, from 16 atan(1/5) - 4 atan(1/239) after a one-time
// exact check of that seed. Width <= 2^-bits; nested in `bits`.
Enclosure pi_at_bits(unsigned bits);

// sqrt(y) by bisection until the width is at most `width`.
Enclosure sqrt_enclosure(const Rat& y, const Rat& width);

// Smallest b with 2^-b <= eps (eps > 0).
unsigned bits_for(const Rat& eps);

}  // namespace machin
