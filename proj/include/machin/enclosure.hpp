#pragma once

// Closed rational intervals [lo, hi]. Endpoints are exact, so arithmetic is
// exact interval arithmetic; width only grows through truncated series.

#include <iosfwd>
#include <string>

#include "machin/rat.hpp"

namespace machin {

class Enclosure {
 public:
  Enclosure() = default;
  Enclosure(Rat point);  // NOLINT(google-explicit-constructor)
  Enclosure(Rat lo, Rat hi);

  const Rat& lo() const { return lo_; }
  const Rat& hi() const { return hi_; }
  Rat width() const { return hi_ - lo_; }
  Rat midpoint() const;

  bool contains(const Rat& v) const { return lo_ <= v && v <= hi_; }
  bool contains(const Enclosure& e) const { return lo_ <= e.lo_ && e.hi_ <= hi_; }
  // lo > a and hi < b
  bool inside_open(const Rat& a, const Rat& b) const { return a < lo_ && hi_ < b; }
  bool is_positive() const { return lo_.sign() > 0; }
  bool is_negative() const { return hi_.sign() < 0; }

  // Outward rounding onto the dyadic grid 2^-bits.
  Enclosure rounded_out(unsigned bits) const;
  // Throws std::logic_error when the intervals are disjoint.
  Enclosure intersect(const Enclosure& o) const;

  Enclosure operator-() const { return {-hi_, -lo_}; }
  friend Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo_ + b.lo_, a.hi_ + b.hi_}; }
  friend Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo_ - b.hi_, a.hi_ - b.lo_}; }
  friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
  friend Enclosure operator*(const Rat& s, const Enclosure& e);
  // Throws std::domain_error when the divisor contains zero.
  friend Enclosure operator/(const Enclosure& a, const Enclosure& b);

  std::string str() const;
  double mid_double() const { return midpoint().to_double(); }

 private:
  Rat lo_;
  Rat hi_;
};

std::ostream& operator<<(std::ostream& os, const Enclosure& e);

}  // namespace machin
