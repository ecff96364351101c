#include "machin/enclosure.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace machin {

Enclosure::Enclosure(Rat point) : lo_(point), hi_(std::move(point)) {}

Enclosure::Enclosure(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("enclosure with lo > hi");
}

Rat Enclosure::midpoint() const { return (lo_ + hi_) / Rat(2); }

Enclosure Enclosure::rounded_out(unsigned bits) const {
  Int scale = 1;
  scale <<= bits;
  const Int lo = floor(lo_ * Rat(scale));
  const Int hi = ceil(hi_ * Rat(scale));
  return {Rat(lo, scale), Rat(hi, scale)};
}

Enclosure Enclosure::intersect(const Enclosure& o) const {
  const Rat& lo = std::max(lo_, o.lo_);
  const Rat& hi = std::min(hi_, o.hi_);
  if (hi < lo) throw std::logic_error("disjoint enclosures " + str() + " and " + o.str());
  return {lo, hi};
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
  const Rat p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

Enclosure operator*(const Rat& s, const Enclosure& e) {
  if (s.sign() >= 0) return {s * e.lo_, s * e.hi_};
  return {s * e.hi_, s * e.lo_};
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
  if (b.contains(Rat())) throw std::domain_error("enclosure division by an interval containing zero");
  return a * Enclosure(b.hi_.reciprocal(), b.lo_.reciprocal());
}

std::string Enclosure::str() const {
  auto approx = [](const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", r.to_double());
    return std::string(buf);
  };
  return "[" + approx(lo_) + ", " + approx(hi_) + "]";
}

std::ostream& operator<<(std::ostream& os, const Enclosure& e) { return os << e.str(); }

}  // namespace machin
