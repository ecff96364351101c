#include "machin/quartic.hpp"

#include <ostream>
#include <stdexcept>

namespace machin {

namespace {

// x + y*sqrt5
struct Sqrt5Pair {
  Rat x;
  Rat y;
};

Sqrt5Pair mul(const Sqrt5Pair& a, const Sqrt5Pair& b) {
  return {a.x * b.x + Rat(5) * a.y * b.y, a.x * b.y + a.y * b.x};
}
Sqrt5Pair add(const Sqrt5Pair& a, const Sqrt5Pair& b) { return {a.x + b.x, a.y + b.y}; }
Sqrt5Pair sub(const Sqrt5Pair& a, const Sqrt5Pair& b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

QuarticNum operator*(const QuarticNum& a, const QuarticNum& b) {
  // (A + B i)(C + D i) with A, B, C, D in Q(sqrt5).
  const Sqrt5Pair A{a.c1, a.c5}, B{a.ci, a.ci5}, C{b.c1, b.c5}, D{b.ci, b.ci5};
  const Sqrt5Pair re = sub(mul(A, C), mul(B, D));
  const Sqrt5Pair im = add(mul(A, D), mul(B, C));
  return {re.x, re.y, im.x, im.y};
}

QuarticNum quartic_conj_i(const QuarticNum& q) { return {q.c1, q.c5, -q.ci, -q.ci5}; }

QuarticNum quartic_conj_sqrt5(const QuarticNum& q) { return {q.c1, -q.c5, q.ci, -q.ci5}; }

Rat quartic_norm(const QuarticNum& q) {
  const QuarticNum relative = q * quartic_conj_i(q);  // lands in Q(sqrt5)
  const QuarticNum full = relative * quartic_conj_sqrt5(relative);
  if (!full.is_rational()) throw std::logic_error("quartic norm has irrational coordinates: " + full.str());
  return full.c1;
}

QuarticNum quartic_inverse(const QuarticNum& q) {
  const Rat n = quartic_norm(q);
  if (n.is_zero()) throw std::domain_error("inverse of zero in Q(i,sqrt5)");
  const QuarticNum s = quartic_conj_sqrt5(q);
  const QuarticNum cofactor = quartic_conj_i(q) * s * quartic_conj_i(s);
  return n.reciprocal() * cofactor;
}

QuarticNum quartic_pow(const QuarticNum& q, long long n) {
  if (n < 0) return quartic_pow(quartic_inverse(q), -n);
  QuarticNum acc(1);
  QuarticNum base = q;
  auto e = static_cast<unsigned long long>(n);
  while (e > 0) {
    if (e & 1ULL) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

std::string QuarticNum::str() const {
  return "(" + c1.str() + ") + (" + c5.str() + ")*sqrt5 + (" + ci.str() + ")*i + (" + ci5.str() + ")*i*sqrt5";
}

std::ostream& operator<<(std::ostream& os, const QuarticNum& q) { return os << q.str(); }

}  // namespace machin
