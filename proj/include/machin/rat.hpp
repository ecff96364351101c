#pragma once

// Exact rational scalar backed by GMP. Every value is kept in lowest terms
// with a positive denominator; zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace machin {

using Int = mpz_class;

class Rat {
 public:
  Rat() = default;
  template <std::signed_integral T>
  Rat(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  template <std::unsigned_integral T>
  Rat(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rat(const Int& v) : q_(v) {}            // NOLINT(google-explicit-constructor)
  Rat(const Int& num, const Int& den);

  // Skips the gcd. The caller guarantees gcd(|num|, den) = 1 and den > 0.
  static Rat from_coprime(Int num, Int den);

  // Accepts `p`, `p/q`, and plain decimals such as `-0.025`.
  static Rat parse(std::string_view text);

  const Int& num() const { return q_.get_num(); }
  const Int& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rat abs() const;
  Rat reciprocal() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;
  double to_double() const;

 private:
  explicit Rat(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Int floor(const Rat& r);
Int ceil(const Rat& r);
Rat pow(const Rat& base, long exponent);

// Number of base-10 digits of |v| (1 for zero).
std::size_t decimal_digits(const Int& v);

// log10|v| for v != 0, accurate to double precision even for huge v.
double log10_abs(const Int& v);

// Divides num and den by their common power of two. Valid only when the
// odd part of gcd(num, den) is known to be 1.
Rat ratio_coprime_up_to_two(Int num, Int den);

Int int_pow(long base, unsigned long exponent);
Int lcm(const Int& a, const Int& b);

}  // namespace machin
