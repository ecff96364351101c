#include "machin/rat.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace machin {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

Int parse_int(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  Int v;
  v.set_str(std::string(body), 10);
  if (s.front() == '-') v = -v;
  return v;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  q_.get_num() = num;
  q_.get_den() = den;
  q_.canonicalize();
}

Rat Rat::from_coprime(Int num, Int den) {
  mpq_class q;
  q.get_num() = std::move(num);
  q.get_den() = std::move(den);
  return Rat(std::move(q));
}

Rat Rat::parse(std::string_view raw) {
  std::string compact;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  const std::string_view text = compact;
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto frac = text.substr(dot + 1);
    if (!frac.empty() && !all_digits(frac)) throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
    std::string digits(text.substr(0, dot));
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits += frac;
    return Rat(parse_int(digits), int_pow(10, frac.size()));
  }
  return Rat(parse_int(text));
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(q_))); }

Rat Rat::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rat(std::move(r));
}

Rat Rat::operator-() const { return Rat(mpq_class(-q_)); }

Rat& Rat::operator+=(const Rat& o) {
  q_ += o.q_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  q_ -= o.q_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  q_ *= o.q_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rat::str() const { return q_.get_str(10); }

double Rat::to_double() const {
  if (is_zero()) return 0.0;
  const double l = log10_abs(num()) - log10_abs(den());
  if (l > 300 || l < -300) return sign() * std::pow(10.0, l);
  // mpq_get_d truncates; good enough for display purposes
  return q_.get_d();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Int ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return q;
}

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(base.reciprocal(), -exponent);
  const auto e = static_cast<unsigned long>(exponent);
  Int n, d;
  mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
  return Rat::from_coprime(std::move(n), std::move(d));
}

std::size_t decimal_digits(const Int& v) {
  if (v == 0) return 1;
  const std::size_t upper = mpz_sizeinbase(v.get_mpz_t(), 10);
  if (upper == 1) return 1;
  // sizeinbase may overshoot by one; decide from the logarithm when it is
  // safely away from an integer, otherwise compare against 10^(upper-1).
  const double l = log10_abs(v);
  const double frac = l - std::floor(l);
  const double slack = 1e-15 * (std::fabs(l) + 1.0) + 1e-12;
  if (frac > slack && frac < 1.0 - slack) return static_cast<std::size_t>(std::floor(l)) + 1;
  Int bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, upper - 1);
  return mpz_cmpabs(v.get_mpz_t(), bound.get_mpz_t()) >= 0 ? upper : upper - 1;
}

double log10_abs(const Int& v) {
  if (v == 0) throw std::domain_error("log10 of zero");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

Rat ratio_coprime_up_to_two(Int num, Int den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (num == 0) return Rat();
  const auto tz = std::min(mpz_scan1(num.get_mpz_t(), 0), mpz_scan1(den.get_mpz_t(), 0));
  if (tz > 0) {
    mpz_tdiv_q_2exp(num.get_mpz_t(), num.get_mpz_t(), tz);
    mpz_tdiv_q_2exp(den.get_mpz_t(), den.get_mpz_t(), tz);
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat::from_coprime(std::move(num), std::move(den));
}

Int int_pow(long base, unsigned long exponent) {
  Int r;
  if (base >= 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), exponent);
  } else {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(-base), exponent);
    if (exponent % 2 == 1) r = -r;
  }
  return r;
}

Int lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace machin
