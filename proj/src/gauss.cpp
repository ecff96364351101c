#include "machin/gauss.hpp"

#include <ostream>
#include <stdexcept>

namespace machin {

GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt square(const GaussInt& z) {
  GaussInt r;
  r.re = (z.re + z.im) * (z.re - z.im);
  r.im = z.re * z.im;
  r.im <<= 1;
  return r;
}

GaussInt pow(const GaussInt& z, unsigned long n) {
  GaussInt acc{1, 0};
  if (n == 0) return acc;
  int top = 63;
  while (((n >> top) & 1UL) == 0) --top;
  acc = z;
  for (int bit = top - 1; bit >= 0; --bit) {
    acc = square(acc);
    if ((n >> bit) & 1UL) acc = acc * z;
  }
  return acc;
}

GaussRat operator*(const GaussRat& a, const GaussRat& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat operator/(const GaussRat& a, const GaussRat& b) {
  if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
  const Rat n = b.norm();
  const GaussRat p = a * b.conj();
  return {p.re / n, p.im / n};
}

GaussRat gauss_pow(const GaussRat& z, long long n) {
  if (n < 0) {
    if (z.is_zero()) throw std::domain_error("zero base with negative exponent");
    const auto m = static_cast<unsigned long>(-(n + 1)) + 1UL;
    const GaussRat up = gauss_pow(z.conj(), static_cast<long long>(m));
    const Rat scale = pow(z.norm(), static_cast<long>(m));
    return {up.re / scale, up.im / scale};
  }
  // Clear denominators so the squaring loop runs in Z[i].
  const Int d = lcm(z.re.den(), z.im.den());
  const GaussInt w{z.re.num() * (d / z.re.den()), z.im.num() * (d / z.im.den())};
  const GaussInt p = pow(w, static_cast<unsigned long>(n));
  if (d == 1) return GaussRat(p);
  Int dn;
  mpz_pow_ui(dn.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(n));
  return {Rat(p.re, dn), Rat(p.im, dn)};
}

GaussRat GaussRat::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw std::invalid_argument("empty Gaussian value");
  if (s.back() != 'i') return {Rat::parse(s)};
  s.pop_back();
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_of = [](std::string t) {
    if (t.empty() || t == "+") return Rat(1);
    if (t == "-") return Rat(-1);
    if (t.back() == '*') t.pop_back();
    return Rat::parse(t);
  };
  if (split == std::string::npos) return {Rat(), imag_of(s)};
  return {Rat::parse(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string GaussRat::str() const {
  std::string out = re.str();
  if (im.sign() < 0)
    out += "-" + (-im).str() + "i";
  else
    out += "+" + im.str() + "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

}  // namespace machin
