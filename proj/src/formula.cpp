#include "machin/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>

#include "machin/elementary.hpp"
#include "machin/gauss.hpp"
#include "machin/ratfun.hpp"

namespace machin {

namespace {

unsigned bitlen(const Int& v) {
  if (v == 0) return 1;
  return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

Rat two_pow_neg(unsigned b) {
  Int d = 1;
  d <<= b;
  return Rat(Int(1), d);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  MachinFormula formula() {
    std::vector<ArctanTerm> terms;
    skip();
    terms.push_back(term(1));
    for (;;) {
      skip();
      if (at('+') || at('-')) {
        const int sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        terms.push_back(term(sign));
        continue;
      }
      break;
    }
    expect('=');
    const Rat rhs = rat();
    skip();
    if (at('*')) ++pos_;
    word("pi");
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    MachinFormula f(std::move(terms), rhs);
    if (f.empty()) fail("formula has no terms left after merging");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormulaSyntaxError(what + " at position " + std::to_string(pos_), pos_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
  void expect(char c) {
    skip();
    if (!at(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) fail("expected '" + std::string(w) + "'");
    pos_ += w.size();
  }
  Int integer() {
    skip();
    bool negative = false;
    if (at('+') || at('-')) {
      negative = s_[pos_] == '-';
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Int v(std::string(s_.substr(start, pos_ - start)), 10);
    return negative ? Int(-v) : v;
  }
  Rat rat() {
    const Int num = integer();
    skip();
    if (!at('/')) return Rat(num);
    ++pos_;
    const Int den = integer();
    if (den == 0) throw std::domain_error("zero denominator at position " + std::to_string(pos_));
    return Rat(num, den);
  }
  ArctanTerm term(int sign) {
    const Rat coef = rat();
    expect('*');
    word("atan");
    expect('(');
    const Rat arg = rat();
    expect(')');
    return {sign < 0 ? -coef : coef, arg};
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

// Encloses sum c_k atan(x_k) - rhs pi with width about 2^-bits.
Enclosure lhs_minus_rhs(const MachinFormula& f, unsigned bits) {
  const unsigned count_bits = bitlen(Int(static_cast<unsigned long>(f.size() + 1)));
  Enclosure acc = Rat();
  for (const auto& t : f.terms()) {
    const unsigned b = bits + bitlen(ceil(t.coef.abs())) + count_bits + 1;
    acc = acc + t.coef * atan_enclosure(t.arg, two_pow_neg(b));
  }
  if (!f.rhs().is_zero()) acc = acc - f.rhs() * pi_at_bits(bits + bitlen(ceil(f.rhs().abs())) + count_bits + 1);
  return acc;
}

unsigned long to_exponent(const Int& v) {
  const Int a = abs(v);
  if (!a.fits_ulong_p()) throw std::overflow_error("exponent too large for the Gaussian check");
  return a.get_ui();
}

}  // namespace

MachinFormula::MachinFormula(std::vector<ArctanTerm> terms, Rat rhs) : rhs_(std::move(rhs)) {
  // atan is odd, so every argument is stored positive.
  for (auto& t : terms) {
    if (t.arg.sign() < 0) {
      t.arg = -t.arg;
      t.coef = -t.coef;
    }
  }
  std::sort(terms.begin(), terms.end(), [](const ArctanTerm& a, const ArctanTerm& b) { return a.arg < b.arg; });
  for (auto& t : terms) {
    if (t.arg.is_zero()) continue;
    if (!terms_.empty() && terms_.back().arg == t.arg)
      terms_.back().coef += t.coef;
    else
      terms_.push_back(std::move(t));
  }
  std::erase_if(terms_, [](const ArctanTerm& t) { return t.coef.is_zero(); });
}

std::string MachinFormula::str() const {
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k == 0)
      out += t.coef.str();
    else if (t.coef.sign() < 0)
      out += " - " + (-t.coef).str();
    else
      out += " + " + t.coef.str();
    out += "*atan(" + t.arg.str() + ")";
  }
  if (out.empty()) out = "0";
  return out + " = " + rhs_.str() + " pi";
}

std::ostream& operator<<(std::ostream& os, const MachinFormula& f) { return os << f.str(); }

FormulaSyntaxError::FormulaSyntaxError(const std::string& what, std::size_t position)
    : std::invalid_argument(what), position_(position) {}

MachinFormula parse_formula(std::string_view text) { return Parser(text).formula(); }

std::string VerificationReport::record() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  return std::string("valid=") + b(valid()) + " gaussian=" + b(gaussian_ok) + " branch=" + b(branch_ok) +
         " dir=" + std::to_string(direction_exponent);
}

VerificationReport verify(const MachinFormula& f) {
  VerificationReport rep;
  Int T = 1;
  for (const auto& t : f.terms()) T = lcm(T, t.coef.den());
  const unsigned guard = 32 + bitlen(T);

  const Int& d = f.rhs().den();
  if (d != 1 && d != 2 && d != 4) {
    rep.enclosure = lhs_minus_rhs(f, guard);
    rep.reason = "unrepresentable rhs";
    return rep;
  }

  // Stage 1. Positive and negative exponents go to separate products; the
  // direction of P/Q equals that of P * conj(Q).
  GaussInt P{1, 0}, Q{1, 0};
  for (const auto& t : f.terms()) {
    const Int e = t.coef.num() * (T / t.coef.den());
    const GaussInt base{t.arg.den(), t.arg.num()};
    if (e > 0)
      P = P * pow(base, to_exponent(e));
    else
      Q = Q * pow(base, to_exponent(e));
  }
  Int e4 = (Rat(4) * f.rhs()).num() * T;
  e4 %= 8;
  if (e4 < 0) e4 += 8;
  rep.direction_exponent = static_cast<int>(e4.get_si());
  const GaussInt w = P * Q.conj() * pow(GaussInt{1, -1}, static_cast<unsigned long>(rep.direction_exponent));
  rep.gaussian_ok = w.im == 0 && w.re > 0;

  // Stage 2. Stage 1 leaves LHS - rhs pi in (2 pi / T) Z.
  rep.enclosure = lhs_minus_rhs(f, guard);
  const Rat window = Rat(2) * pi_at_bits(64).lo() / Rat(T);
  rep.branch_ok = rep.enclosure.contains(Rat()) && rep.enclosure.inside_open(-window, window);
  if (!rep.gaussian_ok)
    rep.reason = "gaussian direction mismatch";
  else if (!rep.branch_ok)
    rep.reason = "branch mismatch";
  return rep;
}

double lehmer_measure(const MachinFormula& f) {
  double mu = 0.0;
  for (const auto& t : f.terms()) {
    if (t.arg.abs() >= Rat(1)) throw std::domain_error("Lehmer measure needs |arg| < 1, got " + t.arg.str());
    // log10(b/a) from mantissas and an exact binary exponent difference.
    long ea = 0, eb = 0;
    const double ma = std::fabs(mpz_get_d_2exp(&ea, t.arg.num().get_mpz_t()));
    const double mb = mpz_get_d_2exp(&eb, t.arg.den().get_mpz_t());
    const double l = std::log10(mb / ma) + static_cast<double>(eb - ea) * std::log10(2.0);
    mu += 1.0 / l;
  }
  return mu;
}

MachinFormula normalize_args(const MachinFormula& f) {
  std::vector<ArctanTerm> terms;
  Rat rhs = f.rhs();
  for (const auto& t : f.terms()) {
    const Rat a = t.arg.abs();
    const Rat sgn(t.arg.sign());
    if (a == Rat(1)) {
      rhs -= t.coef * sgn / Rat(4);
    } else if (a > Rat(1)) {
      rhs -= t.coef * sgn / Rat(2);
      terms.push_back({-t.coef, t.arg.reciprocal()});
    } else {
      terms.push_back(t);
    }
  }
  return {std::move(terms), rhs};
}

MachinFormula split_term(const MachinFormula& f, std::size_t k) {
  if (k >= f.size()) throw std::out_of_range("term index " + std::to_string(k) + " out of range");
  std::vector<ArctanTerm> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& t = f.terms()[i];
    if (i != k) {
      terms.push_back(t);
      continue;
    }
    const Rat& x = t.arg;
    terms.push_back({Rat(2) * t.coef, Rat(2) * x});
    terms.push_back({-t.coef, Rat(4) * x * x * x + Rat(3) * x});
  }
  return {std::move(terms), f.rhs()};
}

std::pair<MachinFormula, Rat> theorem2_eval(const std::vector<RjTerm>& spec, const Rat& x) {
  Rat total;
  for (const auto& s : spec) total += s.r;
  if (!total.is_zero()) throw std::invalid_argument("the r_k must sum to zero");

  std::vector<ArctanTerm> terms;
  Rat rhs;
  for (const auto& s : spec) {
    if (s.n == 0) throw std::invalid_argument("n_k must be positive");
    const RjValue R = eval_R(s.j, s.n, x);
    if (R.pole) throw std::domain_error("x = " + x.str() + " is a pole of R_" + std::to_string(s.j) + "(" +
                                        std::to_string(s.n) + ", x)");
    const Int n(s.n);
    // atan(R) = n atan(x) + j pi/4 + m pi; find the integer m.
    long m = 0;
    for (unsigned bits = 64;; bits *= 2) {
      if (bits > (1U << 16)) throw std::runtime_error("could not pin the arctan branch");
      const Enclosure pi = pi_at_bits(bits + 4);
      const Enclosure diff = atan_enclosure(R.value, two_pow_neg(bits)) -
                             Rat(n) * atan_enclosure(x, two_pow_neg(bits + bitlen(n))) -
                             Rat(s.j, 4) * pi;
      const Enclosure q = diff / pi;
      const Int cand = floor(q.midpoint() + Rat(1, 2));
      if (q.inside_open(Rat(cand) - Rat(1, 2), Rat(cand) + Rat(1, 2))) {
        m = cand.get_si();
        break;
      }
    }
    const Rat coef = s.r / Rat(n);
    terms.push_back({coef, R.value});
    rhs += coef * (Rat(s.j, 4) + Rat(m));
  }
  MachinFormula f(std::move(terms), rhs);
  return {f, rhs};
}

}  // namespace machin
