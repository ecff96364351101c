#include "machin/pi_engine.hpp"

#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "machin/elementary.hpp"

namespace machin {

namespace {

Int pow10(std::size_t k) { return int_pow(10, k); }

struct Sum {
  Int value;
  Int error;
  std::vector<std::size_t> terms;
};

// T * sum c_k atan(x_k) at scale 10^digits, T clearing the coefficient denominators.
Sum weighted_sum(const MachinFormula& f, const Int& T, std::size_t digits) {
  Sum s{0, 0, {}};
  for (const auto& t : f.terms()) {
    const FixedPoint a = gregory_atan_fp(t.arg, digits);
    const Int w = t.coef.num() * (T / t.coef.den());
    s.value += w * a.mantissa;
    s.error += abs(w) * a.error_ulps;
    s.terms.push_back(a.terms);
  }
  return s;
}

Int round_div(const Int& num, const Int& den) {
  // floor(num/den + 1/2) for den > 0
  Int q = 2 * num + den;
  Int d = 2 * den;
  mpz_fdiv_q(q.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::string format_fixed(const Int& mantissa, std::size_t digits) {
  std::string s = Int(abs(mantissa)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return mantissa < 0 ? "-" + s : s;
}

std::mutex levels_mutex;
std::vector<Enclosure> levels;

std::size_t level_digits(std::size_t j) { return std::size_t{10} << j; }

}  // namespace

Enclosure FixedPoint::enclosure() const {
  const Int d = pow10(scale);
  return {Rat(mantissa - error_ulps, d), Rat(mantissa + error_ulps, d)};
}

FixedPoint gregory_atan_fp(const Rat& x, std::size_t digits) {
  if (x.abs() >= Rat(1)) throw std::domain_error("Gregory series needs |x| < 1, got " + x.str());
  FixedPoint r;
  r.scale = digits;
  const SeriesSum s = odd_power_series(abs(x.num()), x.den(), pow10(digits), true);
  r.mantissa = x.sign() < 0 ? Int(-s.sum) : s.sum;
  r.error_ulps = s.error_ulps;
  r.terms = s.terms;
  return r;
}

std::string compute_pi(const MachinFormula& input, std::size_t digits) {
  if (input.rhs().is_zero()) throw std::invalid_argument("right-hand side is zero");
  if (!verify(input).valid()) throw std::invalid_argument("formula does not verify: " + input.str());
  const MachinFormula f = normalize_args(input);
  if (f.rhs().is_zero() || f.empty()) throw std::invalid_argument("normalized formula has no pi content");

  Int T = 1;
  for (const auto& t : f.terms()) T = lcm(T, t.coef.den());
  Int weight = 0;
  for (const auto& t : f.terms()) weight += abs(t.coef.num() * t.coef.den());
  std::size_t guard = 10 + decimal_digits(weight);

  // pi = S / (T rhs) with S = T sum c_k atan(x_k).
  const Int rn = abs(f.rhs().num()) * T;
  const Int& rd = f.rhs().den();
  const int rsign = f.rhs().sign();
  for (;;) {
    const std::size_t P = digits + guard;
    const Sum s = weighted_sum(f, T, P);
    const Int v = rsign * s.value * rd;
    // Outward floor/ceil of (v -+ err) / rn, at scale 10^P.
    Int lo = v - s.error * rd, hi = v + s.error * rd;
    mpz_fdiv_q(lo.get_mpz_t(), lo.get_mpz_t(), rn.get_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), hi.get_mpz_t(), rn.get_mpz_t());
    const Int unit = pow10(guard);
    const Int a = round_div(lo, unit), b = round_div(hi, unit);
    if (a == b) return format_fixed(a, digits);
    guard *= 2;
  }
}

Enclosure pi_enclosure(std::size_t digits) {
  std::size_t j = 0;
  while (level_digits(j) < digits) ++j;
  std::lock_guard<std::mutex> lock(levels_mutex);
  while (levels.size() <= j) {
    const std::size_t P = level_digits(levels.size()) + 3;
    const FixedPoint a = gregory_atan_fp(Rat(1, 5), P), b = gregory_atan_fp(Rat(1, 239), P);
    const Int v = 16 * a.mantissa - 4 * b.mantissa;
    const Int e = 16 * a.error_ulps + 4 * b.error_ulps;
    const Int d = pow10(P);
    Enclosure e_now(Rat(v - e, d), Rat(v + e, d));
    if (!levels.empty()) e_now = e_now.intersect(levels.back());
    levels.push_back(e_now);
  }
  return levels[j];
}

std::vector<BenchmarkRow> benchmark(const std::vector<MachinFormula>& fs, std::size_t digits) {
  std::vector<BenchmarkRow> rows;
  for (const auto& f : fs) {
    BenchmarkRow row;
    row.formula = f;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& t : f.terms()) {
      const std::size_t n = gregory_atan_fp(t.arg, digits).terms;
      row.terms.push_back(n);
      row.total_terms += n;
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(std::move(row));
  }
  return rows;
}

double predicted_terms(const Rat& x, std::size_t digits) {
  if (x.is_zero()) return 0.0;
  const double l = log10_abs(x.den()) - log10_abs(x.num());
  return static_cast<double>(digits) / (2.0 * l);
}

}  // namespace machin
