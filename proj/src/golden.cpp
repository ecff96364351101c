#include "machin/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "machin/elementary.hpp"

namespace machin {

namespace {

Int fib(long k) {
  Int f;
  mpz_fib_ui(f.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k < 0 && (-k) % 2 == 0) f = -f;
  return f;
}

Int lucas(long k) {
  Int l;
  mpz_lucnum_ui(l.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k));
  if (k < 0 && (-k) % 2 == 1) l = -l;
  return l;
}

QuarticNum one_plus_i_phi(long k) { return QuarticNum(1) + QuarticNum::i() * phi_power(k); }

// z^e with a negative exponent moved to the other side as conj(z)^|e|.
void multiply_in(QuarticNum& lhs, QuarticNum& rhs, const QuarticNum& z, const Int& e) {
  if (e == 0) return;
  if (!Int(abs(e)).fits_slong_p()) throw std::overflow_error("exponent too large");
  const long m = Int(abs(e)).get_si();
  const QuarticNum zc = quartic_conj_i(z);
  if (e > 0) {
    lhs = lhs * quartic_pow(z, m);
    rhs = rhs * quartic_pow(zc, m);
  } else {
    lhs = lhs * quartic_pow(zc, m);
    rhs = rhs * quartic_pow(z, m);
  }
}

Enclosure phi_power_enclosure(long k, const Enclosure& sqrt5) {
  return Rat(lucas(k), Int(2)) + Rat(fib(k), Int(2)) * sqrt5;
}

}  // namespace

GoldenQuadruple GoldenQuadruple::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string a, b;
  long kappa = 0, ell = 0;
  if (!(in >> a >> b >> kappa >> ell)) throw std::invalid_argument("expected 'a b kappa ell'");
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing input '" + rest + "'");
  return {Rat::parse(a), Rat::parse(b), kappa, ell};
}

std::string GoldenQuadruple::str() const {
  return a.str() + " " + b.str() + " " + std::to_string(kappa) + " " + std::to_string(ell);
}

QuarticNum phi_power(long k) { return {Rat(lucas(k), Int(2)), Rat(fib(k), Int(2))}; }

GoldenReport check_golden(const GoldenQuadruple& q) {
  if (q.kappa == 0 || q.ell == 0) throw std::invalid_argument("kappa and ell must be nonzero");
  GoldenReport rep;
  const Int w = lcm(q.a.den(), q.b.den());
  const Int u = q.a.num() * (w / q.a.den()), v = q.b.num() * (w / q.b.den());
  QuarticNum lhs(1), rhs(1);
  multiply_in(lhs, rhs, one_plus_i_phi(q.kappa), 4 * u);
  multiply_in(lhs, rhs, one_plus_i_phi(q.ell), 4 * v);
  rep.algebraic = lhs == rhs;

  // The algebraic identity leaves the difference in (pi / (4w)) Z.
  const unsigned bits = 48 + static_cast<unsigned>(mpz_sizeinbase(w.get_mpz_t(), 2)) +
                        static_cast<unsigned>(std::max(std::labs(q.kappa), std::labs(q.ell)));
  const Enclosure s5 = sqrt_enclosure(Rat(5), Rat(Int(1), int_pow(2, bits + 8)));
  const Enclosure pi = pi_at_bits(bits);
  rep.enclosure = q.a * atan_of(phi_power_enclosure(q.kappa, s5), bits) +
                  q.b * atan_of(phi_power_enclosure(q.ell, s5), bits) - Rat(1, 4) * pi;
  const Rat window = pi.lo() / (Rat(4) * Rat(w));
  rep.branch = rep.enclosure.contains(Rat()) && rep.enclosure.inside_open(-window, window);
  return rep;
}

bool verify_golden(const GoldenQuadruple& q) { return check_golden(q).valid(); }

std::vector<GoldenQuadruple> sixteen_quadruples() {
  return {
      {Rat(1, 3), Rat(1, 3), 3, 1},  {Rat(1), Rat(1), -3, -1},     {Rat(-1), Rat(1), -3, 1},   {Rat(1), Rat(-1), 3, -1},
      {Rat(1, 5), Rat(2, 5), 6, 2},  {Rat(1), Rat(2), -6, -2},     {Rat(-1, 3), Rat(2, 3), -6, 2}, {Rat(1), Rat(-2), 6, -2},
      {Rat(1, 7), Rat(3, 7), 5, 3},  {Rat(1), Rat(3), -5, -3},     {Rat(-1, 5), Rat(3, 5), -5, 3}, {Rat(1), Rat(-3), 5, -3},
      {Rat(-1, 2), Rat(3, 2), 5, 1}, {Rat(-1, 2), Rat(3, 2), -5, -1}, {Rat(1, 4), Rat(3, 4), -5, 1}, {Rat(1, 4), Rat(3, 4), 5, -1},
  };
}

Int golden_norm(long kappa) {
  const Rat n = quartic_norm(one_plus_i_phi(kappa));
  if (!n.is_integer()) throw std::logic_error("norm of 1 + i phi^k is not an integer");
  return n.num();
}

std::vector<Int> odd_prime_factors(Int n) {
  n = abs(n);
  std::vector<Int> out;
  while (n != 0 && mpz_even_p(n.get_mpz_t())) n /= 2;
  for (Int p = 3; p * p <= n; p += 2) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<std::pair<long, long>> golden_search(long max_k) {
  std::vector<std::vector<Int>> primes(static_cast<std::size_t>(std::max(max_k, 0L)) + 1);
  for (long k = 1; k <= max_k; ++k) primes[k] = odd_prime_factors(golden_norm(k));
  std::vector<std::pair<long, long>> out;
  for (long kappa = 2; kappa <= max_k; ++kappa)
    for (long ell = 1; ell < kappa; ++ell)
      if (primes[kappa] == primes[ell]) out.emplace_back(kappa, ell);
  return out;
}

}  // namespace machin
