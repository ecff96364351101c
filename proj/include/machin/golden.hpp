#pragma once

// pi/4 = a atan(phi^kappa) + b atan(phi^ell) with phi the golden section,
// checked exactly in Q(i, sqrt5).

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "machin/enclosure.hpp"
#include "machin/quartic.hpp"
#include "machin/rat.hpp"

namespace machin {

struct GoldenQuadruple {
  Rat a;
  Rat b;
  long kappa = 1;
  long ell = 1;

  // "a b kappa ell"
  static GoldenQuadruple parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const GoldenQuadruple&, const GoldenQuadruple&) = default;
};

// phi^k = (L_k + F_k sqrt5) / 2.
QuarticNum phi_power(long k);

struct GoldenReport {
  bool algebraic = false;  // (1+i phi^k)^(4u) (1+i phi^l)^(4v) equals its i-conjugate
  bool branch = false;     // the enclosure pins the multiple of pi/(4w) to zero
  Enclosure enclosure;     // a atan(phi^kappa) + b atan(phi^ell) - pi/4
  bool valid() const { return algebraic && branch; }
};

// Throws std::invalid_argument for kappa or ell equal to zero.
GoldenReport check_golden(const GoldenQuadruple& q);
bool verify_golden(const GoldenQuadruple& q);

std::vector<GoldenQuadruple> sixteen_quadruples();

// Norm of 1 + i phi^kappa down to Q, as an integer.
Int golden_norm(long kappa);

// Pairs 1 <= ell < kappa <= max_k whose norms share the same odd prime factors.
std::vector<std::pair<long, long>> golden_search(long max_k = 12);

// Odd prime factors by trial division.
std::vector<Int> odd_prime_factors(Int n);

}  // namespace machin
