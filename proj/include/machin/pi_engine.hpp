#pragma once

// Decimal digits of pi from any verified Machin-like formula.

#include <cstddef>
#include <string>
#include <vector>

#include "machin/enclosure.hpp"
#include "machin/formula.hpp"
#include "machin/rat.hpp"

namespace machin {

// mantissa / 10^scale, off from the true value by at most error_ulps units
// of 10^-scale.
struct FixedPoint {
  Int mantissa{0};
  std::size_t scale = 0;
  Int error_ulps{0};
  std::size_t terms = 0;  // series terms summed, if any

  Enclosure enclosure() const;
};

// Gregory series for |x| < 1 at scale 10^digits. Throws std::domain_error
// if |x| >= 1.
FixedPoint gregory_atan_fp(const Rat& x, std::size_t digits);

// "3.14..." with `digits` decimals, correctly rounded. The formula is
// normalized first; throws std::invalid_argument if it does not verify or
// its right-hand side is zero.
std::string compute_pi(const MachinFormula& f, std::size_t digits);

// Contains pi, width <= 10^-digits, from 4 atan(1/5) - atan(1/239) = pi/4.
// Results are nested in `digits`.
Enclosure pi_enclosure(std::size_t digits);

struct BenchmarkRow {
  MachinFormula formula;
  std::vector<std::size_t> terms;  // per arctan, in formula order
  std::size_t total_terms = 0;
  double seconds = 0.0;
};

std::vector<BenchmarkRow> benchmark(const std::vector<MachinFormula>& fs, std::size_t digits);

// digits / (2 log10(1/|x|)), the expected number of series terms.
double predicted_terms(const Rat& x, std::size_t digits);

}  // namespace machin
