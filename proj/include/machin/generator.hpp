#pragma once

// Two-term identities n atan(x) - atan(R_3(n, x)) = pi/4 with small Lehmer
// measure, built from continued-fraction convergents near pi / (4n).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "machin/enclosure.hpp"
#include "machin/formula.hpp"
#include "machin/rat.hpp"

namespace machin {

struct Convergent {
  Int p{0};
  Int q{1};
  std::size_t index = 0;  // position in the full expansion
  Rat value() const { return Rat(p, q); }
};

class InsufficientPrecision : public std::runtime_error {
 public:
  InsufficientPrecision(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// The first `count` nonzero convergents of every number in x, each checked
// against |x - p/q| <= 1/q^2. An exact rational may yield fewer. Throws
// InsufficientPrecision when the endpoints disagree on a partial quotient.
std::vector<Convergent> convergents_of(const Enclosure& x, std::size_t count);

// Convergents of pi * factor, retrying on a ladder of pi enclosures.
std::vector<Convergent> pi_convergents(const Rat& factor, std::size_t count);

struct GeneratedRow {
  std::size_t index = 0;       // k for theorem-3 rows, m for power-of-two rows
  std::size_t conv_index = 0;  // 1-based among the nonzero convergents
  Convergent conv;
  Rat x;                       // a1/b1
  Int n{1};                    // coefficient of atan(x)
  // Present when the second argument was materialized.
  std::optional<MachinFormula> formula;
  std::size_t a2_digits = 0;
  std::size_t b2_digits = 0;
  double a2b2_approx = 0.0;
  double measure = 0.0;
  bool analytic = false;       // digits and measure from certified logarithms
  bool certified = false;      // verify() passed, or the analytic branch check did
};

struct RowOptions {
  // Rows whose second argument would exceed this many digits use the
  // analytic route instead of exact arithmetic.
  std::size_t max_exact_digits = 40'000'000;
  bool run_verify = true;
};

// n = p_k, x = 1/(4 q_k) from the k-th convergent of pi (k >= 1).
GeneratedRow theorem3_formula(std::size_t k, const RowOptions& opt = {});

// n = 2^m, x the conv_index-th nonzero convergent of pi / 2^(m+2).
GeneratedRow pow2_formula(std::size_t m, std::size_t conv_index, const RowOptions& opt = {});

// Builds the row for n atan(x) - atan(R_3(n, x)) = pi/4 directly.
GeneratedRow two_term_row(const Int& n, const Rat& x, const RowOptions& opt = {});

struct SearchGrid {
  Rat lo;
  Rat hi;
  Rat step;
};

// Candidates x where |R_j(n, x)| < eps and |R_i(m, x)| < eps, refined to
// convergents of the located root, turned into L/n atan(R_j(n,x)) -
// L/m atan(R_i(m,x)) = rhs pi with L = lcm(n, m). rhs = 0 rows are dropped.
std::vector<GeneratedRow> search_two_term(int j, int i, unsigned long n, unsigned long m, const Rat& eps,
                                          const SearchGrid& grid);

// k  p/q  a1/b1  a2_digits  b2_digits  a2b2_approx  mu
std::string row_tsv_header();
std::string row_tsv(const GeneratedRow& row);

}  // namespace machin
