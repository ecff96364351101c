#pragma once

// Machin-like formulas sum_k c_k atan(x_k) = r pi with rational c_k, x_k, r.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "machin/enclosure.hpp"
#include "machin/rat.hpp"

namespace machin {

struct ArctanTerm {
  Rat coef;
  Rat arg;
  friend bool operator==(const ArctanTerm& a, const ArctanTerm& b) { return a.coef == b.coef && a.arg == b.arg; }
};

// Always canonical: arguments made positive (atan is odd), terms sorted by
// argument, equal arguments merged, zero coefficients and zero args dropped.
class MachinFormula {
 public:
  MachinFormula() = default;
  MachinFormula(std::vector<ArctanTerm> terms, Rat rhs);

  const std::vector<ArctanTerm>& terms() const { return terms_; }
  const Rat& rhs() const { return rhs_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // e.g. "-1*atan(1/239) + 4*atan(1/5) = 1/4 pi"
  std::string str() const;

  friend bool operator==(const MachinFormula& a, const MachinFormula& b) {
    return a.rhs_ == b.rhs_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<ArctanTerm> terms_;
  Rat rhs_;
};

std::ostream& operator<<(std::ostream& os, const MachinFormula& f);

class FormulaSyntaxError : public std::invalid_argument {
 public:
  FormulaSyntaxError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// formula := signed_term (('+'|'-') term)* '=' rat 'pi'
// term    := rat '*' 'atan' '(' rat ')'
// Throws FormulaSyntaxError, or std::domain_error for a zero denominator.
MachinFormula parse_formula(std::string_view text);

struct VerificationReport {
  bool gaussian_ok = false;
  bool branch_ok = false;
  int direction_exponent = 0;  // e = 4 T rhs mod 8
  Enclosure enclosure;         // LHS - rhs pi
  std::string reason;          // empty when valid

  bool valid() const { return gaussian_ok && branch_ok; }
  // valid=<bool> gaussian=<bool> branch=<bool> dir=<0..7>
  std::string record() const;
};

// Stage 1: with T the least positive integer clearing the coefficient
// denominators, prod (b_k + a_k i)^(T c_k) * (1 - i)^e must be a positive
// rational. That fixes LHS - rhs pi modulo 2 pi / T. Stage 2 encloses
// LHS - rhs pi tightly enough to exclude every nonzero multiple of 2 pi / T.
VerificationReport verify(const MachinFormula& f);

// sum 1/log10|1/x_k|. Throws std::domain_error if some |x_k| >= 1.
double lehmer_measure(const MachinFormula& f);

// Rewrites |x| > 1 through atan(x) = sgn(x) pi/2 - atan(1/x) and folds
// atan(+-1) = +-pi/4 into the right-hand side.
MachinFormula normalize_args(const MachinFormula& f);

// c atan(x) -> 2c atan(2x) - c atan(4x^3 + 3x). Throws std::out_of_range.
MachinFormula split_term(const MachinFormula& f, std::size_t k);

// One summand (r / n) atan(R_j(n, x)).
struct RjTerm {
  Rat r;
  int j = 0;
  unsigned long n = 1;
};

// Builds sum (r_k/n_k) atan(R_{j_k}(n_k, x)) and its exact right-hand side.
// Each arctan is pinned to its branch n_k atan(x) + j_k pi/4 + m_k pi by
// enclosure; sum r_k = 0 cancels the atan(x) parts, so
// rhs = sum (r_k/n_k)(j_k/4 + m_k).
// Throws std::invalid_argument if sum r_k != 0, std::domain_error at a pole.
std::pair<MachinFormula, Rat> theorem2_eval(const std::vector<RjTerm>& spec, const Rat& x);

}  // namespace machin
