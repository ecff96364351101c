#pragma once

// Built-in verified identities: the two-term classification over arguments
// of the form 2^a/b or b/2^a, classical formulas, and the Fibonacci family.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "machin/formula.hpp"
#include "machin/rat.hpp"

namespace machin {

// x1 atan(z1) + x2 atan(z2) = pi/4 with 0 < z1 < z2 < 1.
struct PowerTwoSolution {
  Rat x1, z1, x2, z2;

  MachinFormula formula() const;
  std::string str() const;  // (x1, z1, x2, z2)

  friend bool operator==(const PowerTwoSolution&, const PowerTwoSolution&) = default;
  friend bool operator<(const PowerTwoSolution& a, const PowerTwoSolution& b) {
    if (a.z1 != b.z1) return a.z1 < b.z1;
    if (a.z2 != b.z2) return a.z2 < b.z2;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
  }
};

std::vector<PowerTwoSolution> sporadic_solutions();

// which = 1: (1, 1/(2^(a+1)+1), 1, 2^a/(2^a+1)), a >= 0.
// which = 2: (1, 1/(2^(a+1)-1), 1, (2^a-1)/2^a), a >= 1.
PowerTwoSolution parametric_family(int which, unsigned a);
bool in_parametric_family(const PowerTwoSolution& s);

struct BruteForceReport {
  std::set<PowerTwoSolution> sporadic;  // hits outside both families
  std::set<PowerTwoSolution> family;    // hits inside a family
  std::size_t candidates = 0;           // verify() calls
  std::size_t valid = 0;                // candidates that verified
  std::size_t valid_with_d_3_or_6 = 0;  // must stay zero
};

// u1 atan(z1) + u2 atan(z2) = (c/d) pi over 0 < |u_k| <= 4, a_k in {0,1,2},
// b_k in {1,2,3,5,7,11,41,239}, d in {1,2,3,4,6}, 0 < |c| <= 24, with
// z_k = 2^a/b or b/2^a in (0, 1) and z1 < z2. Hits are rescaled to rhs 1/4.
BruteForceReport brute_force_theorem1();

// atan(F_n/F_{n+1}) + atan(F_{n-1}/F_{n+2}) = pi/4, n >= 1.
MachinFormula fibonacci_formula(unsigned n);
Int fibonacci(unsigned n);

// Index 1..10 gives the sporadic solutions in order, 11 and 12 the two
// families at parameter a. The pair is the theorem2_eval input.
std::pair<std::vector<RjTerm>, Rat> rj_restatement(int index, unsigned a = 1);

struct CatalogEntry {
  std::string name;
  MachinFormula formula;
};

// Machin, Euler, Hermann, Hutton, and the two-term identities built from
// R_j that appear alongside them.
std::vector<CatalogEntry> classical_formulas();
// Everything: classical, sporadic, family samples, Fibonacci samples.
std::vector<CatalogEntry> catalog_all();

}  // namespace machin
