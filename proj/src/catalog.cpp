#include "machin/catalog.hpp"

#include <stdexcept>

#include "machin/ratfun.hpp"

namespace machin {

namespace {

Rat two_pow(unsigned a) { return Rat(int_pow(2, a)); }

MachinFormula r3_formula(const Int& n, const Rat& x) {
  const RjValue r = eval_R(3, n.get_ui(), x);
  return {{{Rat(n), x}, {Rat(-1), r.value}}, Rat(1, 4)};
}

}  // namespace

MachinFormula PowerTwoSolution::formula() const { return {{{x1, z1}, {x2, z2}}, Rat(1, 4)}; }

std::string PowerTwoSolution::str() const {
  return "(" + x1.str() + ", " + z1.str() + ", " + x2.str() + ", " + z2.str() + ")";
}

std::vector<PowerTwoSolution> sporadic_solutions() {
  auto s = [](Rat x1, Rat z1, Rat x2, Rat z2) { return PowerTwoSolution{x1, z1, x2, z2}; };
  return {
      s(-1, Rat(1, 239), 4, Rat(1, 5)),           s(-1, Rat(1, 7), 2, Rat(1, 2)),
      s(-1, Rat(2, 11), Rat(3, 2), Rat(3, 4)),    s(-1, Rat(2, 11), 3, Rat(1, 3)),
      s(Rat(1, 3), Rat(1, 239), Rat(4, 3), Rat(2, 3)), s(Rat(1, 2), Rat(2, 11), Rat(3, 2), Rat(1, 2)),
      s(1, Rat(1, 41), 2, Rat(2, 5)),             s(1, Rat(1, 7), 2, Rat(1, 3)),
      s(1, Rat(1, 2), Rat(1, 2), Rat(3, 4)),      s(3, Rat(1, 7), 2, Rat(2, 11)),
  };
}

PowerTwoSolution parametric_family(int which, unsigned a) {
  const Rat p = two_pow(a);
  if (which == 1) return {1, Rat(1) / (Rat(2) * p + Rat(1)), 1, p / (p + Rat(1))};
  if (which == 2) {
    if (a == 0) throw std::domain_error("second family needs a >= 1: z2 vanishes at a = 0");
    return {1, Rat(1) / (Rat(2) * p - Rat(1)), 1, (p - Rat(1)) / p};
  }
  throw std::invalid_argument("family must be 1 or 2");
}

bool in_parametric_family(const PowerTwoSolution& s) {
  if (s.x1 != Rat(1) || s.x2 != Rat(1)) return false;
  // Both families are pinned down by z2 = 2^a/(2^a+1) or (2^a-1)/2^a.
  for (int which : {1, 2}) {
    const Rat t = which == 1 ? s.z2 / (Rat(1) - s.z2) : Rat(1) / (Rat(1) - s.z2);
    if (!t.is_integer() || t.sign() <= 0) continue;
    const Int& v = t.num();
    if ((v & (v - 1)) != 0) continue;
    const auto a = static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2) - 1);
    if (which == 2 && a == 0) continue;
    if (parametric_family(which, a) == s) return true;
  }
  return false;
}

BruteForceReport brute_force_theorem1() {
  BruteForceReport rep;
  std::set<Rat> zs;
  for (unsigned a = 0; a <= 2; ++a)
    for (long b : {1, 2, 3, 5, 7, 11, 41, 239}) {
      for (const Rat& z : {two_pow(a) / Rat(b), Rat(b) / two_pow(a)})
        if (z.sign() > 0 && z < Rat(1)) zs.insert(z);
    }
  std::set<Rat> rhs_values;
  for (long d : {1, 2, 3, 4, 6})
    for (long c = -24; c <= 24; ++c)
      if (c != 0) rhs_values.insert(Rat(c, d));

  const std::vector<Rat> zv(zs.begin(), zs.end());
  for (std::size_t i = 0; i < zv.size(); ++i)
    for (std::size_t k = i + 1; k < zv.size(); ++k)
      for (long u1 = -4; u1 <= 4; ++u1)
        for (long u2 = -4; u2 <= 4; ++u2) {
          if (u1 == 0 || u2 == 0) continue;
          for (const Rat& cd : rhs_values) {
            const MachinFormula f({{Rat(u1), zv[i]}, {Rat(u2), zv[k]}}, cd);
            ++rep.candidates;
            if (!verify(f).valid()) continue;
            ++rep.valid;
            if (cd.den() == 3 || cd.den() == 6) ++rep.valid_with_d_3_or_6;
            // x_k = u_k / (4 c/d) brings the right-hand side to pi/4.
            const Rat scale = Rat(4) * cd;
            const PowerTwoSolution s{Rat(u1) / scale, zv[i], Rat(u2) / scale, zv[k]};
            (in_parametric_family(s) ? rep.family : rep.sporadic).insert(s);
          }
        }
  return rep;
}

Int fibonacci(unsigned n) {
  Int f;
  mpz_fib_ui(f.get_mpz_t(), n);
  return f;
}

MachinFormula fibonacci_formula(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  return {{{Rat(1), Rat(fibonacci(n), fibonacci(n + 1))}, {Rat(1), Rat(fibonacci(n - 1), fibonacci(n + 2))}},
          Rat(1, 4)};
}

std::pair<std::vector<RjTerm>, Rat> rj_restatement(int index, unsigned a) {
  // coef1 atan(R_j1(n1, x)) + coef2 atan(R_j2(n2, x)); r_k = coef_k n_k.
  struct Row {
    Rat c1;
    int j1;
    unsigned long n1;
    Rat c2;
    int j2;
    unsigned long n2;
    Rat x;
  };
  static const Row rows[] = {
      {4, 0, 1, -1, 3, 4, Rat(1, 5)},          {2, 0, 1, -1, 3, 2, Rat(1, 2)},
      {Rat(-3, 2), 0, 2, 1, 3, 3, Rat(3)},     {-1, 0, 3, 3, 3, 1, Rat(2)},
      {Rat(4, 3), 0, 1, Rat(-1, 3), 1, 4, Rat(2, 3)}, {Rat(1, 2), 0, 3, Rat(-3, 2), 2, 1, Rat(2)},
      {2, 0, 1, -1, 3, 2, Rat(2, 5)},          {2, 0, 1, -1, 3, 2, Rat(1, 3)},
      {Rat(-1, 2), 0, 2, 1, 3, 1, Rat(3)},     {2, 0, 3, -3, 1, 2, Rat(2)},
  };
  if (index >= 1 && index <= 10) {
    const Row& r = rows[index - 1];
    return {{{r.c1 * Rat(r.n1), r.j1, r.n1}, {r.c2 * Rat(r.n2), r.j2, r.n2}}, r.x};
  }
  if (index == 11 || index == 12) {
    if (index == 12 && a == 0) throw std::domain_error("second family needs a >= 1");
    const Rat p = Rat(2) * two_pow(a);
    const Rat x = Rat(1) / (index == 11 ? p + Rat(1) : p - Rat(1));
    return {{{Rat(1), 0, 1}, {Rat(-1), 3, 1}}, x};
  }
  throw std::out_of_range("restatement index must be in 1..12");
}

std::vector<CatalogEntry> classical_formulas() {
  std::vector<CatalogEntry> out{
      {"machin", parse_formula("4*atan(1/5) - 1*atan(1/239) = 1/4 pi")},
      {"euler", parse_formula("1*atan(1/2) + 1*atan(1/3) = 1/4 pi")},
      {"hermann", parse_formula("2*atan(1/2) - 1*atan(1/7) = 1/4 pi")},
      {"hutton", parse_formula("2*atan(1/3) + 1*atan(1/7) = 1/4 pi")},
      {"r1-2-r0-5", parse_formula("5*atan(1/7) + 2*atan(3/79) = 1/4 pi")},
      {"r2-17-r3-22", parse_formula("22*atan(24478/873121) + 17*atan(685601/69049993) = 1/4 pi")},
      {"r3-22-at-1/28", r3_formula(Int(22), Rat(1, 28))},
      {"r3-33-at-1/42", r3_formula(Int(33), Rat(1, 42))},
      {"r3-48-at-9/550", r3_formula(Int(48), Rat(9, 550))},
  };
  return out;
}

std::vector<CatalogEntry> catalog_all() {
  std::vector<CatalogEntry> out = classical_formulas();
  const auto sp = sporadic_solutions();
  for (std::size_t k = 0; k < sp.size(); ++k) out.push_back({"sporadic-" + std::to_string(k + 1), sp[k].formula()});
  for (unsigned a = 1; a <= 4; ++a) {
    out.push_back({"family1-a" + std::to_string(a), parametric_family(1, a).formula()});
    out.push_back({"family2-a" + std::to_string(a), parametric_family(2, a).formula()});
  }
  for (unsigned n = 2; n <= 6; ++n) out.push_back({"fibonacci-" + std::to_string(n), fibonacci_formula(n)});
  return out;
}

}  // namespace machin
