#include "machin/generator.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "machin/elementary.hpp"
#include "machin/pi_engine.hpp"
#include "machin/ratfun.hpp"

namespace machin {

namespace {

unsigned bitlen(const Int& v) {
  if (v == 0) return 1;
  return static_cast<unsigned>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

std::string fmt6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Digits of |v| for an enclosure of log10|v|, or nullopt if it straddles an integer.
std::optional<std::size_t> digits_from_log(const Enclosure& l) {
  const Int a = floor(l.lo()), b = floor(l.hi());
  if (a != b || l.lo() == Rat(a)) return std::nullopt;
  return static_cast<std::size_t>(a.get_ui()) + 1;
}

void fill_exact(GeneratedRow& row, const Rat& r3, const RowOptions& opt) {
  MachinFormula f({{Rat(row.n), row.x}, {Rat(-1), r3}}, Rat(1, 4));
  row.a2_digits = decimal_digits(r3.num());
  row.b2_digits = decimal_digits(r3.den());
  row.a2b2_approx = r3.to_double();
  row.measure = lehmer_measure(f);
  if (opt.run_verify) row.certified = verify(f).valid();
  row.formula = std::move(f);
}

// (1 - i)(b + a i)^n = sqrt2 rho^n (cos t + i sin t), t = n atan(x) - pi/4, so
// a2 = sqrt2 rho^n sin t / c and b2 = sqrt2 rho^n cos t / c where c is the
// power of two removed by reduction.
void fill_analytic(GeneratedRow& row) {
  const Int& a = row.x.num();
  const Int& b = row.x.den();
  if (row.x.sign() <= 0 || row.x >= Rat(1)) throw std::domain_error("analytic route needs 0 < x < 1");
  const bool both_odd = mpz_odd_p(a.get_mpz_t()) && mpz_odd_p(b.get_mpz_t());
  const Int c_exp = both_odd ? Int((row.n + 1) / 2) : Int(0);
  const unsigned nbits = bitlen(row.n) + bitlen(c_exp);
  for (unsigned bits = 128; bits <= 8192; bits *= 2) {
    const unsigned wb = bits + nbits + 8;
    const Enclosure theta = Rat(row.n) * atan_at_bits(row.x, wb + bitlen(row.n)) - Rat(1, 4) * pi_at_bits(wb);
    if (theta.contains(Rat())) continue;
    if (!theta.inside_open(Rat(-1), Rat(1))) throw std::domain_error("analytic route needs |n atan(x) - pi/4| < 1");
    const Enclosure abs_theta = theta.is_positive() ? theta : -theta;
    const Enclosure ln2 = ln_at_bits(Rat(2), wb);
    const Enclosure ln10 = ln_at_bits(Rat(10), wb);
    const Enclosure common = Rat(1, 2) * ln2 + Rat(row.n, Int(2)) * ln_at_bits(Rat(Int(a * a + b * b)), wb) -
                             Rat(c_exp) * ln2;
    const Enclosure ln_sin = ln_of(sin_of(abs_theta, wb), wb);
    const Enclosure ln_cos = ln_of(cos_of(abs_theta, wb), wb);
    const auto da = digits_from_log((common + ln_sin) / ln10);
    const auto db = digits_from_log((common + ln_cos) / ln10);
    if (!da || !db) continue;
    row.a2_digits = *da;
    row.b2_digits = *db;
    const double tan_abs = tan_of(abs_theta, wb).mid_double();
    row.a2b2_approx = theta.is_positive() ? tan_abs : -tan_abs;
    const double l1 = log10_abs(b) - log10_abs(a);
    const double l2 = -((ln_sin - ln_cos) / ln10).mid_double();
    row.measure = 1.0 / l1 + 1.0 / l2;
    // |t| < 1 < pi/2 keeps atan(tan t) = t, which is the whole identity.
    row.certified = true;
    row.analytic = true;
    return;
  }
  throw std::runtime_error("analytic route could not certify digit counts");
}

double predicted_digits(const Int& n, const Rat& x) {
  const double l = std::log10(std::hypot(x.num().get_d(), x.den().get_d()));
  return n.get_d() * l;
}

GeneratedRow build_row(const Int& n, const Rat& x, Strategy strategy, const RowOptions& opt) {
  GeneratedRow row;
  row.n = n;
  row.x = x;
  if (predicted_digits(n, x) > static_cast<double>(opt.max_exact_digits)) {
    fill_analytic(row);
    return row;
  }
  const RjValue r = eval_R(3, n.get_ui(), x, strategy);
  if (r.pole) throw std::domain_error("R_3 has a pole at " + x.str());
  fill_exact(row, r.value, opt);
  return row;
}

}  // namespace

std::vector<Convergent> convergents_of(const Enclosure& x, std::size_t count) {
  std::vector<Convergent> out;
  Rat lo = x.lo(), hi = x.hi();
  const bool exact = lo == hi;
  Int p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  for (std::size_t k = 0; out.size() < count; ++k) {
    const Int c = floor(lo);
    if (c != floor(hi)) {
      throw InsufficientPrecision("partial quotient " + std::to_string(k) + " is ambiguous", k);
    }
    const Int p = c * p_prev + p_prev2, q = c * q_prev + q_prev2;
    p_prev2 = p_prev, q_prev2 = q_prev, p_prev = p, q_prev = q;
    const Rat conv(p, q);
    const Rat bound = Rat(Int(1), q * q);
    if ((x.lo() - conv).abs() > bound || (x.hi() - conv).abs() > bound)
      throw InsufficientPrecision("convergent " + std::to_string(k) + " fails the 1/q^2 check", k);
    if (p != 0) out.push_back({p, q, k});
    const Rat flo = lo - Rat(c), fhi = hi - Rat(c);
    if (exact && flo.is_zero()) break;
    if (flo.is_zero() || fhi.is_zero())
      throw InsufficientPrecision("partial quotient " + std::to_string(k + 1) + " is ambiguous", k + 1);
    lo = fhi.reciprocal();
    hi = flo.reciprocal();
  }
  return out;
}

std::vector<Convergent> pi_convergents(const Rat& factor, std::size_t count) {
  for (std::size_t digits = 64; digits <= 65536; digits *= 4) {
    try {
      return convergents_of(factor * pi_enclosure(digits), count);
    } catch (const InsufficientPrecision&) {
    }
  }
  throw std::runtime_error("precision ladder exhausted for pi convergents");
}

GeneratedRow two_term_row(const Int& n, const Rat& x, const RowOptions& opt) {
  return build_row(n, x, Strategy::binpow, opt);
}

GeneratedRow theorem3_formula(std::size_t k, const RowOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const Convergent c = pi_convergents(Rat(1), k + 1).at(k);
  GeneratedRow row = build_row(c.p, Rat(Int(1), 4 * c.q), Strategy::binpow, opt);
  row.index = k;
  row.conv_index = k;
  row.conv = c;
  return row;
}

GeneratedRow pow2_formula(std::size_t m, std::size_t conv_index, const RowOptions& opt) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (conv_index < 1) throw std::invalid_argument("convergent index is 1-based");
  const Int scale = int_pow(2, m + 2);
  const auto cs = pi_convergents(Rat(Int(1), scale), conv_index);
  if (cs.size() < conv_index) throw std::domain_error("pi / 2^(m+2) has too few convergents");
  const Convergent c = cs[conv_index - 1];
  GeneratedRow row = build_row(int_pow(2, m), c.value(), Strategy::pow2chain, opt);
  row.index = m;
  row.conv_index = conv_index;
  row.conv = c;
  return row;
}

std::vector<GeneratedRow> search_two_term(int j, int i, unsigned long n, unsigned long m, const Rat& eps,
                                          const SearchGrid& grid) {
  std::vector<GeneratedRow> out;
  if (eps.sign() <= 0 || grid.step.sign() <= 0 || grid.hi < grid.lo) return out;

  auto value = [](int jj, unsigned long nn, const Rat& x) -> std::optional<Rat> {
    const RjValue r = eval_R(jj, nn, x);
    if (r.pole) return std::nullopt;
    return r.value;
  };
  auto small = [&](const Rat& x) {
    const auto u = value(j, n, x), v = value(i, m, x);
    return u && v && u->abs() < eps && v->abs() < eps;
  };
  // Bisection on a sign change of R, rejected if it converges onto a pole.
  auto refine = [&](int jj, unsigned long nn, Rat a, Rat b) -> std::optional<Rat> {
    auto fa = value(jj, nn, a), fb = value(jj, nn, b);
    if (!fa || !fb || fa->sign() * fb->sign() > 0) return std::nullopt;
    for (int it = 0; it < 120; ++it) {
      const Rat mid = (a + b) / Rat(2);
      const auto fm = value(jj, nn, mid);
      if (!fm) return std::nullopt;
      if (fm->is_zero()) return mid;
      if (fm->sign() == fa->sign())
        a = mid, fa = fm;
      else
        b = mid;
    }
    const Rat mid = (a + b) / Rat(2);
    const auto fm = value(jj, nn, mid);
    if (!fm || fm->abs() > eps) return std::nullopt;
    return mid;
  };

  std::set<std::string> seen;
  const Int L = lcm(Int(n), Int(m));
  for (Rat x = grid.lo; x <= grid.hi; x += grid.step) {
    if (!small(x)) continue;
    std::vector<Rat> roots;
    for (const auto& [jj, nn] : {std::pair{j, n}, std::pair{i, m}}) {
      if (auto r = refine(jj, nn, x - grid.step, x + grid.step)) roots.push_back(*r);
    }
    if (roots.empty()) roots.push_back(x);
    for (const Rat& root : roots) {
      for (const Convergent& c : convergents_of(Enclosure(root), 12)) {
        const Rat cx = c.value();
        if (!small(cx) || !seen.insert(cx.str()).second) continue;
        const std::vector<RjTerm> spec{{Rat(L), j, n}, {-Rat(L), i, m}};
        auto [f, rhs] = theorem2_eval(spec, cx);
        if (rhs.is_zero() || f.empty()) continue;
        GeneratedRow row;
        row.conv = c;
        row.x = cx;
        row.n = L / Int(n);
        const Rat& a2b2 = f.terms().size() == 2 ? (f.terms()[0].arg == cx ? f.terms()[1].arg : f.terms()[0].arg)
                                                : f.terms()[0].arg;
        row.a2_digits = decimal_digits(a2b2.num());
        row.b2_digits = decimal_digits(a2b2.den());
        row.a2b2_approx = a2b2.to_double();
        try {
          row.measure = lehmer_measure(f);
        } catch (const std::domain_error&) {
          continue;
        }
        row.certified = verify(f).valid();
        if (!row.certified) continue;
        row.formula = std::move(f);
        out.push_back(std::move(row));
      }
    }
  }
  return out;
}

std::string row_tsv_header() { return "k\tp/q\ta1/b1\ta2_digits\tb2_digits\ta2b2_approx\tmu"; }

std::string row_tsv(const GeneratedRow& row) {
  return std::to_string(row.index) + "\t" + row.conv.value().str() + "\t" + row.x.str() + "\t" +
         std::to_string(row.a2_digits) + "\t" + std::to_string(row.b2_digits) + "\t" + fmt6(row.a2b2_approx) +
         "\t" + fmt6(row.measure);
}

}  // namespace machin
