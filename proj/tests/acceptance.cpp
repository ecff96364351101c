// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "machin/catalog.hpp"
#include "machin/formula.hpp"
#include "machin/gauss.hpp"
#include "machin/generator.hpp"
#include "machin/golden.hpp"
#include "machin/pi_engine.hpp"
#include "machin/ratfun.hpp"

using namespace machin;

namespace {

constexpr double kMeasureTol = 1e-4;  // criterion 2
constexpr double kRowMuTol = 1e-5;    // criteria 3, 4, 6
constexpr double kGaussSeconds = 1.0;
constexpr double kTable1Seconds = 60.0;
constexpr double kTable2Seconds = 120.0;
constexpr double kBruteSeconds = 600.0;
constexpr double kPi1000Seconds = 30.0;
constexpr int kPropertyCases = 100;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failures; a criterion passes when none were recorded.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(9);
  os << v;
  return os.str();
}

// Printed value mantissa * 10^exp with as many decimals as the mantissa string has.
struct Printed {
  const char* mantissa;
  int exp;
  double value() const { return std::stod(mantissa) * std::pow(10.0, exp); }
  // Half a unit in the last printed place, relative to 10^exp.
  double half_ulp() const {
    const std::string m = mantissa;
    const auto dot = m.find('.');
    const int decimals = dot == std::string::npos ? 0 : static_cast<int>(m.size() - dot - 1);
    return 0.5 * std::pow(10.0, -decimals);
  }
  bool matches(double v) const { return std::fabs(v / std::pow(10.0, exp) - std::stod(mantissa)) <= half_ulp() + 1e-9; }
};

std::size_t ndigits(const Int& v) { return Int(abs(v)).get_str().size(); }

// ---------------------------------------------------------------- 1
void gaussian_products(Check& c) {
  auto t0 = Clock::now();
  const GaussInt lhs1 = pow(GaussInt{7, 1}, 5) * pow(GaussInt{79, 3}, 2);
  const Int s1 = int_pow(2, 3) * int_pow(5, 10);
  c.expect(lhs1 == GaussInt{s1, s1}, "(7+i)^5 (79+3i)^2");
  const double dt1 = since(t0);
  c.expect(dt1 < kGaussSeconds, "first product took " + fmt(dt1) + " s");

  t0 = Clock::now();
  const GaussInt lhs2 = pow(GaussInt{873121, 24478}, 22) * pow(GaussInt{69049993, 685601}, 17);
  const Int s2 = int_pow(2, 8) * int_pow(5, 374);
  c.expect(lhs2 == GaussInt{s2, s2}, "(873121+24478i)^22 (69049993+685601i)^17");
  const double dt2 = since(t0);
  c.expect(dt2 < kGaussSeconds, "second product took " + fmt(dt2) + " s");
  c.note("times " + fmt(dt1) + " s, " + fmt(dt2) + " s");
}

// ---------------------------------------------------------------- 2
void classical_measures(Check& c) {
  const std::vector<std::pair<const char*, double>> rows = {
      {"4*atan(1/5) - 1*atan(1/239) = 1/4 pi", 1.85113},
      {"1*atan(1/2) + 1*atan(1/3) = 1/4 pi", 5.41783},
      {"2*atan(1/2) - 1*atan(1/7) = 1/4 pi", 4.50522},
      {"2*atan(1/3) + 1*atan(1/7) = 1/4 pi", 3.2792},
      {"5*atan(1/7) + 2*atan(3/79) = 1/4 pi", 1.88727},
      {"22*atan(24478/873121) + 17*atan(685601/69049993) = 1/4 pi", 1.14343},
      {"22*atan(1/28) + 1*atan(1744507482180328366854565127/98646395734210062276153190241239) = 1/4 pi",
       0.901429},
  };
  for (const auto& [text, mu] : rows) {
    const MachinFormula f = parse_formula(text);
    c.expect(verify(f).valid(), std::string("does not verify: ") + text);
    const double got = lehmer_measure(f);
    c.expect(std::fabs(got - mu) < kMeasureTol, std::string(text) + " measure " + fmt(got) + " vs " + fmt(mu));
  }
}

// ---------------------------------------------------------------- 3
struct Table1Row {
  unsigned long p, q, b1;
  std::size_t r, s;
  Printed a2b2;
  double mu;
};

const Table1Row kTable1[] = {
    {22, 7, 28, 28, 32, {"1.76845", -5}, 0.901429},
    {333, 106, 424, 871, 876, {"2.22611", -5}, 0.59555},
    {355, 113, 452, 937, 943, {"1.21473", -6}, 0.545675},
    {103993, 33102, 132408, 532634, 532644, {"1.59405", -10}, 0.297306},
    {104348, 33215, 132860, 534606, 534617, {"-6.80756", -11}, 0.29354},
    {208341, 66317, 265268, 1129966, 1129977, {"3.43096", -11}, 0.279937},
    {312689, 99532, 398128, 1751055, 1751066, {"-5.63418", -12}, 0.267466},
    {833719, 265381, 1061524, 5023921, 5023933, {"2.4112", -12}, 0.252025},
    {1146408, 364913, 1459652, 7066733, 7066745, {"-2.79808", -13}, 0.241887},
    {4272943, 1360120, 5440480, 28780982, 28780995, {"1.09862", -13}, 0.22563},
    {5419351, 1725033, 6900132, 37062153, 37062169, {"-3.75733", -17}, 0.207106},
    {80143857, 25510582, 102042328, 641854533, 641854548, {"1.69914", -16}, 0.188275},
    {165707065, 52746197, 210984788, 1379387210, 1379387226, {"-3.51397", -17}, 0.180906},
    {245850922, 78256779, 313027116, 2088646642, 2088646658, {"2.22166", -17}, 0.177756},
    {411557987, 131002976, 524011904, 3588514476, 3588514494, {"-3.88753", -19}, 0.172125},
};

std::vector<GeneratedRow> g_table1;

void table1(Check& c) {
  const auto t0 = Clock::now();
  for (std::size_t k = 1; k <= 15; ++k) g_table1.push_back(theorem3_formula(k));
  const double dt = since(t0);
  c.expect(dt < kTable1Seconds, "table took " + fmt(dt) + " s");
  c.note("computed in " + fmt(dt) + " s");

  for (std::size_t k = 1; k <= 15; ++k) {
    const GeneratedRow& row = g_table1[k - 1];
    const Table1Row& want = kTable1[k - 1];
    const std::string tag = "k=" + std::to_string(k) + ": ";
    c.expect(row.certified, tag + "not certified");
    c.expect(row.conv.p == want.p && row.conv.q == want.q, tag + "p/q " + row.conv.value().str());
    c.expect(Int(4) * row.conv.q == want.b1 && row.x == Rat(Int(1), Int(want.b1)), tag + "a1/b1 " + row.x.str());
    c.expect(row.n == want.p, tag + "n");
    c.expect(row.a2_digits == want.r && row.b2_digits == want.s,
             tag + "digits " + std::to_string(row.a2_digits) + "/" + std::to_string(row.b2_digits));
    c.expect(std::fabs(row.measure - want.mu) < kRowMuTol, tag + "mu " + fmt(row.measure));

    // The printed column is -R_3(n, x).
    const double printed_side = -row.a2b2_approx;
    if (want.a2b2.matches(printed_side)) continue;
    if (k == 15) {
      // Printed mantissa is right but one decade low. The printed measure
      // alone pins |a2/b2|: mu = 1/log10(b1) + 1/log10|b2/a2|.
      const double implied = std::pow(10.0, -1.0 / (want.mu - 1.0 / std::log10(static_cast<double>(want.b1))));
      const Printed shifted{want.a2b2.mantissa, want.a2b2.exp + 1};
      const bool consistent = shifted.matches(printed_side) &&
                              std::fabs(implied / std::fabs(printed_side) - 1.0) < 0.01 &&
                              std::fabs(implied / std::fabs(want.a2b2.value()) - 10.0) < 0.1;
      c.expect(consistent, tag + "a2/b2 " + fmt(printed_side));
      c.note("k=15 erratum: printed a2/b2 -3.88753e-19; printed mu 0.172125 implies |a2/b2| = " + fmt(implied) +
             "; computed " + fmt(printed_side));
      continue;
    }
    c.expect(false, tag + "a2/b2 " + fmt(printed_side) + " vs " + want.a2b2.mantissa + "e" +
                        std::to_string(want.a2b2.exp));
  }
}

// ---------------------------------------------------------------- 4
struct Table2Row {
  std::size_t m;
  const char* x;
  std::size_t r, s;
  Printed a2b2;
  double mu;
};

const Table2Row kTable2[] = {
    {5, "1/40", 50, 52, {"0.014436", 0}, 1.16751},
    {5, "1/41", 45, 47, {"-0.00506511", 0}, 1.0557},
    {5, "3/122", 65, 67, {"0.00132854", 0}, 0.969041},
    {6, "1/81", 111, 113, {"0.00468519", 0}, 0.953294},
    {6, "2/163", 138, 142, {"-0.000161494", 0}, 0.786967},
    {6, "39/3178", 220, 225, {"-0.0000379642", 0}, 0.749474},
    {7, "1/162", 281, 283, {"0.00471529", 0}, 0.88242},
    {7, "1/163", 261, 265, {"-0.000131942", 0}, 0.709799},
    {7, "39/6356", 482, 487, {"-8.39746", -6}, 0.649066},
    {8, "1/325", 603, 605, {"0.00229166", 0}, 0.776917},
    {8, "1/326", 640, 644, {"-0.000124553", 0}, 0.654001},
    {8, "19/6193", 927, 933, {"2.24663", -6}, 0.574947},
    {9, "1/651", 1361, 1364, {"0.00108355", 0}, 0.69267},
    {9, "1/652", 1438, 1442, {"-0.000122706", 0}, 0.611015},
    {9, "9/5867", 1848, 1853, {"0.0000111404", 0}, 0.557238},
    {10, "1/1303", 3033, 3036, {"0.000480424", 0}, 0.622385},
    {10, "1/1304", 3187, 3191, {"0.000122244", 0}, 0.576572},
    {10, "4/5215", 3803, 3807, {"0.0000283365", 0}, 0.540901},
    {20, "1/1335088", 6423057, 6423063, {"2.52287", -7}, 0.31481},
    {20, "2/2670177", 6738709, 6738716, {"-4.18498", -8}, 0.298784},
    {20, "7/9345619", 7151377, 7151387, {"1.6974", -10}, 0.265604},
    {21, "1/2670176", 13477425, 13477432, {"2.52287", -7}, 0.307163},
    {21, "1/2670177", 13161772, 13161779, {"-4.18497", -8}, 0.291137},
    {21, "7/18691238", 15249721, 15249731, {"1.69851", -10}, 0.25796},
    {24, "1/21361414", 122970779, 122970786, {"3.16846", -8}, 0.269781},
    {24, "1/21361415", 120445556, 120445564, {"-5.08256", -9}, 0.257003},
    {24, "7/149529904", 137149169, 137149179, {"1.69887", -10}, 0.238788},
    {25, "1/42722829", 250992010, 250992018, {"1.3301", -8}, 0.258016},
    {25, "1/42722830", 256042455, 256042463, {"-5.08256", -9}, 0.251621},
    {25, "3/128168489", 267001542, 267001550, {"1.0453", -9}, 0.242399},
    {26, "1/85445659", 522185807, 522185816, {"4.10922", -9}, 0.245319},
    {26, "2/170891319", 552488478, 552488488, {"-4.86669", -10}, 0.233456},
    {26, "9/769010935", 586223936, 586223947, {"2.3986", -11}, 0.220238},
    {29, "1/683565275", 4662329259, 4662329268, {"6.62304", -10}, 0.222134},
    {29, "1/683565276", 4743136384, 4743136393, {"-4.86669", -10}, 0.220568},
    {29, "2/1367130551", 4904750631, 4904750641, {"8.78178", -11}, 0.212628},
    {30, "1/1367130551", 9647887023, 9647887033, {"8.78178", -11}, 0.208898},
    {30, "6/8202783307", 10645034813, 10645034824, {"-7.92992", -12}, 0.199544},
    {30, "7/9569913858", 10716918381, 10716918392, {"5.74833", -12}, 0.198424},
};

void table2(Check& c) {
  const auto t0 = Clock::now();
  std::vector<GeneratedRow> rows;
  for (std::size_t k = 0; k < std::size(kTable2); ++k) rows.push_back(pow2_formula(kTable2[k].m, k % 3 + 1));
  const double dt = since(t0);
  c.expect(dt < kTable2Seconds, "table took " + fmt(dt) + " s");
  c.note("computed " + std::to_string(rows.size()) + " rows in " + fmt(dt) + " s");

  for (std::size_t k = 0; k < rows.size(); ++k) {
    const GeneratedRow& row = rows[k];
    const Table2Row& want = kTable2[k];
    const std::string tag = "m=" + std::to_string(want.m) + " x=" + want.x + ": ";
    c.expect(row.certified, tag + "not certified");
    c.expect(row.n == int_pow(2, want.m), tag + "n");
    c.expect(row.x == Rat::parse(want.x), tag + "x " + row.x.str());
    c.expect(row.a2_digits == want.r && row.b2_digits == want.s,
             tag + "digits " + std::to_string(row.a2_digits) + "/" + std::to_string(row.b2_digits));
    c.expect(std::fabs(row.measure - want.mu) < kRowMuTol, tag + "mu " + fmt(row.measure));
    if (want.a2b2.matches(row.a2b2_approx)) continue;
    // Magnitude must still agree; the one printed sign slip is reported.
    const Printed magnitude{want.a2b2.mantissa[0] == '-' ? want.a2b2.mantissa + 1 : want.a2b2.mantissa, want.a2b2.exp};
    const bool sign_slip = want.m == 10 && k % 3 == 1;
    c.expect(sign_slip && magnitude.matches(std::fabs(row.a2b2_approx)),
             tag + "a2/b2 " + fmt(row.a2b2_approx) + " vs " + want.a2b2.mantissa);
    if (sign_slip) c.note("m=10 x=1/1304 erratum: printed +0.000122244, computed " + fmt(row.a2b2_approx));
  }
}

// ---------------------------------------------------------------- 5
void classification(Check& c) {
  const auto t0 = Clock::now();
  const BruteForceReport rep = brute_force_theorem1();
  const double dt = since(t0);
  c.expect(dt < kBruteSeconds, "search took " + fmt(dt) + " s");

  const std::set<PowerTwoSolution> listed = {
      {-1, Rat(1, 239), 4, Rat(1, 5)},         {-1, Rat(1, 7), 2, Rat(1, 2)},
      {-1, Rat(2, 11), Rat(3, 2), Rat(3, 4)},  {-1, Rat(2, 11), 3, Rat(1, 3)},
      {Rat(1, 3), Rat(1, 239), Rat(4, 3), Rat(2, 3)}, {Rat(1, 2), Rat(2, 11), Rat(3, 2), Rat(1, 2)},
      {1, Rat(1, 41), 2, Rat(2, 5)},           {1, Rat(1, 7), 2, Rat(1, 3)},
      {1, Rat(1, 2), Rat(1, 2), Rat(3, 4)},    {3, Rat(1, 7), 2, Rat(2, 11)},
  };
  const auto built = sporadic_solutions();
  c.expect(rep.sporadic == listed, "search found " + std::to_string(rep.sporadic.size()) + " sporadic solutions");
  c.expect(std::set<PowerTwoSolution>(built.begin(), built.end()) == listed, "sporadic_solutions() differs");
  c.expect(rep.valid_with_d_3_or_6 == 0, "d in {3, 6} produced a valid identity");
  for (const auto& s : rep.family) c.expect(in_parametric_family(s), "family hit outside both families: " + s.str());
  for (unsigned a = 1; a <= 16; ++a)
    for (int which : {1, 2})
      c.expect(verify(parametric_family(which, a).formula()).valid(),
               "family " + std::to_string(which) + " a=" + std::to_string(a));
  c.note(std::to_string(rep.candidates) + " candidates, " + std::to_string(rep.valid) + " valid, " +
         std::to_string(rep.family.size()) + " family hits, " + fmt(dt) + " s");
}

// ---------------------------------------------------------------- 6
void new_identities(Check& c) {
  struct Want {
    long n;
    Rat x;
    std::size_t r, s;
    double mu;
  };
  for (const Want& w : {Want{33, Rat(1, 42), 50, 54, 0.880916}, Want{48, Rat(9, 550), 127, 132, 0.765513}}) {
    const GeneratedRow row = two_term_row(Int(w.n), w.x);
    const std::string tag = std::to_string(w.n) + " atan(" + w.x.str() + "): ";
    c.expect(row.formula.has_value() && verify(*row.formula).valid(), tag + "does not verify");
    c.expect(row.a2_digits == w.r && row.b2_digits == w.s,
             tag + "digits " + std::to_string(row.a2_digits) + "/" + std::to_string(row.b2_digits));
    c.expect(std::fabs(row.measure - w.mu) < kRowMuTol, tag + "mu " + fmt(row.measure));
  }
}

// ---------------------------------------------------------------- 7
void golden(Check& c) {
  const std::vector<GoldenQuadruple> listed = {
      {Rat(1, 3), Rat(1, 3), 3, 1},   {1, 1, -3, -1},   {-1, 1, -3, 1},          {1, -1, 3, -1},
      {Rat(1, 5), Rat(2, 5), 6, 2},   {1, 2, -6, -2},   {Rat(-1, 3), Rat(2, 3), -6, 2}, {1, -2, 6, -2},
      {Rat(1, 7), Rat(3, 7), 5, 3},   {1, 3, -5, -3},   {Rat(-1, 5), Rat(3, 5), -5, 3}, {1, -3, 5, -3},
      {Rat(-1, 2), Rat(3, 2), 5, 1},  {Rat(-1, 2), Rat(3, 2), -5, -1}, {Rat(1, 4), Rat(3, 4), -5, 1},
      {Rat(1, 4), Rat(3, 4), 5, -1},
  };
  for (const auto& q : listed) c.expect(verify_golden(q), "does not verify: " + q.str());
  const auto built = sixteen_quadruples();
  c.expect(built.size() == 16, "sixteen_quadruples() size");
  for (const auto& q : listed)
    c.expect(std::find(built.begin(), built.end(), q) != built.end(), "missing from sixteen_quadruples(): " + q.str());

  const std::vector<std::pair<long, long>> pairs = {{3, 1}, {5, 1}, {5, 3}, {6, 2}};
  c.expect(golden_search(12) == pairs, "golden_search(12)");

  // Norm of 1 + i phi^k is 5 F_k^2 for odd k and L_k^2 for even k.
  Int f0 = 0, f1 = 1, l0 = 2, l1 = 1;
  for (long k = 1; k <= 30; ++k) {
    const Int want = k % 2 == 1 ? Int(5 * f1 * f1) : Int(l1 * l1);
    c.expect(golden_norm(k) == want, "golden_norm(" + std::to_string(k) + ")");
    const Int f2 = f0 + f1, l2 = l0 + l1;
    f0 = f1, f1 = f2, l0 = l1, l1 = l2;
  }
}

// ---------------------------------------------------------------- 8
// Correctly rounded; the carry reaches back to the 99th decimal.
const char* kPi100 =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862089986280348253421170680";

void pi_digits(Check& c) {
  const MachinFormula machin = parse_formula("4*atan(1/5) - 1*atan(1/239) = 1/4 pi");
  const MachinFormula gi = parse_formula("5*atan(1/7) + 2*atan(3/79) = 1/4 pi");
  const MachinFormula k4 = *theorem3_formula(4).formula;
  const std::string a = compute_pi(machin, 100), b = compute_pi(gi, 100);
  auto t0 = Clock::now();
  const std::string d = compute_pi(k4, 100);
  c.note("k=4 formula at 100 digits in " + fmt(since(t0)) + " s");
  c.expect(a == kPi100, "Machin digits");
  c.expect(b == a, "5 atan(1/7) + 2 atan(3/79) digits");
  c.expect(d == a, "k=4 formula digits");

  t0 = Clock::now();
  const std::string big = compute_pi(machin, 1000);
  const double dt = since(t0);
  c.expect(big.size() == 1002 && big.compare(0, 100, kPi100, 100) == 0, "1000 digits prefix");
  c.expect(dt < kPi1000Seconds, "1000 digits took " + fmt(dt) + " s");
  c.note("1000 digits in " + fmt(dt) + " s");
}

// ---------------------------------------------------------------- 9
Rat random_x(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
  return Rat(Int(num(rng)), Int(den(rng)));
}

// tan(theta + j pi/4) stepped by the addition law, kept as s / c so poles pass through.
RjValue recurrence_oracle(int j, unsigned long n, const Rat& x) {
  Rat s = j == 0 ? 0 : (j == 3 ? -1 : 1), cc = j == 2 ? 0 : 1;
  for (unsigned long k = 0; k < n; ++k) {
    const Rat s2 = s + x * cc, c2 = cc - x * s;
    s = s2, cc = c2;
  }
  return cc.is_zero() ? RjValue::infinity() : RjValue::finite(s / cc);
}

RjValue neg(const RjValue& v) { return v.pole ? v : RjValue::finite(-v.value); }
// tan(t + pi/2) = -1 / tan(t)
RjValue neg_inv(const RjValue& v) {
  if (v.pole) return RjValue::finite(Rat());
  if (v.value.is_zero()) return RjValue::infinity();
  return RjValue::finite(Rat(-1) / v.value);
}

void properties(Check& c) {
  std::mt19937_64 rng(20240607);
  int agree = 0, laws = 0, comp = 0, rec = 0;
  for (int t = 0; t < 4 * kPropertyCases; ++t) {
    const int j = static_cast<int>(rng() % 4);
    const unsigned long n = rng() % 65;
    const Rat x = random_x(rng);
    const RjValue want = recurrence_oracle(j, n, x);
    c.expect(eval_R(j, n, x, Strategy::poly) == want, "poly strategy");
    c.expect(eval_R(j, n, x, Strategy::binpow) == want, "binpow strategy");
    const unsigned long p2 = 1UL << (rng() % 7);
    c.expect(eval_R(j, p2, x, Strategy::pow2chain) == recurrence_oracle(j, p2, x), "pow2chain strategy");
    ++agree;
  }
  for (int t = 0; t < 2 * kPropertyCases; ++t) {
    const int j = static_cast<int>(rng() % 4);
    const unsigned long n = 1 + rng() % 40;
    Rat x = random_x(rng);
    if (x.is_zero()) x = Rat(2, 7);
    const RjValue r = eval_R(j, n, x);
    // Shift by pi/2, reflection x -> -x, inversion x -> 1/x.
    c.expect(eval_R((j + 2) % 4, n, x) == neg_inv(r), "R_{j+2} = -1/R_j");
    c.expect(eval_R(j, n, -x) == neg(eval_R((4 - j) % 4, n, x)), "reflection law");
    c.expect(eval_R(j, n, x.reciprocal()) == neg(eval_R(static_cast<int>((8 - j - 2 * (n % 2)) % 4), n, x)),
             "inversion law");
    ++laws;
  }
  while (comp < 2 * kPropertyCases) {
    const int i = static_cast<int>(rng() % 4), j = static_cast<int>(rng() % 4);
    const unsigned long n = 1 + rng() % 12, m = 1 + rng() % 12;
    const Rat x = random_x(rng);
    const RjValue inner = eval_R(i, m, x);
    if (inner.pole) continue;
    c.expect(eval_R(j, n, inner.value) == eval_R(static_cast<int>((i * n + j) % 4), n * m, x), "composition law");
    ++comp;
  }
  for (int t = 0; t < 2 * kPropertyCases; ++t) {
    const int j = static_cast<int>(rng() % 4);
    const unsigned long n = rng() % 40;
    const Rat x = random_x(rng);
    const RjValue cur = eval_R(j, n, x);
    RjValue next;
    if (cur.pole) {
      next = x.is_zero() ? RjValue::infinity() : RjValue::finite(Rat(-1) / x);
    } else {
      const Rat d = Rat(1) - x * cur.value;
      next = d.is_zero() ? RjValue::infinity() : RjValue::finite((cur.value + x) / d);
    }
    c.expect(eval_R(j, n + 1, x) == next, "recurrence law");
    ++rec;
  }

  // Fibonacci: (F_{n+1} + F_n i)(F_{n+2} + F_{n-1} i) has equal parts.
  int fib = 0;
  for (int t = 0; t < kPropertyCases; ++t) {
    const unsigned n = 1 + static_cast<unsigned>(rng() % 20);
    Int a = 0, b = 1;
    std::vector<Int> seq{a};
    for (unsigned k = 0; k <= n + 2; ++k) {
      seq.push_back(b);
      const Int s = a + b;
      a = b, b = s;
    }
    c.expect(fibonacci(n) == seq[n], "fibonacci(" + std::to_string(n) + ")");
    const GaussInt z = GaussInt{seq[n + 1], seq[n]} * GaussInt{seq[n + 2], seq[n - 1]};
    c.expect(z.re == z.im && z.re > 0, "fibonacci product " + std::to_string(n));
    c.expect(verify(fibonacci_formula(n)).valid(), "fibonacci_formula(" + std::to_string(n) + ")");
    ++fib;
  }

  // normalize / split keep catalog identities valid.
  const auto cat = catalog_all();
  int ns = 0;
  while (ns < kPropertyCases) {
    const auto& e = cat[rng() % cat.size()];
    const MachinFormula nf = normalize_args(e.formula);
    const std::size_t k = rng() % nf.size();
    if (ndigits(nf.terms()[k].arg.num()) > 60) continue;
    c.expect(verify(nf).valid(), "normalize_args " + e.name);
    c.expect(verify(split_term(nf, k)).valid(), "split_term " + e.name + " #" + std::to_string(k));
    ++ns;
  }
  c.note(std::to_string(agree) + " strategy, " + std::to_string(laws) + " law, " + std::to_string(comp) +
         " composition, " + std::to_string(rec) + " recurrence, " + std::to_string(fib) + " fibonacci, " +
         std::to_string(ns) + " normalize/split cases");
}

// ---------------------------------------------------------------- 10
void small_measure(Check& c) {
  if (g_table1.size() < 15) {
    for (std::size_t k = g_table1.size() + 1; k <= 15; ++k) g_table1.push_back(theorem3_formula(k));
  }
  c.expect(g_table1[14].measure < 0.18, "mu(k=15) = " + fmt(g_table1[14].measure));
  for (std::size_t k = 5; k <= 15; ++k)
    c.expect(g_table1[k - 1].measure < 0.5, "mu(k=" + std::to_string(k) + ") = " + fmt(g_table1[k - 1].measure));
  c.note("mu(k=15) = " + fmt(g_table1[14].measure));
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Check&)>>> criteria = {
      {"exact Gaussian products", gaussian_products},
      {"classical Lehmer measures", classical_measures},
      {"convergent table k = 1..15", table1},
      {"power-of-two table", table2},
      {"two-term classification", classification},
      {"two new identities", new_identities},
      {"golden-section identities", golden},
      {"pi digits agree across formulas", pi_digits},
      {"property suites", properties},
      {"arbitrarily small measure", small_measure},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    try {
      criteria[k].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += !ok;
    std::cout << "criterion " << k + 1 << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[k].first << '\n';
    for (const auto& n : c.notes) std::cout << "    " << n << '\n';
    const std::size_t shown = std::min<std::size_t>(c.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) std::cout << "    failed: " << c.failures[i] << '\n';
    if (c.failures.size() > shown) std::cout << "    ... " << c.failures.size() - shown << " more\n";
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
  return failed == 0 ? 0 : 1;
}
