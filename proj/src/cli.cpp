#include "machin/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "machin/catalog.hpp"
#include "machin/formula.hpp"
#include "machin/generator.hpp"
#include "machin/golden.hpp"
#include "machin/pi_engine.hpp"
#include "machin/ratfun.hpp"

namespace machin {

namespace {

std::string fmt_g(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  return buf;
}

struct Options {
  std::string formula;
  std::string output;
  int precision = 6;
  std::size_t index = 0;
  std::size_t k_min = 1, k_max = 15;
  std::vector<std::size_t> m_list{5, 6, 7, 8, 9, 10, 20, 21, 24, 25, 26, 29, 30};
  std::size_t conv = 3;
  std::size_t max_exact_digits = 40'000'000;
  int j = 0, i = 3;
  unsigned long n = 1, m = 1;
  std::string eps = "1/30", range, step = "1/1000";
  bool list = false, brute = false;
  bool table = false, search = false;
  long max_k = 12;
  std::string quadruple;
  std::size_t digits = 100;
  bool bench = false;
  std::string x, strategy = "binpow";
};

class InvalidFormula : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MachinFormula formula_arg(const Options& o) {
  try {
    return parse_formula(o.formula);
  } catch (const std::exception& e) {
    throw InvalidFormula(e.what());
  }
}

std::pair<Rat, Rat> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--range", "expected LO:HI");
  return {Rat::parse(text.substr(0, colon)), Rat::parse(text.substr(colon + 1))};
}

void print_rows(std::ostream& os, const std::vector<GeneratedRow>& rows, int precision) {
  os << row_tsv_header() << "\n";
  for (const auto& r : rows) {
    if (precision == 6) {
      os << row_tsv(r) << "\n";
    } else {
      os << r.index << "\t" << r.conv.value() << "\t" << r.x << "\t" << r.a2_digits << "\t" << r.b2_digits << "\t"
         << fmt_g(r.a2b2_approx, precision) << "\t" << fmt_g(r.measure, precision) << "\n";
    }
  }
}

int dispatch(const std::string& cmd, const Options& o, std::ostream& os) {
  if (cmd == "verify") {
    const VerificationReport rep = verify(formula_arg(o));
    os << rep.record();
    if (!rep.reason.empty()) os << " reason=" << '"' << rep.reason << '"';
    os << "\n";
    return rep.valid() ? 0 : 1;
  }
  if (cmd == "measure") {
    os << fmt_g(lehmer_measure(formula_arg(o)), o.precision) << "\n";
    return 0;
  }
  if (cmd == "normalize") {
    os << normalize_args(formula_arg(o)) << "\n";
    return 0;
  }
  if (cmd == "split") {
    os << split_term(formula_arg(o), o.index) << "\n";
    return 0;
  }
  if (cmd == "table1" || cmd == "table2") {
    RowOptions ro;
    ro.max_exact_digits = o.max_exact_digits;
    std::vector<GeneratedRow> rows;
    if (cmd == "table1") {
      for (std::size_t k = o.k_min; k <= o.k_max; ++k) rows.push_back(theorem3_formula(k, ro));
    } else {
      for (std::size_t m : o.m_list)
        for (std::size_t c = 1; c <= o.conv; ++c) rows.push_back(pow2_formula(m, c, ro));
    }
    print_rows(os, rows, o.precision);
    return 0;
  }
  if (cmd == "search") {
    const auto [lo, hi] = parse_range(o.range);
    const auto rows = search_two_term(o.j, o.i, o.n, o.m, Rat::parse(o.eps), {lo, hi, Rat::parse(o.step)});
    os << "x\tformula\ta2_digits\tb2_digits\tmu\n";
    for (const auto& r : rows)
      os << r.x << "\t" << *r.formula << "\t" << r.a2_digits << "\t" << r.b2_digits << "\t"
         << fmt_g(r.measure, o.precision) << "\n";
    return 0;
  }
  if (cmd == "catalog") {
    if (o.brute) {
      const BruteForceReport rep = brute_force_theorem1();
      os << "# candidates=" << rep.candidates << " valid=" << rep.valid
         << " valid_d3_d6=" << rep.valid_with_d_3_or_6 << "\n";
      for (const auto& s : rep.sporadic) os << "sporadic\t" << s.str() << "\n";
      for (const auto& s : rep.family) os << "family\t" << s.str() << "\n";
      return 0;
    }
    for (const auto& e : catalog_all()) {
      std::string mu = "-";
      try {
        mu = fmt_g(lehmer_measure(e.formula), o.precision);
      } catch (const std::domain_error&) {
      }
      os << e.name << "\t" << e.formula << "\t" << mu << "\n";
    }
    return 0;
  }
  if (cmd == "golden") {
    if (!o.quadruple.empty()) {
      const GoldenReport rep = check_golden(GoldenQuadruple::parse(o.quadruple));
      os << "valid=" << (rep.valid() ? "true" : "false") << " algebraic=" << (rep.algebraic ? "true" : "false")
         << " branch=" << (rep.branch ? "true" : "false") << "\n";
      return rep.valid() ? 0 : 1;
    }
    if (o.search) {
      for (const auto& [k, l] : golden_search(o.max_k)) os << k << "\t" << l << "\n";
      return 0;
    }
    for (const auto& q : sixteen_quadruples()) os << q.str() << "\t" << (verify_golden(q) ? "valid" : "invalid") << "\n";
    return 0;
  }
  if (cmd == "pi") {
    const MachinFormula f = formula_arg(o);
    if (o.bench) {
      os << "formula\tterms\ttotal_terms\tseconds\n";
      for (const auto& row : benchmark({normalize_args(f)}, o.digits)) {
        std::string terms;
        for (std::size_t t : row.terms) terms += (terms.empty() ? "" : ",") + std::to_string(t);
        os << row.formula << "\t" << terms << "\t" << row.total_terms << "\t" << fmt_g(row.seconds, 3) << "\n";
      }
      return 0;
    }
    if (!verify(f).valid()) throw InvalidFormula("formula does not verify: " + f.str());
    os << compute_pi(f, o.digits) << "\n";
    return 0;
  }
  if (cmd == "rj") {
    const Strategy s = parse_strategy(o.strategy);
    if (!o.x.empty()) {
      const RjValue v = eval_R(o.j, o.n, Rat::parse(o.x), s);
      os << (v.pole ? std::string("inf") : v.value.str()) << "\n";
      return 0;
    }
    const auto [num, den] = rj_display(o.j, static_cast<unsigned>(o.n));
    os << num << "\t" << den << "\n";
    return 0;
  }
  throw CLI::CallForHelp();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Machin-like arctangent identities: verification, generation, pi digits"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  auto formula_cmd = [&](const std::string& name, const std::string& what) {
    CLI::App* c = app.add_subcommand(name, what);
    c->add_option("--formula", o.formula, "e.g. '4*atan(1/5) - 1*atan(1/239) = 1/4 pi'")->required();
    return c;
  };
  formula_cmd("verify", "exact Gaussian check plus branch enclosure");
  formula_cmd("measure", "Lehmer measure")->add_option("--precision", o.precision, "significant digits");
  formula_cmd("normalize", "move arguments into (-1, 1)");
  formula_cmd("split", "split one arctangent into two")->add_option("--index", o.index, "term index")->required();

  CLI::App* t1 = app.add_subcommand("table1", "identities from convergents of pi");
  t1->add_option("--k-min", o.k_min)->check(CLI::PositiveNumber);
  t1->add_option("--k-max", o.k_max)->check(CLI::PositiveNumber);
  CLI::App* t2 = app.add_subcommand("table2", "identities with n = 2^m");
  t2->add_option("--m-list", o.m_list)->delimiter(',');
  t2->add_option("--conv", o.conv, "convergents per m")->check(CLI::PositiveNumber);
  for (CLI::App* t : {t1, t2}) {
    t->add_option("--max-exact-digits", o.max_exact_digits);
    t->add_option("--precision", o.precision);
  }

  CLI::App* se = app.add_subcommand("search", "two-term search over R_j(n, x), R_i(m, x)");
  se->add_option("--j", o.j)->required()->check(CLI::Range(0, 3));
  se->add_option("--i", o.i)->required()->check(CLI::Range(0, 3));
  se->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  se->add_option("--m", o.m)->required()->check(CLI::PositiveNumber);
  se->add_option("--eps", o.eps);
  se->add_option("--range", o.range, "LO:HI")->required();
  se->add_option("--step", o.step);
  se->add_option("--precision", o.precision);

  CLI::App* ca = app.add_subcommand("catalog", "built-in identities");
  auto* ca_list = ca->add_flag("--list", o.list);
  ca->add_flag("--brute-force", o.brute)->excludes(ca_list);
  ca->add_option("--precision", o.precision);

  CLI::App* go = app.add_subcommand("golden", "powers of the golden section");
  auto* go_table = go->add_flag("--table", o.table);
  auto* go_search = go->add_flag("--search", o.search)->excludes(go_table);
  go->add_option("--max-k", o.max_k)->check(CLI::Range(2L, 200L));
  go->add_option("--verify", o.quadruple, "'a b kappa ell'")->excludes(go_table)->excludes(go_search);

  CLI::App* pi = formula_cmd("pi", "decimal digits of pi");
  pi->add_option("--digits", o.digits)->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  pi->add_flag("--benchmark", o.bench);

  CLI::App* rj = app.add_subcommand("rj", "R_j(n, x) = tan(n atan(x) + j pi/4)");
  rj->add_option("--j", o.j)->required()->check(CLI::Range(0, 3));
  rj->add_option("--n", o.n)->required();
  rj->add_option("--x", o.x, "evaluate at this rational");
  rj->add_option("--strategy", o.strategy, "poly, binpow or pow2chain");

  app.add_option("--output", o.output, "write to FILE instead of standard output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  std::ostringstream buffer;
  int code = 0;
  try {
    code = dispatch(cmd, o, buffer);
  } catch (const InvalidFormula& e) {
    err << "invalid formula: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "cannot write " << o.output << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace machin
