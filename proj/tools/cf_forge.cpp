// cf_forge: evaluate, tabulate and verify the Student's t characteristic
// function, and derive CF ODEs from density ODEs.
//
//   cf_forge cf eval --nu 3 --t 1
//   cf_forge cf table --nu 3 --tmin 0 --tmax 5 --steps 6 [--with-oracle] [--out f.csv]
//   cf_forge cf check --suite all [--csv residuals.csv] [--seed 42]
//   cf_forge ode derive --preset student-t --nu 3
//   cf_forge ode derive --term "m=1: nu + x^2" --term "m=0: (nu+1)*x" --nu 3
//   cf_forge bessel eval --kind k --mu 0.5 --x 1
//
// Exit codes: 0 ok, 1 usage or parse error, 2 underflow/overflow, 3 I/O
// error, 4 failed invariant.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cfforge/checks.hpp"
#include "cfforge/number_format.hpp"
#include "cfforge/ode_transform.hpp"
#include "cfforge/oracle.hpp"
#include "cfforge/special_fn.hpp"
#include "cfforge/student_t.hpp"
#include "cfforge/term_syntax.hpp"

namespace {

using namespace cfforge;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRange = 2;
constexpr int kExitIo = 3;
constexpr int kExitCheckFailed = 4;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CF_FORGE_SEED"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("CF_FORGE_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Writes to `path`, or stdout for "" / "-". Returns false on I/O failure.
template <typename Writer>
bool write_output(const std::string& path, Writer&& writer) {
  if (path.empty() || path == "-") {
    writer(std::cout);
    std::cout.flush();
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) return false;
  writer(file);
  file.close();
  return !file.fail();
}

struct CfEvalArgs {
  double nu = 0.0;
  double t = 0.0;
};

int cmd_cf_eval(const CfEvalArgs& args) {
  const auto v = cf(DegreesOfFreedom(args.nu), args.t);
  std::cout << format_double(v.value.real());
  if (v.value.imag() != 0.0) std::cout << ' ' << format_double(v.value.imag());
  std::cout << "\nstatus: " << to_string(v.status) << '\n';
  return v.status == EvalStatus::Ok ? kExitOk : kExitRange;
}

struct CfTableArgs {
  double nu = 0.0;
  double tmin = 0.0;
  double tmax = 0.0;
  int steps = 0;
  std::string out;
  bool with_oracle = false;
};

int cmd_cf_table(const CfTableArgs& args) {
  if (!(args.tmin < args.tmax)) throw std::invalid_argument("--tmin must be less than --tmax");
  if (args.steps < 2) throw std::invalid_argument("--steps must be at least 2");
  const DegreesOfFreedom nu(args.nu);

  std::ostringstream text;
  text << (args.with_oracle ? "t,re,im,oracle_re,abs_err\n" : "t,re,im\n");
  for (int k = 0; k < args.steps; ++k) {
    const double t = k == args.steps - 1
                         ? args.tmax
                         : args.tmin + (args.tmax - args.tmin) * k / (args.steps - 1);
    const auto v = cf(nu, t).value;
    text << format_double(t) << ',' << format_double(v.real()) << ',' << format_double(v.imag());
    if (args.with_oracle) {
      const auto q = cf_by_quadrature(nu, t).value;
      text << ',' << format_double(q.real()) << ',' << format_double(std::abs(v - q));
    }
    text << '\n';
  }
  if (!write_output(args.out, [&](std::ostream& os) { os << text.str(); })) {
    std::cerr << "error: cannot write " << args.out << '\n';
    return kExitIo;
  }
  return kExitOk;
}

struct CfCheckArgs {
  std::string suite = "all";
  std::string csv;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 1'000'000;
  bool no_monte_carlo = false;
};

int cmd_cf_check(const CfCheckArgs& args) {
  const auto suite = parse_suite(args.suite);
  if (!suite) throw std::invalid_argument("unknown suite '" + args.suite + "'");
  SuiteOptions options;
  options.mc.rng_seed = resolve_seed(args.seed);
  options.mc.sample_count = args.samples;
  options.monte_carlo = !args.no_monte_carlo;

  const auto results = run_suite(*suite, options);
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name
              << ": measured " << format_double(r.measured)
              << (r.relation == Relation::AtMost ? " <= " : " >= ")
              << format_double(r.threshold) << '\n';
  }
  std::cout << (all_passed ? "all checks passed" : "some checks FAILED") << " (" << results.size()
            << " checks, seed " << options.mc.rng_seed << ")\n";

  if (!args.csv.empty()) {
    const bool ok = write_output(args.csv, [&](std::ostream& os) {
      os << "suite,check,measured,relation,threshold,passed,seed\n";
      for (const auto& r : results) {
        os << r.suite << ',' << csv_quote(r.name) << ',' << format_double(r.measured) << ','
           << (r.relation == Relation::AtMost ? "<=" : ">=") << ',' << format_double(r.threshold)
           << ',' << (r.passed ? "true" : "false") << ',' << options.mc.rng_seed << '\n';
      }
    });
    if (!ok) {
      std::cerr << "error: cannot write " << args.csv << '\n';
      return kExitIo;
    }
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

struct OdeDeriveArgs {
  std::vector<std::string> terms;
  std::string preset;
  std::string nu;
  std::string d1;
  std::string d2;
  std::optional<int> decay_order;
  bool json_only = false;
};

int cmd_ode_derive(const OdeDeriveArgs& args) {
  ParameterBindings bindings;
  if (!args.nu.empty()) bindings["nu"] = parse_rational(args.nu);
  if (!args.d1.empty()) bindings["d1"] = parse_rational(args.d1);
  if (!args.d2.empty()) bindings["d2"] = parse_rational(args.d2);

  PolyDiffOperator density_op(VariableTag::XSpace);
  if (args.preset == "student-t") {
    if (!bindings.contains("nu")) throw std::invalid_argument("--preset student-t needs --nu");
    density_op = student_t_density_operator(bindings.at("nu"));
  } else if (args.preset == "f-dist") {
    if (!bindings.contains("d1") || !bindings.contains("d2")) {
      throw std::invalid_argument("--preset f-dist needs --d1 and --d2");
    }
    density_op = f_density_operator(bindings.at("d1"), bindings.at("d2"));
  } else if (!args.preset.empty()) {
    throw std::invalid_argument("unknown preset '" + args.preset + "'");
  }
  if (!args.terms.empty()) {
    try {
      density_op += parse_operator(args.terms, bindings);
    } catch (const TermParseError& e) {
      std::cerr << "error: " << e.what() << '\n';
      for (const auto& term : args.terms) {
        try {
          parse_term(term, bindings);
        } catch (const TermParseError&) {
          std::cerr << "  " << term << "\n  " << std::string(e.position(), ' ') << "^\n";
          break;
        }
      }
      return kExitUsage;
    }
  }
  if (density_op.is_zero()) throw std::invalid_argument("no operator given (use --term or --preset)");

  const int decay = args.decay_order.value_or(density_op.degree());
  const auto transformed = fourier_transform_operator(density_op, decay);
  const auto canonical = canonicalize(transformed);
  if (args.json_only) {
    std::cout << to_json(canonical).dump() << '\n';
    return kExitOk;
  }
  std::cout << "density:     " << to_string(density_op) << '\n'
            << "transformed: " << to_string(transformed) << '\n'
            << "canonical:   " << to_string(canonical) << '\n'
            << "coefficients: " << to_json(canonical).dump() << '\n';
  return kExitOk;
}

struct BesselEvalArgs {
  std::string kind = "k";
  double mu = 0.0;
  double x = 0.0;
};

int cmd_bessel_eval(const BesselEvalArgs& args) {
  EvalResult r;
  if (args.kind == "k") {
    r = bessel_k(args.mu, args.x);
  } else if (args.kind == "i") {
    r = bessel_i(args.mu, args.x);
  } else {
    throw std::invalid_argument("--kind must be i or k");
  }
  std::cout << format_double(r.value) << "\nstatus: " << to_string(r.status) << '\n';
  return r.ok() ? kExitOk : kExitRange;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Student's t characteristic function: evaluation, derivation and verification"};
  app.require_subcommand(1);

  auto* cf_cmd = app.add_subcommand("cf", "characteristic function commands");
  cf_cmd->require_subcommand(1);

  CfEvalArgs eval_args;
  auto* eval = cf_cmd->add_subcommand("eval", "evaluate phi(t) in closed form");
  eval->add_option("--nu", eval_args.nu, "degrees of freedom (> 0)")->required();
  eval->add_option("--t", eval_args.t, "frequency")->required();

  CfTableArgs table_args;
  auto* table = cf_cmd->add_subcommand("table", "tabulate phi on a uniform grid as CSV");
  table->add_option("--nu", table_args.nu, "degrees of freedom (> 0)")->required();
  table->add_option("--tmin", table_args.tmin, "first t")->required();
  table->add_option("--tmax", table_args.tmax, "last t")->required();
  table->add_option("--steps", table_args.steps, "number of rows (>= 2)")->required();
  table->add_option("--out", table_args.out, "output CSV path (default stdout)");
  table->add_flag("--with-oracle", table_args.with_oracle, "add quadrature column and abs_err");

  CfCheckArgs check_args;
  auto* check = cf_cmd->add_subcommand("check", "run verification suites");
  check->add_option("--suite", check_args.suite, "bessel, cf, ode, recursion or all")
      ->check(CLI::IsMember({"bessel", "cf", "ode", "recursion", "all"}));
  check->add_option("--csv", check_args.csv, "write residuals as CSV");
  check->add_option("--seed", check_args.seed, "Monte Carlo seed (overrides CF_FORGE_SEED)");
  check->add_option("--samples", check_args.samples, "Monte Carlo sample count (>= 1000)");
  check->add_flag("--no-monte-carlo", check_args.no_monte_carlo, "skip Monte Carlo checks");

  auto* ode_cmd = app.add_subcommand("ode", "symbolic ODE commands");
  ode_cmd->require_subcommand(1);
  OdeDeriveArgs derive_args;
  auto* derive = ode_cmd->add_subcommand("derive", "derive the CF ODE from a density ODE");
  derive->add_option("--term", derive_args.terms, "density operator term, 'm=<order>: <poly in x>'");
  derive->add_option("--preset", derive_args.preset, "student-t or f-dist");
  derive->add_option("--nu", derive_args.nu, "exact rational nu, e.g. 3, 1/2, 0.25");
  derive->add_option("--d1", derive_args.d1, "exact rational d1 (F distribution)");
  derive->add_option("--d2", derive_args.d2, "exact rational d2 (F distribution)");
  derive->add_option("--decay-order", derive_args.decay_order,
                     "certified density decay order (default: operator degree)");
  derive->add_flag("--json", derive_args.json_only, "print only the canonical operator as JSON");

  auto* bessel_cmd = app.add_subcommand("bessel", "modified Bessel functions");
  bessel_cmd->require_subcommand(1);
  BesselEvalArgs bessel_args;
  auto* bessel = bessel_cmd->add_subcommand("eval", "evaluate I_mu(x) or K_mu(x)");
  bessel->add_option("--kind", bessel_args.kind, "i or k")->check(CLI::IsMember({"i", "k"}));
  bessel->add_option("--mu", bessel_args.mu, "order")->required();
  bessel->add_option("--x", bessel_args.x, "argument (> 0)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_cf_eval(eval_args);
    if (table->parsed()) return cmd_cf_table(table_args);
    if (check->parsed()) return cmd_cf_check(check_args);
    if (derive->parsed()) return cmd_ode_derive(derive_args);
    if (bessel->parsed()) return cmd_bessel_eval(bessel_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  std::cerr << app.help();
  return kExitUsage;
}
