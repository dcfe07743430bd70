// Command-line front end: series, radius, orbit, check.

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvlp/checks.hpp"
#include "lvlp/engine.hpp"
#include "lvlp/expression.hpp"
#include "lvlp/ode.hpp"
#include "lvlp/series_io.hpp"
#include "lvlp/singularity.hpp"

namespace {

using namespace lvlp;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

/// Raised for invalid user input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_angle(const std::string& text) {
  static const std::regex pi_form(R"(^\s*([+-]?(?:\d+(?:\.\d*)?|\.\d+)?)\s*\*?\s*pi\s*(?:/\s*(\d+(?:\.\d*)?))?\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, pi_form)) {
    double k = 1;
    if (m[1].length() > 0) k = m[1] == "-" ? -1 : (m[1] == "+" ? 1 : std::stod(m[1]));
    double d = m[2].matched ? std::stod(m[2]) : 1;
    return k * std::numbers::pi / d;
  }
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw UsageError("cannot read angle '" + text + "'");
  }
}

Rational parse_positive_rational(const std::string& text) {
  Rational q;
  try {
    q = parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError("cannot read '" + text + "' as a rational number");
  }
  if (q <= 0) throw UsageError("alpha must be positive, got " + text);
  return q;
}

std::vector<Rational> parse_alpha_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_positive_rational(item));
  return out;
}

/// "lo:hi:count" with count >= 2, evenly spaced in exact arithmetic.
std::vector<Rational> parse_alpha_range(const std::string& text) {
  std::stringstream ss(text);
  std::string lo, hi, count;
  if (!std::getline(ss, lo, ':') || !std::getline(ss, hi, ':') || !std::getline(ss, count))
    throw UsageError("range must look like lo:hi:count");
  Rational a = parse_positive_rational(lo), b = parse_positive_rational(hi);
  long n = std::stol(count);
  if (n < 2 || b <= a) throw UsageError("range needs lo < hi and count >= 2");
  std::vector<Rational> out;
  for (long i = 0; i < n; ++i) out.push_back(a + (b - a) * make_rational(i, n - 1));
  return out;
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
  if (!out) throw Error("failed writing " + path);
}

/// Everything needed to re-run a command: its argv and parsed parameters.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  json parameters = json::object();
  std::vector<std::string> outputs;

  void write(const std::string& path) const {
    json doc{{"command", command},       {"argv", argv},          {"parameters", parameters},
             {"version", LVLP_VERSION}, {"timestamp", utc_timestamp()}, {"outputs", outputs}};
    write_file(path, doc.dump(2) + "\n");
  }
};

std::string manifest_path(const std::string& requested, const std::string& primary_output) {
  return requested.empty() ? primary_output + ".manifest.json" : requested;
}

// ---------------------------------------------------------------- series

struct SeriesArgs {
  std::size_t order = 8;
  std::string alpha = "symbolic";
  std::string gauge = "simplified-xi";
  std::string output = "series.json";
  std::size_t zero_initial_max_order = 8;
};

template <class C>
json run_series(const C& one, const SeriesArgs& args, GaugeMode gauge, const std::string& label) {
  EngineOptions options;
  options.gauge = gauge;
  options.zero_initial_max_order = args.zero_initial_max_order;
  auto series = LindstedtEngine<C>(one, options).run(args.order, label);
  for (const auto& o : series.orders) std::cout << "omega_" << o.n << " = " << to_string(o.omega) << "\n";
  return series_to_json(series);
}

int cmd_series(const SeriesArgs& args, Manifest& manifest, const std::string& manifest_override) {
  GaugeMode gauge;
  try {
    gauge = parse_gauge(args.gauge);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  json doc;
  const bool zero_initial = gauge == GaugeMode::kZeroInitial;
  if (args.alpha == "symbolic") {
    doc = zero_initial ? run_series(PhiCoefficient<SqrtAlphaPoly>(SqrtAlphaPoly(1)), args, gauge, "symbolic")
                       : run_series(SqrtAlphaPoly(1), args, gauge, "symbolic");
  } else {
    const Rational alpha = parse_positive_rational(args.alpha);
    const auto one = SqrtAlphaNumber::one(alpha);
    doc = zero_initial ? run_series(PhiCoefficient<SqrtAlphaNumber>(one), args, gauge, to_string(alpha))
                       : run_series(one, args, gauge, to_string(alpha));
  }
  write_file(args.output, doc.dump(1) + "\n");
  manifest.parameters = {{"order", args.order}, {"alpha", args.alpha}, {"gauge", args.gauge},
                         {"zero_initial_max_order", args.zero_initial_max_order}};
  manifest.outputs = {args.output};
  manifest.write(manifest_path(manifest_override, args.output));
  return kExitOk;
}

// ---------------------------------------------------------------- radius

struct RadiusArgs {
  std::string alphas;
  std::string range;
  std::size_t order = 44;
  std::string families = "pade,hermite-pade";
  double threshold = StabilityOptions{}.relative_threshold;
  std::size_t fits = 5;
  std::size_t window = 3;
  int digits = 10;
  bool serial = false;
  std::string output = "radius.csv";
};

int cmd_radius(const RadiusArgs& args, Manifest& manifest, const std::string& manifest_override) {
  std::vector<Rational> grid;
  if (!args.alphas.empty()) grid = parse_alpha_list(args.alphas);
  if (!args.range.empty()) {
    auto r = parse_alpha_range(args.range);
    grid.insert(grid.end(), r.begin(), r.end());
  }
  if (grid.empty()) throw UsageError("give --alpha and/or --range");

  RadiusScanOptions options;
  options.max_order = args.order;
  options.families.clear();
  std::stringstream ss(args.families);
  std::string fam;
  try {
    while (std::getline(ss, fam, ','))
      if (!fam.empty()) options.families.push_back(parse_family(fam));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (options.families.empty()) throw UsageError("no approximant family selected");
  if (!(args.threshold > 0)) throw UsageError("threshold must be positive");
  options.stability.relative_threshold = args.threshold;
  options.stability.window = args.window;
  options.fits_per_family = args.fits;
  options.parallel = !args.serial;

  auto rows = radius_scan(grid, options);
  std::size_t succeeded = 0;
  for (const auto& r : rows) {
    if (r.pade || r.hermite_pade) ++succeeded;
    for (const auto& e : r.errors) std::cerr << "alpha=" << to_string(r.alpha) << ": " << e << "\n";
  }
  const std::string csv = radius_csv(rows, args.digits);
  write_file(args.output, csv);
  std::cout << csv;

  json alphas = json::array();
  for (const auto& a : grid) alphas.push_back(to_string(a));
  manifest.parameters = {{"alphas", alphas},        {"order", args.order},   {"families", args.families},
                         {"threshold", args.threshold}, {"fits", args.fits}, {"window", args.window},
                         {"digits", args.digits},   {"serial", args.serial}};
  manifest.outputs = {args.output};
  manifest.write(manifest_path(manifest_override, args.output));
  if (succeeded == 0) {
    std::cerr << "no radius estimate succeeded\n";
    return kExitFailure;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- orbit

struct OrbitArgs {
  std::string alpha = "1";
  double a = 0.1;
  std::string phi = "0";
  std::size_t order = 2;
  double periods = 1;
  double step = IntegratorConfig{}.step;
  double tolerance = IntegratorConfig{}.tolerance;
  std::size_t samples = 400;
  int digits = 10;
  bool skip_radius = false;
  std::string output = "orbit";
};

int cmd_orbit(const OrbitArgs& args, Manifest& manifest, const std::string& manifest_override) {
  const Rational alpha_q = parse_positive_rational(args.alpha);
  const double alpha = alpha_q.get_d();
  const double phi = parse_angle(args.phi);
  if (!(args.a >= 0)) throw UsageError("a must be non-negative");
  if (!(args.periods > 0)) throw UsageError("periods must be positive");
  if (args.order > 8) throw UsageError("orbit comparisons use the zero-initial gauge, limited to order 8");

  if (args.a > 0 && !args.skip_radius) {
    RadiusScanOptions ro;
    ro.families = {ApproximantFamily::kHermitePade, ApproximantFamily::kPade};
    RadiusRow row = radius_row(alpha_q, ro);
    std::optional<double> rc;
    for (const auto* e : {&row.hermite_pade, &row.pade})
      if (*e) {
        rc = static_cast<double>(e->value().radius);
        break;
      }
    if (rc && args.a * args.a > *rc)
      std::cerr << "warning: a^2 = " << args.a * args.a << " exceeds the estimated radius of convergence " << *rc
                << "; the series diverges here\n";
  }

  EngineOptions eo;
  eo.gauge = GaugeMode::kZeroInitial;
  using Phase = PhiCoefficient<SqrtAlphaNumber>;
  auto series = LindstedtEngine<Phase>(Phase(SqrtAlphaNumber::one(alpha_q)), eo).run(args.order, to_string(alpha_q));
  const NumericSeries numeric = to_numeric(series, alpha, phi);

  // Zero-initial gauge: the series starts exactly at the linear initial point.
  const double x0 = 1 + args.a * std::cos(phi);
  const double y0 = 1 + args.a * std::sqrt(alpha) * std::sin(phi);
  IntegratorConfig cfg;
  cfg.step = args.step;
  cfg.tolerance = args.tolerance;
  const double omega_series = numeric.frequency(args.a, args.order);
  cfg.max_time = std::max(args.periods, 3.0) * 2 * std::numbers::pi / omega_series * 1.05;
  OrbitSample orbit = integrate(alpha, x0, y0, cfg);

  json metrics{{"alpha", to_string(alpha_q)},
               {"a", args.a},
               {"phi", phi},
               {"order", args.order},
               {"omega_series", omega_series},
               {"conserved_drift", orbit.conserved_drift}};
  if (args.a > 0) {
    try {
      metrics["omega_numeric"] = measure_frequency(orbit);
    } catch (const IntegrationError& e) {
      metrics["omega_numeric"] = nullptr;
    }
  }

  const std::string numeric_path = args.output + "_numeric.csv";
  const std::string compare_path = args.output + "_compare.csv";
  const std::string compare0_path = args.output + "_compare_order0.csv";
  const std::string metrics_path = args.output + "_metrics.json";
  const auto cmp = compare_orbit(numeric, args.order, args.a, orbit, args.samples);
  const auto cmp0 = compare_orbit(numeric, 0, args.a, orbit, args.samples);
  metrics["max_gap"] = cmp.max_distance;
  metrics["rms_gap"] = cmp.rms_distance;
  metrics["max_gap_order0"] = cmp0.max_distance;
  metrics["rms_gap_order0"] = cmp0.rms_distance;

  write_file(numeric_path, orbit_csv(orbit, args.digits));
  write_file(compare_path, comparison_csv(cmp, args.digits));
  write_file(compare0_path, comparison_csv(cmp0, args.digits));
  write_file(metrics_path, metrics.dump(2) + "\n");

  std::cout << std::setprecision(args.digits) << "omega_series = " << omega_series << "\n"
            << "max_gap(order " << args.order << ") = " << cmp.max_distance << "\n"
            << "max_gap(order 0) = " << cmp0.max_distance << "\n"
            << "conserved_drift = " << orbit.conserved_drift << "\n";

  manifest.parameters = {{"alpha", args.alpha}, {"a", args.a},         {"phi", args.phi},
                         {"order", args.order}, {"periods", args.periods}, {"step", args.step},
                         {"tolerance", args.tolerance}, {"samples", args.samples}, {"digits", args.digits}};
  manifest.outputs = {numeric_path, compare_path, compare0_path, metrics_path};
  manifest.write(manifest_path(manifest_override, metrics_path));
  return kExitOk;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string level = "quick";
  std::string golden = default_golden_path();
  std::string output = "check_report.json";
};

int cmd_check(const CheckArgs& args, Manifest& manifest, const std::string& manifest_override) {
  CheckLevel level;
  try {
    level = parse_check_level(args.level);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  auto results = run_checks(level, args.golden);
  bool ok = true;
  json report = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
    report.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  write_file(args.output, report.dump(2) + "\n");
  manifest.parameters = {{"level", args.level}, {"golden", args.golden}};
  manifest.outputs = {args.output};
  manifest.write(manifest_path(manifest_override, args.output));
  std::cout << (ok ? "all invariants hold" : "invariant failures") << "\n";
  return ok ? kExitOk : kExitFailure;
}

// ---------------------------------------------------------------- dispatch

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Lindstedt-Poincare series for the Lotka-Volterra system"};
  app.set_version_flag("--version", LVLP_VERSION);
  app.require_subcommand(0, 1);
  std::string replay;
  std::string manifest_override;
  app.add_option("--replay", replay, "re-run the command recorded in a manifest")->check(CLI::ExistingFile);
  app.add_option("--manifest", manifest_override, "manifest path (default: next to the main output)");

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "compute the perturbation series and write JSON");
  series->add_option("--order,-n", sa.order, "highest order N")->required();
  series->add_option("--alpha", sa.alpha, "\"symbolic\" or a positive rational")->capture_default_str();
  series->add_option("--gauge", sa.gauge, "zero-initial | simplified-xi | simplified-eta")->capture_default_str();
  series->add_option("--output,-o", sa.output, "JSON output path")->capture_default_str();
  series->add_option("--zero-initial-max-order", sa.zero_initial_max_order, "order cap for the zero-initial gauge")
      ->capture_default_str();

  RadiusArgs ra;
  auto* radius = app.add_subcommand("radius", "estimate the radius of convergence of the frequency series");
  radius->add_option("--alpha", ra.alphas, "comma-separated positive rationals or decimals");
  radius->add_option("--range", ra.range, "lo:hi:count evenly spaced alphas");
  radius->add_option("--order,-n", ra.order, "perturbation order")->capture_default_str();
  radius->add_option("--families", ra.families, "pade,hermite-pade")->capture_default_str();
  radius->add_option("--threshold", ra.threshold, "relative stability threshold")->capture_default_str();
  radius->add_option("--fits", ra.fits, "diagonal approximants tried per family")->capture_default_str();
  radius->add_option("--window", ra.window, "consecutive fits a root must persist across")->capture_default_str();
  radius->add_option("--digits", ra.digits, "significant digits in the CSV")->capture_default_str();
  radius->add_flag("--serial", ra.serial, "do not parallelize over alpha");
  radius->add_option("--output,-o", ra.output, "CSV output path")->capture_default_str();

  OrbitArgs oa;
  auto* orbit = app.add_subcommand("orbit", "compare series orbits with numerical integration");
  orbit->add_option("--alpha", oa.alpha, "positive rational or decimal")->capture_default_str();
  orbit->add_option("--a", oa.a, "expansion amplitude a = eps*A")->capture_default_str();
  orbit->add_option("--phi", oa.phi, "phase in radians; pi/4-style literals accepted")->capture_default_str();
  orbit->add_option("--order,-n", oa.order, "series order (zero-initial gauge)")->capture_default_str();
  orbit->add_option("--periods", oa.periods, "periods to integrate")->capture_default_str();
  orbit->add_option("--step", oa.step, "base RK4 step")->capture_default_str();
  orbit->add_option("--tolerance", oa.tolerance, "step-halving tolerance")->capture_default_str();
  orbit->add_option("--samples", oa.samples, "comparison points per period")->capture_default_str();
  orbit->add_option("--digits", oa.digits, "significant digits in the CSV")->capture_default_str();
  orbit->add_flag("--skip-radius", oa.skip_radius, "skip the convergence-radius warning check");
  orbit->add_option("--output,-o", oa.output, "output path prefix")->capture_default_str();

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "run the invariant suite");
  check->add_option("--level", ca.level, "quick | full")->capture_default_str();
  check->add_option("--golden", ca.golden, "golden values file")->capture_default_str();
  check->add_option("--output,-o", ca.output, "JSON report path")->capture_default_str();

  std::vector<char*> cargv;
  for (const auto& s : argv) cargv.push_back(const_cast<char*>(s.c_str()));
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (!replay.empty()) {
    json doc;
    try {
      std::ifstream in(replay);
      in >> doc;
      std::vector<std::string> recorded = doc.at("argv").get<std::vector<std::string>>();
      if (recorded.empty()) throw UsageError("manifest has an empty argv");
      for (const auto& s : recorded)
        if (s == "--replay") throw UsageError("manifest argv must not itself replay");
      return run(recorded);
    } catch (const json::exception& e) {
      throw UsageError("unreadable manifest " + replay + ": " + e.what());
    }
  }

  Manifest manifest;
  manifest.argv = argv;
  if (*series) {
    manifest.command = "series";
    return cmd_series(sa, manifest, manifest_override);
  }
  if (*radius) {
    manifest.command = "radius";
    return cmd_radius(ra, manifest, manifest_override);
  }
  if (*orbit) {
    manifest.command = "orbit";
    return cmd_orbit(oa, manifest, manifest_override);
  }
  if (*check) {
    manifest.command = "check";
    return cmd_check(ca, manifest, manifest_override);
  }
  std::cout << app.help();
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  try {
    return run(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
