#include "lvlp/checks.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "lvlp/approximants.hpp"
#include "lvlp/engine.hpp"
#include "lvlp/expression.hpp"
#include "lvlp/ode.hpp"
#include "lvlp/residual.hpp"
#include "lvlp/roots.hpp"
#include "lvlp/series_io.hpp"

namespace lvlp {

namespace {

using SymbolicPhase = PhiCoefficient<SqrtAlphaPoly>;

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

class Runner {
 public:
  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult r;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = body();
      r.passed = true;
    } catch (const Failure& f) {
      r.detail = f.detail;
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  std::vector<CheckResult> results;
};

template <class C>
PerturbationSeries<C> run_engine(const C& one, GaugeMode gauge, std::size_t order) {
  EngineOptions o;
  o.gauge = gauge;
  o.zero_initial_max_order = std::max<std::size_t>(order, o.zero_initial_max_order);
  return LindstedtEngine<C>(one, o).run(order);
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  return make_rational(num(rng), den(rng));
}

void check_golden(Runner& runner, const std::string& path) {
  nlohmann::json doc;
  runner.run("golden.file", [&] {
    std::ifstream in(path);
    require(static_cast<bool>(in), "cannot open " + path);
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw Failure{"unreadable golden file: " + std::string(e.what())};
    }
    require(doc.contains("simplified_xi") && doc.contains("zero_initial") && doc.contains("frequency_series_alpha_1"),
            "golden file lacks required sections");
    return path;
  });
  if (!runner.results.back().passed) return;

  auto xi_series = run_engine(SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kSimplifiedXi, 8);
  auto zi_series = run_engine(SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kZeroInitial, 3);

  auto compare = [&](const std::string& name, const SymbolicPhase& got, const std::string& expected_text) {
    runner.run(name, [&] {
      SymbolicPhase expected;
      try {
        expected = parse_phi_coefficient(expected_text);
      } catch (const Error& e) {
        throw Failure{"unparseable golden entry: " + std::string(e.what())};
      }
      require(got == expected, "expected " + to_string(expected) + ", computed " + to_string(got));
      return to_string(got);
    });
  };
  auto order_index = [](const std::string& key) { return static_cast<std::size_t>(std::stoul(key)); };

  for (const auto& [key, value] : doc["simplified_xi"]["omega"].items())
    compare("golden.simplified-xi.omega_" + key, xi_series.orders.at(order_index(key)).omega, value.get<std::string>());
  for (const auto& [key, value] : doc["simplified_xi"]["gauge_constants"].items()) {
    const auto& gc = xi_series.orders.at(order_index(key)).gauge_constants;
    compare("golden.simplified-xi.a_" + key, gc.first, value.at(0).get<std::string>());
    compare("golden.simplified-xi.b_" + key, gc.second, value.at(1).get<std::string>());
  }
  for (const auto& [key, value] : doc["zero_initial"]["omega"].items())
    compare("golden.zero-initial.omega_" + key, zi_series.orders.at(order_index(key)).omega, value.get<std::string>());

  runner.run("golden.frequency-series", [&] {
    const auto& expected = doc["frequency_series_alpha_1"];
    auto s = run_engine(SqrtAlphaNumber::one(Rational(1)), GaugeMode::kSimplifiedXi, 2 * (expected.size() - 1));
    PowerSeries f = series_from_engine(s);
    for (std::size_t j = 0; j < expected.size(); ++j) {
      Rational want = parse_rational(expected[j].get<std::string>());
      require(f[j] == want, "d_" + std::to_string(j) + " expected " + to_string(want) + ", computed " + to_string(f[j]));
    }
    return std::to_string(expected.size()) + " coefficients";
  });
}

template <class C>
void check_residual(Runner& runner, const std::string& gauge_name, const C& one, GaugeMode gauge,
                    std::size_t order) {
  runner.run("residual." + gauge_name, [&] {
    auto s = run_engine(one, gauge, order);
    long bad = first_nonzero_residual(s, order);
    require(bad < 0, "nonzero residual at order " + std::to_string(bad));
    return "zero through order " + std::to_string(order);
  });
}

void check_engine(Runner& runner, std::size_t residual_order, std::size_t odd_order) {
  check_residual(runner, "simplified-xi", SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kSimplifiedXi, residual_order);
  check_residual(runner, "simplified-eta", SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kSimplifiedEta,
                 residual_order);
  check_residual(runner, "zero-initial", SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kZeroInitial, residual_order);

  runner.run("odd-vanishing", [&] {
    auto s = run_engine(SqrtAlphaPoly(1), GaugeMode::kSimplifiedXi, odd_order);
    for (std::size_t n = 1; n <= odd_order; n += 2)
      require(s.orders[n].omega.is_zero(), "omega_" + std::to_string(n) + " = " + to_string(s.orders[n].omega));
    return "omega_odd = 0 through order " + std::to_string(odd_order);
  });

  const std::size_t n = std::min<std::size_t>(residual_order, 6);
  runner.run("gauge.zero-initial", [&] {
    auto s = run_engine(SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kZeroInitial, n);
    for (std::size_t k = 1; k <= n; ++k)
      require(s.orders[k].gauge_constants.first.is_zero() && s.orders[k].gauge_constants.second.is_zero(),
              "xi_" + std::to_string(k) + "(0) or eta_" + std::to_string(k) + "(0) is nonzero");
    return "xi_n(0) = eta_n(0) = 0 through order " + std::to_string(n);
  });
  runner.run("gauge.simplified", [&] {
    auto sx = run_engine(SqrtAlphaPoly(1), GaugeMode::kSimplifiedXi, n);
    auto se = run_engine(SqrtAlphaPoly(1), GaugeMode::kSimplifiedEta, n);
    for (std::size_t k = 1; k <= n; ++k) {
      auto [a, b] = sx.orders[k].xi.harmonic(1);
      auto [c, d] = se.orders[k].eta.harmonic(1);
      require(a.is_zero() && b.is_zero(), "xi_" + std::to_string(k) + " keeps a first harmonic");
      require(c.is_zero() && d.is_zero(), "eta_" + std::to_string(k) + " keeps a first harmonic");
    }
    return "first harmonics removed through order " + std::to_string(n);
  });
  runner.run("harmonic-bound", [&] {
    auto s = run_engine(SqrtAlphaPoly(1), GaugeMode::kSimplifiedXi, residual_order);
    for (std::size_t k = 0; k <= residual_order; ++k)
      require(s.orders[k].xi.max_harmonic() <= static_cast<int>(k) + 1 &&
                  s.orders[k].eta.max_harmonic() <= static_cast<int>(k) + 1,
              "order " + std::to_string(k) + " exceeds harmonic n+1");
    return "max harmonic <= n+1";
  });
  runner.run("phi-independence", [&] {
    auto s = run_engine(SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kSimplifiedXi, n);
    for (const auto& o : s.orders) {
      require(o.omega.is_constant(), "omega_" + std::to_string(o.n) + " depends on phi");
      for (const auto& [j, c] : o.xi.sines()) require(c.is_constant(), "xi_" + std::to_string(o.n) + " depends on phi");
      for (const auto& [j, c] : o.xi.cosines()) require(c.is_constant(), "xi_" + std::to_string(o.n) + " depends on phi");
    }
    return "simplified-xi coefficients are phi-free";
  });
  runner.run("reduction-homomorphism", [&] {
    const Rational alpha(2, 3);
    auto sym = run_engine(SqrtAlphaPoly(1), GaugeMode::kSimplifiedXi, n);
    auto num = run_engine(SqrtAlphaNumber::one(alpha), GaugeMode::kSimplifiedXi, n);
    auto ctx = num.one.alpha();
    for (std::size_t k = 0; k <= n; ++k) {
      require(SqrtAlphaNumber::reduce(sym.orders[k].omega, ctx) == num.orders[k].omega,
              "omega_" + std::to_string(k) + " differs after reduction");
      auto reduce = [&](const SqrtAlphaPoly& c) { return SqrtAlphaNumber::reduce(c, ctx); };
      require(convert_coefficients<SqrtAlphaNumber>(sym.orders[k].xi, reduce) == num.orders[k].xi &&
                  convert_coefficients<SqrtAlphaNumber>(sym.orders[k].eta, reduce) == num.orders[k].eta,
              "order " + std::to_string(k) + " differs after reduction");
    }
    return "symbolic run reduced at alpha = 2/3 equals the direct run";
  });
  runner.run("json-round-trip", [&] {
    auto s = run_engine(SymbolicPhase(SqrtAlphaPoly(1)), GaugeMode::kZeroInitial, 3);
    auto doc = series_to_json(s);
    auto back = series_from_json(doc, s.one);
    require(series_to_json(back) == doc, "re-serialized document differs");
    for (std::size_t k = 0; k < s.orders.size(); ++k)
      require(back.orders[k].xi == s.orders[k].xi && back.orders[k].omega == s.orders[k].omega,
              "order " + std::to_string(k) + " changed in the round trip");
    return "zero-initial order 3";
  });
}

void check_approximants(Runner& runner, std::size_t trials) {
  runner.run("pade.reproduction", [&] {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<std::size_t> deg(0, 6);
    std::size_t done = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t K = deg(rng), L = deg(rng);
      PowerSeries f;
      for (std::size_t j = 0; j <= K + L; ++j) f.coefficients.push_back(random_rational(rng));
      try {
        auto p = pade_fit(f, K, L);
        auto back = taylor_coefficients(p, K + L + 1);
        require(back == f.coefficients, "[" + std::to_string(K) + "/" + std::to_string(L) + "] does not reproduce");
        ++done;
      } catch (const SingularSystemError&) {
      }
    }
    return std::to_string(done) + " fits reproduced exactly";
  });
  runner.run("hermite-pade.residual", [&] {
    std::mt19937_64 rng(20240612);
    std::uniform_int_distribution<std::size_t> deg(0, 6);
    std::size_t done = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t K = deg(rng), L = deg(rng), M = deg(rng);
      PowerSeries f;
      for (std::size_t j = 0; j < K + L + M + 2; ++j) f.coefficients.push_back(random_rational(rng));
      try {
        auto h = hermite_pade_fit(f, K, L, M);
        for (const auto& c : hermite_pade_residual(h, f, K + L + M + 2))
          require(c == 0, "residual of [" + std::to_string(K) + "," + std::to_string(L) + "," + std::to_string(M) +
                              "] is nonzero");
        ++done;
      } catch (const RankDeficiencyError&) {
      }
    }
    return std::to_string(done) + " fits with zero residual";
  });
  runner.run("hermite-pade.branch-point", [&] {
    // sqrt(1 - 4z) = 1 - sum_{j>=1} C(2j-2, j-1) 2 z^j / j
    PowerSeries f;
    Rational c = 1;
    f.coefficients.push_back(1);
    for (std::size_t j = 1; j < 12; ++j) {
      f.coefficients.push_back(-2 * c / Rational(static_cast<long>(j)));
      c = c * make_rational(static_cast<long>((2 * j) * (2 * j - 1)), static_cast<long>(j * j));
    }
    auto roots = discriminant_roots(hermite_pade_fit(f, 0, 0, 1));
    require(roots.size() == 1, "expected a single discriminant root");
    const double err = static_cast<double>(abs(roots[0] - Complex(Real(0.25))));
    require(err <= 1e-8, "root misses 1/4 by " + std::to_string(err));
    return "root at 1/4";
  });
}

void check_ode(Runner& runner) {
  const double a = 0.1, phi = std::numbers::pi / 4;
  runner.run("ode.first-integral", [&] {
    IntegratorConfig cfg;
    cfg.max_time = 10 * 2 * std::numbers::pi;
    cfg.sample_stride = 100;
    auto orbit = integrate(1.0, 1 + a * std::cos(phi), 1 + a * std::sin(phi), cfg);
    require(orbit.conserved_drift <= 1e-9, "drift " + std::to_string(orbit.conserved_drift));
    std::ostringstream os;
    os << "drift " << orbit.conserved_drift;
    return os.str();
  });
  runner.run("ode.time-reversal", [&] {
    IntegratorConfig cfg;
    cfg.max_time = 2 * std::numbers::pi;
    cfg.sample_stride = 1000;
    const double x0 = 1 + a * std::cos(phi), y0 = 1 + a * std::sin(phi);
    auto fwd = integrate(1.0, x0, y0, cfg);
    cfg.max_time = -cfg.max_time;
    auto back = integrate(1.0, fwd.x.back(), fwd.y.back(), cfg);
    const double err = std::hypot(back.x.back() - x0, back.y.back() - y0);
    require(err <= 10 * cfg.tolerance, "returned " + std::to_string(err) + " away from the start");
    return "ok";
  });
}

}  // namespace

CheckLevel parse_check_level(const std::string& name) {
  if (name == "quick") return CheckLevel::kQuick;
  if (name == "full") return CheckLevel::kFull;
  throw std::invalid_argument("unknown check level '" + name + "' (quick or full)");
}

std::string default_golden_path() { return std::string(LVLP_DATA_DIR) + "/golden.json"; }

std::vector<CheckResult> run_checks(CheckLevel level, const std::string& golden_path) {
  Runner runner;
  const bool full = level == CheckLevel::kFull;
  check_golden(runner, golden_path);
  check_engine(runner, full ? 10 : 6, full ? 45 : 6);
  check_approximants(runner, full ? 100 : 20);
  check_ode(runner);
  return runner.results;
}

}  // namespace lvlp
