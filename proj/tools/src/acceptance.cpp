#include "lpa/cli/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <numbers>
#include <stdexcept>

#include "lpa/cli/config.hpp"
#include "lpa/geometry.hpp"
#include "lpa/json_io.hpp"
#include "lpa/multiplier.hpp"
#include "lpa/orthogonality.hpp"
#include "lpa/rng.hpp"

namespace lpa::cli {

namespace {

using nlohmann::json;

// Tolerances, one block per criterion.
constexpr double kMonomialTol = 1e-10;                   // 1

constexpr double kAffineConvergenceTol = 0.05;           // 2
constexpr double kAffineMonotoneSlack = 1e-12;
constexpr double kAffineRuntimeLimit = 30.0;

constexpr double kInnerNormTol = 1e-8;                   // 3
constexpr double kInnerRatioTol = 1e-8;
constexpr double kInnerMarginMin = 7.0;
constexpr double kInnerResidualTol = 1e-8;

constexpr double kLwpTol = 1e-12;                        // 5

constexpr double kUpythBand = 1e-3;                      // 6

constexpr double kOrthoTol = kDefaultOrthoTol;           // 8
constexpr double kOrthoSampleSlack = 1e-10;

constexpr double kScalarTol = 1e-12;                     // 9

constexpr double kSandwichSupSlack = 1e-12;              // 10
constexpr double kSandwichOrderSlack = 1e-12;

constexpr double kDqRoundTripTol = 1e-14;                // 11

constexpr double kNestingEqualityTol = 1e-12;            // 12

std::uint64_t criterion_seed(std::uint64_t base, int id) {
  return base * 1000003ULL + static_cast<std::uint64_t>(id);
}

CriterionResult named(int id, std::string name) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  return r;
}

double rel_err(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

CriterionResult monomial_extremality(const AcceptanceOptions& opt) {
  CriterionResult r = named(1, "monomial-extremality");
  const CoeffSeq phi = CoeffSeq::monomial(2.5, 3);
  bool ok = true;
  double worst = 0.0;
  json rows = json::array();
  for (double pv : {1.5, 2.7, 4.0}) {
    const auto gap = extremality_gap(phi, Exponent(pv), 64, opt.iters);
    const double dev = std::max({std::abs(gap.bracket.lower - 2.5),
                                 std::abs(gap.bracket.upper - 2.5), gap.gap_lower});
    worst = std::max(worst, dev);
    if (dev > kMonomialTol) ok = false;
    rows.push_back({{"p", pv}, {"bracket", gap.bracket}, {"gap_lower", gap.gap_lower}});
  }
  r.pass = ok;
  r.detail = {{"cases", rows}, {"max_deviation", worst}};
  r.summary = fmt("max |bound - 2.5| = %.3g (tol 1e-10)", worst);
  return r;
}

CriterionResult affine_multiplier(const AcceptanceOptions& opt) {
  CriterionResult r = named(2, "affine-multiplier-norm");
  const auto start = std::chrono::steady_clock::now();
  const CoeffSeq phi{1.0, 1.0};
  const Exponent p(1.5);
  const auto bracket = multiplier_norm_bounds(phi, p, 512, opt.iters, {}, criterion_seed(opt.seed, 2));
  const bool upper_exact = bracket.upper == 2.0;

  Table t{"section_lower", {"n", "estimate"}, {}};
  std::vector<double> est;
  for (std::size_t n : {16, 64, 256, 512}) {
    est.push_back(section_pnorm_lower(toeplitz_section(phi, n), p, opt.iters,
                                      criterion_seed(opt.seed, 2)).estimate);
    t.add_row({cell(static_cast<long long>(n)), cell(est.back())});
  }
  bool monotone = true, bounded = true;
  for (std::size_t i = 0; i < est.size(); ++i) {
    if (i > 0 && est[i] < est[i - 1] - kAffineMonotoneSlack * est[i - 1]) monotone = false;
    if (est[i] > 2.0 + 1e-10) bounded = false;
  }
  const double distance = 2.0 - est.back();
  const bool converged = distance <= kAffineConvergenceTol;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool fast = r.seconds < kAffineRuntimeLimit;

  r.pass = upper_exact && monotone && bounded && converged && fast;
  r.detail = {{"upper", bracket.upper},
              {"bracket_lower", bracket.lower},
              {"section_estimates", est},
              {"monotone", monotone},
              {"distance_at_512", distance},
              {"slow_convergence", !converged}};
  r.tables.push_back(std::move(t));
  r.summary = fmt("upper = %.17g, n=512 lower = %.10f (gap %.3g, tol 0.05)", bracket.upper,
                  est.back(), distance);
  return r;
}

CriterionResult single_zero_example(const AcceptanceOptions&) {
  CriterionResult r = named(3, "single-zero-inner-example");
  const Exponent p(4.0);
  const double w = 0.5;
  const std::size_t N = 200;
  const CoeffSeq b = single_zero_inner(w, p, N);

  const double norm_pow = std::pow(p_norm(b, p), 4.0);
  const double formula = 1.0 + 16.0 * std::pow(1.0 - std::pow(2.0, -4.0 / 3.0), 3.0);
  const bool a = std::abs(norm_pow - formula) <= kInnerNormTol;

  const CoeffSeq f{1.0, -std::cbrt(w)};
  const double ratio = std::pow(p_norm(apply(b, f), p), 4.0) / std::pow(p_norm(f, p), 4.0);
  const double ratio_formula = (1.0 + 1.0 / std::pow(w, 4.0)) / (1.0 + std::pow(w, 4.0 / 3.0));
  const bool bb = std::abs(ratio - ratio_formula) <= kInnerRatioTol;

  const double margin = ratio - norm_pow;
  const bool c = margin > kInnerMarginMin;

  const auto inner = is_p_inner(b, p, 10, kInnerResidualTol);
  const double worst = *std::max_element(inner.residuals.begin(), inner.residuals.end());
  const bool d = inner.p_inner && worst < kInnerResidualTol;

  r.pass = a && bb && c && d;
  r.detail = {{"norm_pow", norm_pow}, {"norm_pow_formula", formula},
              {"witness_ratio", ratio}, {"witness_ratio_formula", ratio_formula},
              {"margin", margin}, {"max_shift_residual", worst},
              {"parts", {{"a", a}, {"b", bb}, {"c", c}, {"d", d}}}};
  Table t{"shift_residuals", {"shift", "residual"}, {}};
  for (std::size_t k = 0; k < inner.residuals.size(); ++k) {
    t.add_row({cell(static_cast<long long>(k + 1)), cell(inner.residuals[k])});
  }
  r.tables.push_back(std::move(t));
  r.summary = fmt("||B||^4 = %.10f, ratio = %.10f, margin = %.4f", norm_pow, ratio, margin);
  return r;
}

CriterionResult inequality_chain(const AcceptanceOptions&) {
  CriterionResult r = named(4, "inequality-chain");
  bool ok = true;
  double least = INFINITY;
  Table t{"chain", {"w", "a", "lhs", "rhs", "margin"}, {}};
  for (double w : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    const double a = std::pow(w, 4.0 / 3.0);
    const double lhs = a * a * a + std::pow(1.0 - a, 3.0);
    const double rhs = (a * a * a + 1.0) / (1.0 + a);
    const double margin = rhs - lhs;
    least = std::min(least, margin);
    if (!(margin > 0.0)) ok = false;
    t.add_row({cell(w), cell(a), cell(lhs), cell(rhs), cell(margin)});
  }
  r.pass = ok;
  r.detail = {{"min_margin", least}};
  r.tables.push_back(std::move(t));
  r.summary = fmt("min margin = %.6g", least);
  return r;
}

CriterionResult lwp_failure(const AcceptanceOptions&) {
  CriterionResult r = named(5, "lwp-failure");
  const auto curve = lwp_failure_curve({1.25, 1.5, 2.0, 3.0});
  double worst = 0.0;
  for (const auto& pt : curve) worst = std::max(worst, std::abs(pt.value));
  r.pass = worst <= kLwpTol;
  r.detail = {{"max_abs_constant", worst}};
  r.tables.push_back(curve_table("plot_lwp_max_constant", curve, "max_constant"));
  r.summary = fmt("max |C_max| = %.3g (tol 1e-12)", worst);
  return r;
}

CriterionResult upyth_failure(const AcceptanceOptions&) {
  CriterionResult r = named(6, "upyth-failure");
  const auto probe = upyth_ratio_curve(2.0, {1e-3, 1e-6});
  // ((1+c)^2 - 1) / c^2 = 2/c + 1.
  const double e3 = 2.0 / 1e-3 + 1.0, e6 = 2.0 / 1e-6 + 1.0;
  const bool big3 = probe[0].value > 1e3 && std::abs(probe[0].value - e3) <= kUpythBand * e3;
  const bool big6 = probe[1].value > 1e6 && std::abs(probe[1].value - e6) <= kUpythBand * e6;
  r.pass = big3 && big6;
  r.detail = {{"ratio_1e-3", probe[0].value}, {"ratio_1e-6", probe[1].value}};
  r.tables.push_back(curve_table("plot_upyth", upyth_ratio_curve(2.0, default_log_grid()), "ratio"));
  r.summary = fmt("ratio(1e-3) = %.6g, ratio(1e-6) = %.6g", probe[0].value, probe[1].value);
  return r;
}

CriterionResult lpyth_failure(const AcceptanceOptions&) {
  CriterionResult r = named(7, "lpyth-failure");
  bool ok = true;
  Table t{"plot_lpyth", {"r", "c", "ratio"}, {}};
  for (double rr : {2.0, 3.0}) {
    for (const auto& pt : lpyth_ratio_curve(rr, {0.5, 0.1, 0.01})) {
      if (pt.value != 0.0) ok = false;
      t.add_row({cell(rr), cell(pt.parameter.real()), cell(pt.value)});
    }
  }
  r.pass = ok;
  r.tables.push_back(std::move(t));
  r.summary = ok ? "all six ratios are exactly 0" : "nonzero ratio on a real grid";
  return r;
}

CriterionResult orthogonality_oracle(const AcceptanceOptions& opt) {
  CriterionResult r = named(8, "orthogonality-oracle");
  Rng rng(criterion_seed(opt.seed, 8));
  int agree = 0, orthogonal = 0, sample_failures = 0, errors = 0;
  constexpr int kInstances = 200;
  for (int i = 0; i < kInstances; ++i) {
    const Exponent p(rng.uniform(1.1, 4.0));
    const CoeffSeq f = rng.sequence(static_cast<std::size_t>(rng.integer(0, 8)));
    CoeffSeq g = rng.sequence(static_cast<std::size_t>(rng.integer(0, 8)));
    if (i % 2 == 1) {
      // Project g onto the annihilator of f^<p-1> along a second direction.
      const CoeffSeq h = rng.sequence(8);
      g = g - (bj_sum(f, g, p) / bj_sum(f, h, p)) * h;
    }
    const auto report = is_bj_orthogonal(f, g, p, kOrthoTol);
    const double norm_f = p_norm(f, p);
    try {
      const auto v = variational_min(f, g, p);
      const bool oracle = v.min_value >= norm_f * (1.0 - kOrthoSampleSlack);
      if (oracle == report.orthogonal) ++agree;
    } catch (const ConvergenceError&) {
      ++errors;
    }
    if (report.orthogonal) {
      ++orthogonal;
      for (int k = 0; k < 100; ++k) {
        const Complex beta = rng.complex_normal() * std::exp(rng.uniform(-8.0, 2.0));
        if (p_norm(f + beta * g, p) < norm_f * (1.0 - kOrthoSampleSlack)) ++sample_failures;
      }
    }
  }
  r.pass = agree == kInstances && sample_failures == 0;
  r.detail = {{"instances", kInstances}, {"agreements", agree}, {"orthogonal", orthogonal},
              {"sample_failures", sample_failures}, {"oracle_errors", errors}};
  r.summary = fmt("agreement %.0f/200, %.0f orthogonal, %.0f sampled violations", agree,
                  orthogonal, sample_failures);
  return r;
}

CriterionResult power_map_identities(const AcceptanceOptions& opt) {
  CriterionResult r = named(9, "power-map-identities");
  Rng rng(criterion_seed(opt.seed, 9));
  double worst[6] = {0, 0, 0, 0, 0, 0};
  for (int i = 0; i < 1000; ++i) {
    const Complex a = rng.complex_normal() * std::exp(rng.uniform(-3.0, 3.0));
    const Complex b = rng.complex_normal();
    const double s = std::exp(rng.uniform(-2.0, 2.0));
    const int n = static_cast<int>(rng.integer(0, 6));
    const Exponent p(1.0 + std::exp(rng.uniform(-2.0, 2.0)));
    worst[0] = std::max(worst[0], rel_err(s_power(a * b, s), s_power(a, s) * s_power(b, s)));
    worst[1] = std::max(worst[1], rel_err(std::abs(s_power(a, s)), std::pow(std::abs(a), s)));
    worst[2] = std::max(worst[2], rel_err(s_power(a, s) * a, std::pow(std::abs(a), s + 1.0)));
    worst[3] = std::max(worst[3], rel_err(std::pow(s_power(a, s), n), s_power(std::pow(a, n), s)));
    worst[4] = std::max(worst[4], rel_err(s_power(s_power(a, p.p() - 1.0), p.conj() - 1.0), a));

    const CoeffSeq f = rng.sequence(static_cast<std::size_t>(rng.integer(0, 12)));
    const Complex pair = pairing(f, s_power(f, p.p() - 1.0));
    worst[5] = std::max(worst[5], rel_err(pair, std::pow(p_norm(f, p), p.p())));
  }
  const double max = *std::max_element(std::begin(worst), std::end(worst));
  r.pass = max <= kScalarTol;
  r.detail = {{"max_rel_err",
               {{"product", worst[0]}, {"modulus", worst[1]}, {"self_product", worst[2]},
                {"integer_power", worst[3]}, {"involution", worst[4]}, {"pairing", worst[5]}}}};
  r.summary = fmt("max relative error %.3g (tol 1e-12)", max);
  return r;
}

CriterionResult functional_sandwich(const AcceptanceOptions& opt) {
  CriterionResult r = named(10, "functional-sandwich");
  Rng rng(criterion_seed(opt.seed, 10));
  const auto grid = default_w_grid();
  bool sandwich = true;
  json per_p = json::array();
  Table t{"point_growth", {"p", "instance", "w_re", "w_im", "value", "bound", "kernel_l1_bound"}, {}};
  int growth_failures = 0, kernel_failures = 0, checks = 0;
  for (double pv : {1.5, 3.0}) {
    const Exponent p(pv);
    int failures_here = 0;
    for (int i = 0; i < 50; ++i) {
      const CoeffSeq lambda = rng.sequence(static_cast<std::size_t>(rng.integer(0, 10)));
      std::vector<CoeffSeq> tests;
      for (int k = 0; k < 4; ++k) tests.push_back(rng.sequence(static_cast<std::size_t>(rng.integer(1, 6))));
      const auto bracket = functional_norm_bounds(lambda, p, tests);
      if (!(bracket.lower <= bracket.upper * (1.0 + kSandwichOrderSlack)) ||
          !(bracket.lower >= sup_norm(lambda) - kSandwichSupSlack)) {
        sandwich = false;
      }
      for (Complex w : grid) {
        const auto g = point_growth_check(lambda, p, w);
        ++checks;
        if (!g.holds) {
          ++growth_failures;
          ++failures_here;
          t.add_row({cell(pv), cell(static_cast<long long>(i)), cell(w.real()), cell(w.imag()),
                     cell(g.value), cell(g.bound), cell(g.kernel_l1_bound)});
        }
        if (!(g.value <= g.kernel_l1_bound)) ++kernel_failures;
      }
    }
    per_p.push_back({{"p", pv}, {"point_growth_failures", failures_here}});
  }
  r.pass = sandwich && growth_failures == 0;
  r.detail = {{"sandwich_ok", sandwich},
              {"point_growth_checks", checks},
              {"point_growth_failures", growth_failures},
              {"kernel_l1_bound_failures", kernel_failures},
              {"per_p", per_p}};
  r.tables.push_back(std::move(t));
  r.summary = std::string("sandwich ") + (sandwich ? "ok" : "violated") + "; " +
              fmt("point growth failed %.0f of %.0f checks (the 1/(1-|w|) bound failed %.0f)",
                  growth_failures, checks, kernel_failures);
  return r;
}

CriterionResult difference_quotients(const AcceptanceOptions& opt) {
  CriterionResult r = named(11, "difference-quotients");
  Rng rng(criterion_seed(opt.seed, 11));
  double worst_round_trip = 0.0;
  int identity_failures = 0;
  for (int i = 0; i < 100; ++i) {
    const CoeffSeq f = rng.sequence(static_cast<std::size_t>(rng.integer(1, 10)));
    const Complex w = std::polar(rng.uniform(0.0, 0.9), rng.uniform(0.0, 2.0 * std::numbers::pi));
    const CoeffSeq q = difference_quotient(f, w);
    const CoeffSeq back = apply(CoeffSeq{-w, 1.0}, q) + CoeffSeq{evaluate(f, w)};
    // Measured against the largest coefficient of f.
    const double scale = sup_norm(f);
    for (std::size_t k = 0; k < std::max(back.size(), f.size()); ++k) {
      worst_round_trip = std::max(worst_round_trip, std::abs(back.coeff(k) - f.coeff(k)) / scale);
    }
    const CoeffSeq lambda = rng.sequence(static_cast<std::size_t>(rng.integer(0, 10)));
    const CoeffSeq phi = rng.sequence(static_cast<std::size_t>(rng.integer(0, 10)));
    if (!dq_functional_identity(lambda, phi, w).holds) ++identity_failures;
  }

  const auto grid = default_w_grid();
  int norm_failures = 0;
  Table t{"dq_norm", {"phi", "w_re", "w_im", "quotient_lower", "bound"}, {}};
  const std::vector<std::pair<std::string, CoeffSeq>> symbols{
      {"1+z", CoeffSeq{1.0, 1.0}}, {"1+2z+3z^2", CoeffSeq{1.0, 2.0, 3.0}}};
  for (const auto& [name, phi] : symbols) {
    for (Complex w : grid) {
      const auto c = dq_norm_check(phi, w, Exponent(3.0), 64, opt.iters);
      if (!c.holds) ++norm_failures;
      t.add_row({name, cell(w.real()), cell(w.imag()), cell(c.quotient_lower), cell(c.bound)});
    }
  }
  r.pass = worst_round_trip <= kDqRoundTripTol && identity_failures == 0 && norm_failures == 0;
  r.detail = {{"max_round_trip_error", worst_round_trip},
              {"functional_identity_failures", identity_failures},
              {"norm_check_failures", norm_failures}};
  r.tables.push_back(std::move(t));
  r.summary = fmt("round trip %.3g (tol 1e-14), %.0f identity and %.0f norm failures",
                  worst_round_trip, identity_failures, norm_failures);
  return r;
}

CriterionResult norm_nesting(const AcceptanceOptions& opt) {
  CriterionResult r = named(12, "norm-nesting");
  Rng rng(criterion_seed(opt.seed, 12));
  const Exponent p1(1.5), p2(3.0);
  int nest_failures = 0, misclassified = 0, monomials = 0, exact = 0;
  for (int i = 0; i < 200; ++i) {
    const bool mono = i % 4 == 0;
    const CoeffSeq f = mono
        ? CoeffSeq::monomial(rng.complex_normal(), static_cast<std::size_t>(rng.integer(0, 8)))
        : rng.sequence(static_cast<std::size_t>(rng.integer(1, 8)));
    const double n1 = p_norm(f, p1), n2 = p_norm(f, p2);
    if (!(n2 <= n1)) ++nest_failures;
    const bool equal = std::abs(n1 - n2) <= kNestingEqualityTol * n1;
    if (equal != f.is_monomial()) ++misclassified;
    if (f.is_monomial()) {
      ++monomials;
      if (n1 == n2) ++exact;
    }
  }
  r.pass = nest_failures == 0 && misclassified == 0 && exact == monomials;
  r.detail = {{"nesting_failures", nest_failures}, {"misclassified", misclassified},
              {"monomials", monomials}, {"monomials_exact", exact}};
  r.summary = fmt("%.0f nesting failures, %.0f misclassified, %.0f monomials exact", nest_failures,
                  misclassified, exact);
  return r;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  static constexpr Fn table[kCriterionCount] = {
      monomial_extremality, affine_multiplier,    single_zero_example, inequality_chain,
      lwp_failure,          upyth_failure,        lpyth_failure,       orthogonality_oracle,
      power_map_identities, functional_sandwich,  difference_quotients, norm_nesting};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no such criterion");
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = table[id - 1](options);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<std::future<CriterionResult>> jobs;
  for (int id = 1; id <= kCriterionCount; ++id) {
    jobs.push_back(std::async(std::launch::async, run_criterion, id, options));
  }
  std::vector<CriterionResult> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

}  // namespace lpa::cli
