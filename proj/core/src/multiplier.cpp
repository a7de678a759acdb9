#include "lpa/multiplier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lpa/rng.hpp"

namespace lpa {

CoeffSeq apply(const CoeffSeq& phi, const CoeffSeq& f) {
  if (phi.empty() || f.empty()) return CoeffSeq{};
  std::vector<Complex> out(phi.size() + f.size() - 1);
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const Complex a = phi[i];
    if (a == Complex{}) continue;
    for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += a * f[j];
  }
  return CoeffSeq(std::move(out));
}

ToeplitzSection::ToeplitzSection(CoeffSeq symbol, std::size_t n)
    : symbol_(symbol.truncated(std::min(symbol.size(), n + 1))), size_(n + 1) {}

ToeplitzSection toeplitz_section(const CoeffSeq& phi, std::size_t n) {
  return ToeplitzSection(phi, n);
}

bool ToeplitzSection::is_zero() const { return symbol_.is_zero(); }

std::vector<Complex> ToeplitzSection::multiply(std::span<const Complex> x) const {
  std::vector<Complex> y(size_);
  const std::size_t d = symbol_.size();
  for (std::size_t i = 0; i < size_; ++i) {
    Complex acc{};
    const std::size_t lo = i + 1 > d ? i + 1 - d : 0;
    for (std::size_t j = lo; j <= i; ++j) acc += symbol_[i - j] * x[j];
    y[i] = acc;
  }
  return y;
}

std::vector<Complex> ToeplitzSection::multiply_transpose(
    std::span<const Complex> y) const {
  std::vector<Complex> z(size_);
  const std::size_t d = symbol_.size();
  for (std::size_t j = 0; j < size_; ++j) {
    Complex acc{};
    const std::size_t hi = std::min(size_, j + d);
    for (std::size_t i = j; i < hi; ++i) acc += symbol_[i - j] * y[i];
    z[j] = acc;
  }
  return z;
}

namespace {

bool normalize_p(std::vector<Complex>& x, double p) {
  const double nx = lq_norm(x, p);
  if (!(nx > 0.0) || !std::isfinite(nx)) return false;
  for (auto& a : x) a /= nx;
  return true;
}

void s_power_in_place(std::vector<Complex>& x, double s) {
  for (auto& a : x) a = s_power(a, s);
}

struct BoydRun {
  double estimate = 0.0;
  std::vector<Complex> x;
  std::vector<double> history;
  int iterations = 0;
  bool collapsed = false;
};

BoydRun boyd_iterate(const ToeplitzSection& a, const Exponent& p,
                     std::vector<Complex> x, int iters) {
  BoydRun run;
  if (!normalize_p(x, p.p())) {
    run.collapsed = true;
    return run;
  }
  std::vector<Complex> y = a.multiply(x);
  double est = lq_norm(y, p.p());
  if (!(est > 0.0)) {
    run.collapsed = true;
    return run;
  }
  run.estimate = est;
  run.x = x;
  for (int it = 0; it < iters; ++it) {
    s_power_in_place(y, p.p() - 1.0);
    std::vector<Complex> z = a.multiply_transpose(y);
    s_power_in_place(z, p.conj() - 1.0);
    if (!normalize_p(z, p.p())) {
      run.collapsed = true;
      break;
    }
    x = std::move(z);
    y = a.multiply(x);
    const double next = lq_norm(y, p.p());
    ++run.iterations;
    const bool settled = std::abs(next - est) < 1e-12 * std::max(1.0, est);
    if (next > run.estimate) {
      run.estimate = next;
      run.x = x;
    }
    run.history.push_back(run.estimate);
    est = next;
    if (settled) break;
  }
  return run;
}

}  // namespace

SectionEstimate section_pnorm_lower(const ToeplitzSection& a,
                                    const Exponent& p, int iters,
                                    std::uint64_t seed) {
  if (iters < 1) {
    throw std::invalid_argument("section_pnorm_lower: iters must be >= 1");
  }
  if (a.is_zero()) {
    throw std::domain_error("section_pnorm_lower: section is the zero matrix");
  }
  const std::size_t m = a.size();
  // Starts are polynomials in phi applied to e0, so rotating the symbol
  // rotates every iterate and the estimate does not move. The geometric
  // series of phi / |phi|_1 plays the role of the flat vector.
  std::vector<std::vector<Complex>> starts;
  starts.emplace_back(m, Complex{});
  starts.back()[0] = 1.0;
  {
    const CoeffSeq psi = a.symbol() * Complex{1.0 / lq_norm(a.symbol(), 1.0)};
    Rng rng(seed);
    std::vector<Complex> flat(m), random(m);
    CoeffSeq power{1.0};
    for (std::size_t j = 0; j < m; ++j) {
      const Complex r = rng.complex_normal();
      for (std::size_t k = 0; k < power.size(); ++k) {
        flat[k] += power[k];
        random[k] += r * power[k];
      }
      power = apply(power, psi).truncated(m);
    }
    starts.push_back(std::move(flat));
    starts.push_back(std::move(random));
  }

  SectionEstimate best;
  bool any = false;
  for (auto& start : starts) {
    BoydRun run = boyd_iterate(a, p, std::move(start), iters);
    if (run.collapsed && run.x.empty()) continue;
    if (!any || run.estimate > best.estimate) {
      best.estimate = run.estimate;
      best.witness = CoeffSeq(std::move(run.x));
      best.history = std::move(run.history);
      best.iterations = run.iterations;
      any = true;
    }
  }
  if (!any) {
    throw std::domain_error("section_pnorm_lower: iterate collapsed to zero");
  }
  return best;
}

double multiplier_ratio(const CoeffSeq& phi, const CoeffSeq& f,
                        const Exponent& p) {
  return p_norm(apply(phi, f), p) / p_norm(f, p);
}

NormBracket multiplier_norm_bounds(const CoeffSeq& phi, const Exponent& p,
                                   std::size_t n, int iters,
                                   const std::vector<CoeffSeq>& test_vectors,
                                   std::uint64_t seed) {
  NormBracket bracket;
  bracket.kind = BracketKind::Multiplier;
  bracket.upper = lq_norm(phi, 1.0);
  bracket.upper_method = "ell1";
  bracket.tight = phi.is_nonnegative();
  bracket.lower_witness = CoeffSeq{1.0};
  bracket.lower_method = "p-norm";
  bracket.lower = p_norm(phi, p);
  if (phi.is_zero()) return bracket;

  auto consider = [&](const CoeffSeq& f, const char* method) {
    if (f.is_zero()) return;
    const double r = multiplier_ratio(phi, f, p);
    if (r > bracket.lower) {
      bracket.lower = r;
      bracket.lower_witness = f;
      bracket.lower_method = method;
    }
  };

  // Dual witness: with u aligned to the first column in l^{p'} and A^T = J A J
  // for the section, the reversed u satisfies ||phi Ju||_p >= ||phi||_{p'}.
  {
    const CoeffSeq column = phi.normalized();
    std::vector<Complex> u = s_power(column, p.conj() - 1.0).vec();
    std::reverse(u.begin(), u.end());
    consider(CoeffSeq(std::move(u)), "p-norm");
  }

  const ToeplitzSection section(phi, n);
  if (!section.is_zero()) {
    consider(section_pnorm_lower(section, p, iters, seed).witness,
             "boyd-section");
  }
  for (const auto& f : test_vectors) consider(f, "test-vector");
  return bracket;
}

ExtremalityGap extremality_gap(const CoeffSeq& phi, const Exponent& p,
                               std::size_t n, int iters) {
  if (phi.is_zero()) {
    throw std::invalid_argument("extremality_gap: phi is identically zero");
  }
  ExtremalityGap gap;
  gap.bracket = multiplier_norm_bounds(phi, p, n, iters);
  gap.gap_lower = gap.bracket.lower - p_norm(phi, p);
  gap.is_monomial = phi.is_monomial();
  return gap;
}

CoefficientBoundCheck coefficient_bound_check(const CoeffSeq& phi,
                                              const Exponent& p) {
  CoefficientBoundCheck check;
  const double upper = lq_norm(phi, 1.0);
  const auto degree = phi.degree();
  if (!degree) return check;
  double partial = 0.0;
  for (std::size_t m = 0; m <= *degree; ++m) {
    partial += std::abs(phi[m]);
    const double rhs =
        upper * std::pow(static_cast<double>(m + 1), 1.0 / p.conj());
    check.lhs.push_back(partial);
    check.rhs.push_back(rhs);
    if (!(partial <= rhs)) check.holds = false;
  }
  return check;
}

CoeffSeq difference_quotient(const CoeffSeq& f, Complex w) {
  if (f.size() <= 1) return CoeffSeq{};
  std::vector<Complex> q(f.size() - 1);
  q.back() = f[f.size() - 1];
  for (std::size_t j = q.size() - 1; j-- > 0;) q[j] = f[j + 1] + w * q[j + 1];
  return CoeffSeq(std::move(q));
}

namespace {

void require_in_disk(Complex w, const char* who) {
  if (!(std::abs(w) < 1.0)) {
    throw std::invalid_argument(std::string(who) + " requires |w| < 1");
  }
}

}  // namespace

DqNormCheck dq_norm_check(const CoeffSeq& phi, Complex w, const Exponent& p,
                          std::size_t n, int iters) {
  require_in_disk(w, "dq_norm_check");
  DqNormCheck check;
  const CoeffSeq q = difference_quotient(phi, w);
  check.quotient_lower =
      q.is_zero() ? 0.0 : multiplier_norm_bounds(q, p, n, iters).lower;
  check.bound = (lq_norm(phi, 1.0) + std::abs(evaluate(phi, w))) /
                (1.0 - std::abs(w));
  check.holds = check.quotient_lower <= check.bound * (1.0 + 1e-12);
  return check;
}

NormBracket functional_norm_bounds(const CoeffSeq& lambda, const Exponent& p,
                                   const std::vector<CoeffSeq>& test_multipliers) {
  NormBracket bracket;
  bracket.kind = BracketKind::Functional;
  const double dual = lq_norm(lambda, p.conj());
  const double primal = lq_norm(lambda, p.p());
  bracket.upper = std::min(dual, primal);
  bracket.upper_method = dual <= primal ? "p-prime-norm" : "p-norm";
  bracket.lower = 0.0;
  bracket.lower_witness = CoeffSeq{1.0};
  bracket.lower_method = "test-vector";

  auto consider = [&](const CoeffSeq& phi) {
    const double m = lq_norm(phi, 1.0);
    if (!(m > 0.0)) return;
    const double r = std::abs(pairing(lambda, phi)) / m;
    if (r > bracket.lower) {
      bracket.lower = r;
      bracket.lower_witness = phi;
    }
  };
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] != Complex{}) consider(CoeffSeq::monomial(1.0, k));
  }
  for (const auto& phi : test_multipliers) consider(phi);
  return bracket;
}

PointGrowthCheck point_growth_check(const CoeffSeq& lambda, const Exponent& p,
                                    Complex w) {
  require_in_disk(w, "point_growth_check");
  PointGrowthCheck check;
  check.upper = functional_norm_bounds(lambda, p).upper;
  check.value = std::abs(evaluate(lambda, w));
  const double r = std::abs(w);
  check.bound = check.upper / std::pow(1.0 - std::pow(r, p.p()), 1.0 / p.p());
  check.kernel_l1_bound = check.upper / (1.0 - r);
  check.holds = check.value <= check.bound * (1.0 + 1e-12);
  return check;
}

DqFunctionalIdentity dq_functional_identity(const CoeffSeq& lambda,
                                            const CoeffSeq& phi, Complex w) {
  DqFunctionalIdentity id;
  id.lhs = pairing(difference_quotient(lambda, w), phi);
  Complex power{1.0, 0.0};
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    id.rhs += power * pairing(lambda, shift(phi, k + 1));
    power *= w;
  }
  id.holds = std::abs(id.lhs - id.rhs) <= 1e-12 * (1.0 + std::abs(id.lhs));
  return id;
}

}  // namespace lpa
