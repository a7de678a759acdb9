#include "lpa/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace lpa {

namespace {

void require_exponent(double r) {
  if (!(r > 1.0) || !std::isfinite(r)) {
    throw std::invalid_argument("geometry exponent must satisfy r > 1");
  }
}

// a^r - b^r for a, b >= 0 without cancellation when a is close to b.
double pow_difference(double a, double b, double r) {
  if (b == 0.0) return std::pow(a, r);
  if (a == 0.0) return -std::pow(b, r);
  return std::pow(b, r) * std::expm1(r * std::log(a / b));
}

const CoeffSeq kOne{1.0};
const CoeffSeq kZ{0.0, 1.0};

}  // namespace

WplParams::WplParams(double constant, double exponent) : C(constant), r(exponent) {
  if (!(constant > 0.0)) throw std::invalid_argument("WPL constant must be > 0");
  require_exponent(exponent);
}

PythParams::PythParams(double constant, double exponent)
    : K(constant), r(exponent) {
  if (!(constant > 0.0)) {
    throw std::invalid_argument("Pythagorean constant must be > 0");
  }
  require_exponent(exponent);
}

NormContext NormContext::sequence(Exponent p) {
  return NormContext(Kind::SequencePNorm, p, 0, 0);
}

NormContext NormContext::multiplier_affine() {
  return NormContext(Kind::MultiplierAffine, Exponent(2.0), 0, 0);
}

NormContext NormContext::multiplier_bracket(Exponent p, std::size_t n,
                                            int iters) {
  return NormContext(Kind::MultiplierBracket, p, n, iters);
}

std::string NormContext::name() const {
  switch (kind_) {
    case Kind::SequencePNorm:
      return "sequence-p-norm";
    case Kind::MultiplierAffine:
      return "multiplier-affine-closed-form";
    case Kind::MultiplierBracket:
      return "multiplier-bracket";
  }
  return "unknown";
}

double norm_in_context(const CoeffSeq& x, const NormContext& ctx) {
  switch (ctx.kind()) {
    case NormContext::Kind::SequencePNorm:
      return p_norm(x, ctx.exponent());
    case NormContext::Kind::MultiplierAffine: {
      const auto d = x.degree();
      if (d && *d > 1) {
        throw std::invalid_argument(
            "affine closed form applies only to symbols of degree <= 1");
      }
      return std::abs(x.coeff(0)) + std::abs(x.coeff(1));
    }
    case NormContext::Kind::MultiplierBracket:
      return multiplier_norm_bounds(x, ctx.exponent(), ctx.section_size(),
                                    ctx.iterations())
          .lower;
  }
  throw std::logic_error("unhandled norm context");
}

double lwp_residual(const CoeffSeq& x, const CoeffSeq& y,
                    const WplParams& params, const NormContext& ctx) {
  const double r = params.r;
  const double nx = norm_in_context(x, ctx), ny = norm_in_context(y, ctx);
  const double sum = norm_in_context(x + y, ctx);
  const double diff = norm_in_context(x - y, ctx);
  return std::pow(2.0, r - 1.0) * (std::pow(nx, r) + std::pow(ny, r)) -
         std::pow(sum, r) - params.C * std::pow(diff, r);
}

double lwp_max_constant(const CoeffSeq& x, const CoeffSeq& y, double r,
                        const NormContext& ctx) {
  require_exponent(r);
  const double diff = norm_in_context(x - y, ctx);
  if (!(diff > 0.0)) {
    throw std::invalid_argument("lwp_max_constant requires x != y");
  }
  const double nx = norm_in_context(x, ctx), ny = norm_in_context(y, ctx);
  const double sum = norm_in_context(x + y, ctx);
  return (std::pow(2.0, r - 1.0) * (std::pow(nx, r) + std::pow(ny, r)) -
          std::pow(sum, r)) /
         std::pow(diff, r);
}

double uwp_residual(const CoeffSeq& x, const CoeffSeq& y,
                    const WplParams& params, const NormContext& ctx) {
  const double r = params.r;
  const double nx = norm_in_context(x, ctx), ny = norm_in_context(y, ctx);
  const double sum = norm_in_context(x + y, ctx);
  const double diff = norm_in_context(x - y, ctx);
  return std::pow(sum, r) + params.C * std::pow(diff, r) -
         std::pow(2.0, r - 1.0) * (std::pow(nx, r) + std::pow(ny, r));
}

double pythagorean_residual(const CoeffSeq& x, const CoeffSeq& y,
                            const PythParams& params, PythSide side,
                            const NormContext& ctx) {
  const double r = params.r;
  const double lower = pow_difference(norm_in_context(x + y, ctx),
                                      norm_in_context(x, ctx), r) -
                       params.K * std::pow(norm_in_context(y, ctx), r);
  return side == PythSide::Lower ? lower : -lower;
}

double pyth_constant_from_wpl(double C, double r) {
  require_exponent(r);
  if (!(C > 0.0)) throw std::invalid_argument("WPL constant must be > 0");
  return C / (std::pow(2.0, r - 1.0) - 1.0);
}

CurveSummary summarize(const Curve& curve) {
  if (curve.empty()) throw std::invalid_argument("summarize: empty curve");
  CurveSummary s{curve[0].value, curve[0].value, curve[0].parameter,
                 curve[0].parameter};
  for (const auto& pt : curve) {
    if (pt.value < s.min) {
      s.min = pt.value;
      s.argmin = pt.parameter;
    }
    if (pt.value > s.max) {
      s.max = pt.value;
      s.argmax = pt.parameter;
    }
  }
  return s;
}

std::vector<Complex> default_log_grid() {
  std::vector<Complex> grid;
  for (int e = 0; e <= 8; ++e) grid.emplace_back(std::pow(10.0, -e), 0.0);
  return grid;
}

Curve upyth_ratio_curve(double r, const std::vector<Complex>& c_grid) {
  require_exponent(r);
  const auto ctx = NormContext::multiplier_affine();
  const double base = norm_in_context(kOne, ctx);
  Curve curve;
  for (Complex c : c_grid) {
    if (c == Complex{}) throw std::invalid_argument("upyth grid contains c = 0");
    const double top = norm_in_context(kOne + c * kZ, ctx);
    const double bottom = norm_in_context(c * kZ, ctx);
    curve.push_back({c, pow_difference(top, base, r) / std::pow(bottom, r)});
  }
  return curve;
}

Curve lpyth_ratio_curve(double r, const std::vector<Complex>& c_grid) {
  require_exponent(r);
  const auto ctx = NormContext::multiplier_affine();
  const CoeffSeq x{1.0, 1.0};
  const CoeffSeq y{1.0, -1.0};
  const double base = norm_in_context(x, ctx);
  Curve curve;
  for (Complex c : c_grid) {
    const bool real = c.imag() == 0.0;
    if (real ? !(c.real() > 0.0 && c.real() < 1.0)
             : !(std::abs(c) > 0.0 && std::abs(c) < 1.0)) {
      throw std::invalid_argument("lpyth grid entry outside the domain");
    }
    const double top = norm_in_context(x + c * y, ctx);
    const double bottom = norm_in_context(c * y, ctx);
    curve.push_back({c, pow_difference(top, base, r) / std::pow(bottom, r)});
  }
  return curve;
}

Curve uwp_failure_curve(const WplParams& params,
                        const std::vector<Complex>& t_grid) {
  const auto ctx = NormContext::multiplier_affine();
  Curve curve;
  for (Complex t : t_grid) {
    const CoeffSeq x = kOne + t * kZ;
    const CoeffSeq y = kOne - t * kZ;
    curve.push_back({t, uwp_residual(x, y, params, ctx)});
  }
  return curve;
}

Curve lwp_failure_curve(const std::vector<double>& r_grid) {
  const auto ctx = NormContext::multiplier_affine();
  Curve curve;
  for (double r : r_grid) {
    curve.push_back({Complex{r, 0.0}, lwp_max_constant(kOne, kZ, r, ctx)});
  }
  return curve;
}

}  // namespace lpa
