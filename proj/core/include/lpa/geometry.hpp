#pragma once

// Weak parallelogram laws and Pythagorean inequalities evaluated in l^p_A and
// in the multiplier space, together with the curves that exhibit their
// failure for the multiplier norm.

#include <cstddef>
#include <string>
#include <vector>

#include "lpa/multiplier.hpp"
#include "lpa/seqspace.hpp"

namespace lpa {

struct WplParams {
  WplParams(double constant, double exponent);
  double C;
  double r;
};

struct PythParams {
  PythParams(double constant, double exponent);
  double K;
  double r;
};

// Which norm a geometric inequality is evaluated in.
class NormContext {
 public:
  enum class Kind { SequencePNorm, MultiplierAffine, MultiplierBracket };

  static NormContext sequence(Exponent p);
  // Exact |alpha| + |beta| for symbols of degree <= 1.
  static NormContext multiplier_affine();
  // Certified lower end of multiplier_norm_bounds.
  static NormContext multiplier_bracket(Exponent p,
                                        std::size_t n = kDefaultSectionSize,
                                        int iters = kDefaultIterations);

  Kind kind() const { return kind_; }
  // False for the bracket context, whose values are lower bounds only.
  bool exact() const { return kind_ != Kind::MultiplierBracket; }
  const Exponent& exponent() const { return p_; }
  std::size_t section_size() const { return n_; }
  int iterations() const { return iters_; }
  std::string name() const;

 private:
  NormContext(Kind kind, Exponent p, std::size_t n, int iters)
      : kind_(kind), p_(p), n_(n), iters_(iters) {}
  Kind kind_;
  Exponent p_;
  std::size_t n_;
  int iters_;
};

// Throws std::invalid_argument for the affine context on degree >= 2.
double norm_in_context(const CoeffSeq& x, const NormContext& ctx);

// 2^{r-1}(||x||^r + ||y||^r) - ||x+y||^r - C ||x-y||^r; >= 0 iff LWP holds
// for the pair.
double lwp_residual(const CoeffSeq& x, const CoeffSeq& y, const WplParams& params,
                    const NormContext& ctx);

// Largest C for which the pair satisfies LWP; may be <= 0. Throws
// std::invalid_argument when ||x - y|| = 0.
double lwp_max_constant(const CoeffSeq& x, const CoeffSeq& y, double r,
                        const NormContext& ctx);

// ||x+y||^r + C ||x-y||^r - 2^{r-1}(||x||^r + ||y||^r); >= 0 iff UWP holds
// for the pair.
double uwp_residual(const CoeffSeq& x, const CoeffSeq& y, const WplParams& params,
                    const NormContext& ctx);

enum class PythSide { Lower, Upper };

// Lower: ||x+y||^r - ||x||^r - K ||y||^r. Upper: the negation. >= 0 iff the
// chosen inequality holds. Orthogonality of x and y is the caller's claim.
double pythagorean_residual(const CoeffSeq& x, const CoeffSeq& y,
                            const PythParams& params, PythSide side,
                            const NormContext& ctx);

// C / (2^{r-1} - 1).
double pyth_constant_from_wpl(double C, double r);

struct CurvePoint {
  Complex parameter;
  double value = 0.0;
};

using Curve = std::vector<CurvePoint>;

struct CurveSummary {
  double min = 0.0;
  double max = 0.0;
  Complex argmin;
  Complex argmax;
};

CurveSummary summarize(const Curve& curve);

// 10^0, 10^-1, ..., 10^-8.
std::vector<Complex> default_log_grid();

// (||1 + cz||^r - ||1||^r) / ||cz||^r = ((1+|c|)^r - 1) / |c|^r in the
// affine multiplier context. Rejects r <= 1 and c = 0.
Curve upyth_ratio_curve(double r, const std::vector<Complex>& c_grid);

// (||(1+z) + c(1-z)||^r - ||1+z||^r) / ||c(1-z)||^r in the affine multiplier
// context. Real c must lie in (0, 1), where the ratio vanishes identically;
// non-real c needs 0 < |c| < 1.
Curve lpyth_ratio_curve(double r, const std::vector<Complex>& c_grid);

// UWP residual for the pair x = 1 + t z, y = 1 - t z over a grid of t, in the
// affine multiplier context. Negative entries are UWP failures; for every
// C > 0 they appear once t is small enough.
Curve uwp_failure_curve(const WplParams& params, const std::vector<Complex>& t_grid);

// lwp_max_constant(1, z, r) over a grid of exponents.
Curve lwp_failure_curve(const std::vector<double>& r_grid);

}  // namespace lpa
