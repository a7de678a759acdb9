#pragma once

// Multiplication operators on l^p_A: finite Toeplitz sections, certified
// two-sided multiplier-norm brackets, difference quotients, and norm bounds
// for coefficient functionals on the multiplier space.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "lpa/seqspace.hpp"

namespace lpa {

// Exact Cauchy product; the output has length size(phi) + size(f) - 1.
CoeffSeq apply(const CoeffSeq& phi, const CoeffSeq& f);

// (n+1) x (n+1) lower-triangular section A[i][j] = phi_{i-j} of M_phi.
class ToeplitzSection {
 public:
  ToeplitzSection(CoeffSeq symbol, std::size_t n);

  std::size_t size() const { return size_; }
  const CoeffSeq& symbol() const { return symbol_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return i >= j ? symbol_.coeff(i - j) : Complex{};
  }
  bool is_zero() const;

  // A x and A^T y (plain transpose, matching the bilinear pairing).
  std::vector<Complex> multiply(std::span<const Complex> x) const;
  std::vector<Complex> multiply_transpose(std::span<const Complex> y) const;

 private:
  CoeffSeq symbol_;  // truncated to the section window
  std::size_t size_;
};

ToeplitzSection toeplitz_section(const CoeffSeq& phi, std::size_t n);

struct SectionEstimate {
  // ||A x||_p for the best final iterate, with ||x||_p = 1.
  double estimate = 0.0;
  CoeffSeq witness;
  // Best-so-far estimate after each iteration of the winning start.
  std::vector<double> history;
  int iterations = 0;
};

// Boyd-type fixed-point iteration for ||A||_{p->p}: y = A x, u = y^<p-1>,
// z = A^T u, x <- z^<p'-1> / ||.||_p. Every returned estimate is a certified
// lower bound. Starts from e0, the truncated geometric series of
// phi / ||phi||_1 and a seeded random combination of its powers; the best is
// kept. Every start is a polynomial in phi, so rotating the symbol by u
// (phi_k -> u^k phi_k) leaves the estimate unchanged. Stops early once successive
// estimates differ by less than 1e-12. Throws std::domain_error if the iterate
// collapses to zero, which only happens for the zero matrix.
SectionEstimate section_pnorm_lower(const ToeplitzSection& a,
                                    const Exponent& p, int iters,
                                    std::uint64_t seed = 1);

enum class BracketKind { Multiplier, Functional };

struct NormBracket {
  BracketKind kind = BracketKind::Multiplier;
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  // Multiplier brackets: lower == ||phi * w||_p / ||w||_p.
  // Functional brackets: lower == |<lambda, w>| / ||w||_1.
  CoeffSeq lower_witness;
  std::string lower_method;  // "boyd-section" | "test-vector" | "p-norm"
  std::string upper_method;  // "ell1" | "p-prime-norm" | "p-norm"
  // The upper bound is the exact norm (nonnegative multiplier symbols).
  bool tight = false;
};

inline constexpr std::size_t kDefaultSectionSize = 256;
inline constexpr int kDefaultIterations = 500;

// lower = best certified ratio ||phi f||_p / ||f||_p over the witnesses f = 1
// (gives ||phi||_p), a dual witness (gives at least ||phi||_{p'}), the Boyd
// iterate of the size-n section and any caller-supplied test vectors;
// upper = ||phi||_1, exact when every coefficient is real and nonnegative.
NormBracket multiplier_norm_bounds(
    const CoeffSeq& phi, const Exponent& p,
    std::size_t n = kDefaultSectionSize, int iters = kDefaultIterations,
    const std::vector<CoeffSeq>& test_vectors = {}, std::uint64_t seed = 1);

// p_norm(phi f) / p_norm(f).
double multiplier_ratio(const CoeffSeq& phi, const CoeffSeq& f,
                        const Exponent& p);

struct ExtremalityGap {
  double gap_lower = 0.0;  // bracket.lower - ||phi||_p
  bool is_monomial = false;
  NormBracket bracket;
};

ExtremalityGap extremality_gap(const CoeffSeq& phi, const Exponent& p,
                               std::size_t n = kDefaultSectionSize,
                               int iters = kDefaultIterations);

struct CoefficientBoundCheck {
  bool holds = true;
  // Partial sums |phi_0| + ... + |phi_m| against upper (m+1)^{1/p'}.
  std::vector<double> lhs;
  std::vector<double> rhs;
};

// |phi_0| + ... + |phi_m| <= ||phi||_M (m+1)^{1/p'} for m <= deg phi, with
// ||phi||_M replaced by its upper bound ||phi||_1. A failure means an
// implementation bug, since the inequality is implied.
CoefficientBoundCheck coefficient_bound_check(const CoeffSeq& phi,
                                              const Exponent& p);

// Q_w f = (f - f(w)) / (z - w) by synthetic division.
CoeffSeq difference_quotient(const CoeffSeq& f, Complex w);

struct DqNormCheck {
  bool holds = false;
  double quotient_lower = 0.0;  // certified lower bound of ||Q_w phi||_M
  double bound = 0.0;           // (upper(phi) + |phi(w)|) / (1 - |w|)
};

// Requires |w| < 1.
DqNormCheck dq_norm_check(const CoeffSeq& phi, Complex w, const Exponent& p,
                          std::size_t n = kDefaultSectionSize,
                          int iters = kDefaultIterations);

// Bracket for the norm of lambda as a functional on the multiplier space:
// upper = min(||lambda||_{p'}, ||lambda||_p); lower = max |<lambda, phi>| /
// ||phi||_1 over the monomials z^k (together giving ||lambda||_inf) and the
// supplied test multipliers.
NormBracket functional_norm_bounds(const CoeffSeq& lambda, const Exponent& p,
                                   const std::vector<CoeffSeq>& test_multipliers = {});

struct PointGrowthCheck {
  bool holds = false;
  double value = 0.0;  // |lambda(w)|
  double bound = 0.0;  // upper / (1 - |w|^p)^{1/p}
  double upper = 0.0;
  // upper / (1 - |w|): the same argument run through ||k_w||_1, the
  // multiplier-norm bound of the point-evaluation kernel.
  double kernel_l1_bound = 0.0;
};

// |lambda(w)| <= upper / (1 - |w|^p)^{1/p} with the certified upper bound of
// functional_norm_bounds. Requires |w| < 1.
PointGrowthCheck point_growth_check(const CoeffSeq& lambda, const Exponent& p,
                                    Complex w);

struct DqFunctionalIdentity {
  Complex lhs;  // <Q_w lambda, phi>
  Complex rhs;  // sum_{k>=0} w^k <lambda, z^{k+1} phi>
  bool holds = false;
};

// Both sides are finite sums; holds iff |lhs - rhs| <= 1e-12 (1 + |lhs|).
DqFunctionalIdentity dq_functional_identity(const CoeffSeq& lambda,
                                            const CoeffSeq& phi, Complex w);

}  // namespace lpa
