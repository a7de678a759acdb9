#pragma once

// Birkhoff-James orthogonality in l^p_A: the James criterion, the defining
// extremal problem as an independent oracle, p-inner certification, and the
// single-zero p-inner family.

#include <optional>
#include <stdexcept>
#include <vector>

#include "lpa/seqspace.hpp"

namespace lpa {

inline constexpr double kDefaultOrthoTol = 1e-9;

// Raised when the variational minimizer exhausts its iteration cap.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// sum_k f_k^<p-1> g_k, i.e. sum |f_k|^{p-2} conj(f_k) g_k. Throws
// std::invalid_argument when f is identically zero.
Complex bj_sum(const CoeffSeq& f, const CoeffSeq& g, const Exponent& p);

// Normalization for the relative tolerance: ||f||_p^{p-1} ||g||_p.
double bj_scale(const CoeffSeq& f, const CoeffSeq& g, const Exponent& p);

struct VariationalResult {
  Complex beta_star;
  double min_value = 0.0;
  // |grad| of beta -> ||f + beta g||_p at beta_star, for the problem scaled so
  // that ||f||_p = ||g||_p = 1.
  double gradient_norm = 0.0;
  int iterations = 0;
};

inline constexpr int kVariationalIterationCap = 10000;

// Minimizes beta -> ||f + beta g||_p over complex beta. The objective is
// strictly convex, so the minimizer is global. Damped Newton on the two real
// variables, with coordinate golden-section steps when the Hessian is
// unusable. `tol` bounds the gradient of the normalized problem; the search
// also stops once the objective stalls at working precision, in which case
// gradient_norm may exceed tol. Throws ConvergenceError at the iteration cap.
VariationalResult variational_min(const CoeffSeq& f, const CoeffSeq& g,
                                  const Exponent& p, double tol = 1e-10);

struct OrthoReport {
  Complex bj_sum;
  std::optional<Complex> beta_star;
  std::optional<double> min_value;
  bool orthogonal = false;
  // |bj_sum| / (||f||_p^{p-1} ||g||_p); zero when g = 0.
  double relative_residual = 0.0;
};

// Verdict |bj_sum| <= tol ||f||_p^{p-1} ||g||_p. With `with_variational` the
// report also carries the oracle minimizer.
OrthoReport is_bj_orthogonal(const CoeffSeq& f, const CoeffSeq& g,
                             const Exponent& p, double tol = kDefaultOrthoTol,
                             bool with_variational = false);

struct InnerReport {
  bool p_inner = false;
  // Relative residual for shifts k = 1..max_shift.
  std::vector<double> residuals;
};

// Checks f against z^k f for k = 1..max_shift. This is a finite certificate
// for a condition over all k >= 1, so a pass is heuristic.
InnerReport is_p_inner(const CoeffSeq& f, const Exponent& p, int max_shift,
                       double tol = kDefaultOrthoTol);

// Degree-N truncation of B(z) = (1 - z/w) / (1 - w^<p'-1> z):
// b_0 = 1, b_k = q^{k-1} (q - 1/w) with q = w^<p'-1>. Requires 0 < |w| < 1.
CoeffSeq single_zero_inner(Complex w, const Exponent& p, std::size_t degree);

// Closed form of ||B||_p^p = 1 + (1 - |w|^{p'})^{p-1} / |w|^p.
double single_zero_inner_norm_pow(Complex w, const Exponent& p);

// Exact p-th power mass dropped by truncating B at `degree`:
// sum_{k > N} |b_k|^p = |q - 1/w|^p |q|^{pN} / (1 - |q|^p), with |q|^p = |w|^{p'}.
double single_zero_inner_tail_pow(Complex w, const Exponent& p,
                                  std::size_t degree);

}  // namespace lpa
