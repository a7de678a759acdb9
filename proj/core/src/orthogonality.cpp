#include "lpa/orthogonality.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace lpa {

Complex bj_sum(const CoeffSeq& f, const CoeffSeq& g, const Exponent& p) {
  if (f.is_zero()) {
    throw std::invalid_argument("bj_sum: f is identically zero");
  }
  // <g, f^<p-1>>; the <p-1> form is continuous at f_k = 0 for every p > 1.
  return pairing(g, s_power(f, p.p() - 1.0));
}

double bj_scale(const CoeffSeq& f, const CoeffSeq& g, const Exponent& p) {
  return std::pow(p_norm(f, p), p.p() - 1.0) * p_norm(g, p);
}

namespace {

// Objective sum |f_k + b g_k|^p of the normalized problem, with derivatives.
class ExtremalObjective {
 public:
  ExtremalObjective(std::vector<Complex> f, std::vector<Complex> g, double p)
      : f_(std::move(f)), g_(std::move(g)), p_(p) {
    g_.resize(std::max(f_.size(), g_.size()));
    f_.resize(g_.size());
  }

  double value(Complex b) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < f_.size(); ++k) {
      sum += std::pow(std::abs(f_[k] + b * g_[k]), p_);
    }
    return sum;
  }

  // S = sum h_k^<p-1> g_k; the real gradient of value() is p (Re S, -Im S).
  Complex criterion(Complex b) const {
    Complex sum{};
    for (std::size_t k = 0; k < f_.size(); ++k) {
      sum += s_power(f_[k] + b * g_[k], p_ - 1.0) * g_[k];
    }
    return sum;
  }

  // Hessian of value() in (Re b, Im b). Returns false where it is unbounded
  // (a vanishing h_k with p < 2).
  bool hessian(Complex b, std::array<double, 3>& hxx_hxy_hyy) const {
    double hxx = 0.0, hxy = 0.0, hyy = 0.0;
    for (std::size_t k = 0; k < f_.size(); ++k) {
      const double gm2 = std::norm(g_[k]);
      if (gm2 == 0.0) continue;
      const Complex h = f_[k] + b * g_[k];
      const double hm = std::abs(h);
      if (hm == 0.0) {
        if (p_ < 2.0) return false;
        if (p_ == 2.0) {
          hxx += 2.0 * gm2;
          hyy += 2.0 * gm2;
        }
        continue;
      }
      const double w = p_ * std::pow(hm, p_ - 2.0) * gm2;
      const Complex v = std::conj(g_[k]) * h / (std::sqrt(gm2) * hm);
      hxx += w * (1.0 + (p_ - 2.0) * v.real() * v.real());
      hxy += w * ((p_ - 2.0) * v.real() * v.imag());
      hyy += w * (1.0 + (p_ - 2.0) * v.imag() * v.imag());
    }
    hxx_hxy_hyy = {hxx, hxy, hyy};
    return std::isfinite(hxx) && std::isfinite(hxy) && std::isfinite(hyy);
  }

  double p() const { return p_; }

 private:
  std::vector<Complex> f_;
  std::vector<Complex> g_;
  double p_;
};

// Golden-section minimization of t -> obj(b + t dir) for a convex objective.
// Returns the improved point, or b itself if no decrease was found.
Complex golden_line_min(const ExtremalObjective& obj, Complex b, Complex dir,
                        double initial_step) {
  const double f0 = obj.value(b);
  auto at = [&](double t) { return obj.value(b + t * dir); };

  // Pick the downhill side, then expand until the objective rises again.
  double step = initial_step;
  double sign = 0.0;
  for (int i = 0; i < 60 && sign == 0.0; ++i, step *= 0.5) {
    if (at(step) < f0) sign = 1.0;
    else if (at(-step) < f0) sign = -1.0;
  }
  if (sign == 0.0) return b;
  step *= 2.0;
  double lo = 0.0, hi = sign * step;
  double f_hi = at(hi);
  for (int i = 0; i < 200; ++i) {
    const double next = hi * 2.0;
    const double f_next = at(next);
    if (f_next >= f_hi) {
      hi = next;
      break;
    }
    lo = hi / 2.0;
    hi = next;
    f_hi = f_next;
  }

  constexpr double kInvPhi = 0.6180339887498949;
  double a = std::min(lo, hi), c = std::max(lo, hi);
  double x1 = c - kInvPhi * (c - a), x2 = a + kInvPhi * (c - a);
  double f1 = at(x1), f2 = at(x2);
  for (int i = 0; i < 200 && (c - a) > 1e-16 * (1.0 + std::abs(a) + std::abs(c));
       ++i) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - kInvPhi * (c - a);
      f1 = at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (c - a);
      f2 = at(x2);
    }
  }
  const double t = 0.5 * (a + c);
  return at(t) < f0 ? b + t * dir : b;
}

}  // namespace

VariationalResult variational_min(const CoeffSeq& f, const CoeffSeq& g,
                                  const Exponent& p, double tol) {
  if (g.is_zero()) {
    throw std::invalid_argument("variational_min: g is identically zero");
  }
  const double nf = p_norm(f, p);
  const double ng = p_norm(g, p);
  if (nf == 0.0) {
    // ||beta g|| is minimized at beta = 0.
    return {Complex{}, 0.0, 0.0, 0};
  }

  std::vector<Complex> fs(f.vec()), gs(g.vec());
  for (auto& a : fs) a /= nf;
  for (auto& a : gs) a /= ng;
  const ExtremalObjective obj(std::move(fs), std::move(gs), p.p());
  const double pp = p.p();

  auto gradient_norm = [&](Complex b) {
    const double value = obj.value(b);
    return std::abs(obj.criterion(b)) / std::pow(value, (pp - 1.0) / pp);
  };

  Complex b{};
  int it = 0, flat = 0;
  double gn = gradient_norm(b);
  for (; it < kVariationalIterationCap && gn > tol; ++it) {
    const double fb = obj.value(b);
    const Complex s = obj.criterion(b);
    const double gx = pp * s.real();
    const double gy = -pp * s.imag();

    bool moved = false;
    std::array<double, 3> h{};
    if (obj.hessian(b, h)) {
      const double det = h[0] * h[2] - h[1] * h[1];
      const double trace = h[0] + h[2];
      if (det > 1e-14 * trace * trace && trace > 0.0) {
        const double dx = -(h[2] * gx - h[1] * gy) / det;
        const double dy = -(-h[1] * gx + h[0] * gy) / det;
        const double slope = gx * dx + gy * dy;
        double t = 1.0;
        for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
          const Complex trial = b + t * Complex{dx, dy};
          if (trial == b) break;
          if (obj.value(trial) <= fb + 1e-4 * t * slope) {
            b = trial;
            moved = true;
            break;
          }
        }
      }
    }
    if (!moved) {
      const double step = std::max(1e-3, 1e-3 * std::abs(b));
      const Complex before = b;
      b = golden_line_min(obj, b, Complex{1.0, 0.0}, step);
      b = golden_line_min(obj, b, Complex{0.0, 1.0}, step);
      if (b == before) {
        // No representable decrease along either coordinate: the minimizer
        // is resolved to working precision.
        gn = gradient_norm(b);
        break;
      }
    }
    gn = gradient_norm(b);
    // Near a vanishing term with p < 2 the gradient varies like |h|^{p-1}
    // and cannot reach tol in double precision; stop once the objective
    // itself has stopped moving.
    if (fb - obj.value(b) <= 4.0 * std::numeric_limits<double>::epsilon() * fb) {
      if (++flat >= 3) break;
    } else {
      flat = 0;
    }
  }
  if (gn > tol && it >= kVariationalIterationCap) {
    throw ConvergenceError("variational_min: iteration cap reached");
  }

  VariationalResult result;
  result.beta_star = b * (nf / ng);
  result.min_value = nf * std::pow(obj.value(b), 1.0 / pp);
  result.gradient_norm = gn;
  result.iterations = it;
  return result;
}

OrthoReport is_bj_orthogonal(const CoeffSeq& f, const CoeffSeq& g,
                             const Exponent& p, double tol,
                             bool with_variational) {
  OrthoReport report;
  report.bj_sum = bj_sum(f, g, p);
  const double scale = bj_scale(f, g, p);
  report.relative_residual = scale > 0.0 ? std::abs(report.bj_sum) / scale : 0.0;
  report.orthogonal = std::abs(report.bj_sum) <= tol * scale;
  if (with_variational && !g.is_zero()) {
    const auto v = variational_min(f, g, p);
    report.beta_star = v.beta_star;
    report.min_value = v.min_value;
  }
  return report;
}

InnerReport is_p_inner(const CoeffSeq& f, const Exponent& p, int max_shift,
                       double tol) {
  if (max_shift < 1) {
    throw std::invalid_argument("is_p_inner: max_shift must be >= 1");
  }
  if (f.is_zero()) {
    throw std::invalid_argument("is_p_inner: f is identically zero");
  }
  InnerReport report;
  report.p_inner = true;
  // The criterion weights f^<p-1> are shared across shifts.
  const CoeffSeq weights = s_power(f, p.p() - 1.0);
  const double scale = std::pow(p_norm(f, p), p.p());
  for (int k = 1; k <= max_shift; ++k) {
    const Complex sum = pairing(shift(f, static_cast<std::size_t>(k)), weights);
    const double residual = std::abs(sum) / scale;
    report.residuals.push_back(residual);
    if (!(residual <= tol)) report.p_inner = false;
  }
  return report;
}

namespace {

void require_single_zero(Complex w) {
  const double m = std::abs(w);
  if (!(m > 0.0) || !(m < 1.0)) {
    throw std::invalid_argument("single_zero_inner requires 0 < |w| < 1");
  }
}

}  // namespace

CoeffSeq single_zero_inner(Complex w, const Exponent& p, std::size_t degree) {
  require_single_zero(w);
  if (degree < 1) {
    throw std::invalid_argument("single_zero_inner requires degree >= 1");
  }
  const Complex q = s_power(w, p.conj() - 1.0);
  const Complex lead = q - 1.0 / w;
  std::vector<Complex> b(degree + 1);
  b[0] = 1.0;
  Complex power{1.0, 0.0};
  for (std::size_t k = 1; k <= degree; ++k) {
    b[k] = power * lead;
    power *= q;
  }
  return CoeffSeq(std::move(b));
}

double single_zero_inner_norm_pow(Complex w, const Exponent& p) {
  require_single_zero(w);
  const double m = std::abs(w);
  return 1.0 + std::pow(1.0 - std::pow(m, p.conj()), p.p() - 1.0) /
                   std::pow(m, p.p());
}

double single_zero_inner_tail_pow(Complex w, const Exponent& p,
                                  std::size_t degree) {
  require_single_zero(w);
  const Complex q = s_power(w, p.conj() - 1.0);
  const double ratio = std::pow(std::abs(w), p.conj());
  return std::pow(std::abs(q - 1.0 / w), p.p()) *
         std::pow(ratio, static_cast<double>(degree)) / (1.0 - ratio);
}

}  // namespace lpa
