#include "lpa/seqspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lpa {

namespace {

void require_finite(const std::vector<Complex>& coeffs) {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!std::isfinite(coeffs[k].real()) || !std::isfinite(coeffs[k].imag())) {
      throw std::invalid_argument("coefficient " + std::to_string(k) +
                                  " is not finite");
    }
  }
}

}  // namespace

Exponent::Exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("exponent must satisfy 1 < p < inf, got " +
                                std::to_string(p));
  }
  p_ = p;
  conj_ = p / (p - 1.0);
}

Exponent holder_conjugate(double p) { return Exponent(p); }

CoeffSeq::CoeffSeq(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_);
}

CoeffSeq::CoeffSeq(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) {
  require_finite(coeffs_);
}

CoeffSeq CoeffSeq::zero(std::size_t length) {
  return CoeffSeq(std::vector<Complex>(length));
}

CoeffSeq CoeffSeq::monomial(Complex gamma, std::size_t k) {
  std::vector<Complex> c(k + 1);
  c[k] = gamma;
  return CoeffSeq(std::move(c));
}

CoeffSeq CoeffSeq::from_real(std::span<const double> coeffs) {
  return CoeffSeq(std::vector<Complex>(coeffs.begin(), coeffs.end()));
}

bool CoeffSeq::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](Complex c) { return c == Complex{}; });
}

std::optional<std::size_t> CoeffSeq::degree() const {
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] != Complex{}) return k;
  }
  return std::nullopt;
}

std::size_t CoeffSeq::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(),
                    [](Complex c) { return c != Complex{}; }));
}

bool CoeffSeq::is_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Complex c) {
    return c.imag() == 0.0 && c.real() >= 0.0;
  });
}

CoeffSeq CoeffSeq::normalized() const {
  auto d = degree();
  if (!d) return CoeffSeq{};
  return CoeffSeq(std::vector<Complex>(coeffs_.begin(),
                                       coeffs_.begin() + *d + 1));
}

CoeffSeq CoeffSeq::truncated(std::size_t length) const {
  std::vector<Complex> c(length);
  std::copy_n(coeffs_.begin(), std::min(length, coeffs_.size()), c.begin());
  return CoeffSeq(std::move(c));
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& rhs) {
  if (rhs.size() > coeffs_.size()) coeffs_.resize(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CoeffSeq& CoeffSeq::operator-=(const CoeffSeq& rhs) {
  if (rhs.size() > coeffs_.size()) coeffs_.resize(rhs.size());
  for (std::size_t k = 0; k < rhs.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

CoeffSeq& CoeffSeq::operator*=(Complex c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

bool operator==(const CoeffSeq& a, const CoeffSeq& b) {
  return a.normalized().coeffs_ == b.normalized().coeffs_;
}

CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b) { return a += b; }
CoeffSeq operator-(CoeffSeq a, const CoeffSeq& b) { return a -= b; }
CoeffSeq operator*(Complex c, CoeffSeq a) { return a *= c; }
CoeffSeq operator*(CoeffSeq a, Complex c) { return a *= c; }

double lq_norm(std::span<const Complex> a, double q) {
  double scale = 0.0;
  for (Complex c : a) scale = std::max(scale, std::abs(c));
  if (scale == 0.0 || std::isinf(q)) return scale;
  double sum = 0.0;
  for (Complex c : a) {
    const double m = std::abs(c);
    if (m == 0.0) continue;
    sum += m == scale ? 1.0 : std::pow(m / scale, q);
  }
  if (sum == 1.0) return scale;
  return scale * std::pow(sum, 1.0 / q);
}

double lq_norm(const CoeffSeq& f, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("norm exponent must be >= 1");
  return lq_norm(f.coeffs(), q);
}

double p_norm(const CoeffSeq& f, const Exponent& p) {
  return lq_norm(f.coeffs(), p.p());
}

double sup_norm(const CoeffSeq& f) {
  return lq_norm(f.coeffs(), std::numeric_limits<double>::infinity());
}

Complex pairing(const CoeffSeq& f, const CoeffSeq& g) {
  const std::size_t n = std::min(f.size(), g.size());
  Complex sum{};
  for (std::size_t k = 0; k < n; ++k) sum += f[k] * g[k];
  return sum;
}

Complex s_power(Complex alpha, double s) {
  const double r = std::abs(alpha);
  if (r == 0.0) return Complex{};
  // r^s e^{-i theta} = r^{s-1} conj(alpha)
  return std::pow(r, s - 1.0) * std::conj(alpha);
}

CoeffSeq s_power(const CoeffSeq& f, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("s_power requires s > 0");
  std::vector<Complex> c(f.size());
  for (std::size_t k = 0; k < f.size(); ++k) c[k] = s_power(f[k], s);
  return CoeffSeq(std::move(c));
}

CoeffSeq shift(const CoeffSeq& f, std::size_t k) {
  std::vector<Complex> c(f.size() + k);
  std::copy(f.vec().begin(), f.vec().end(), c.begin() + k);
  return CoeffSeq(std::move(c));
}

Complex evaluate(const CoeffSeq& f, Complex w) {
  Complex acc{};
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * w + f[k];
  return acc;
}

CoeffSeq rotate(const CoeffSeq& f, Complex u) {
  if (std::abs(std::abs(u) - 1.0) > 1e-12) {
    throw std::invalid_argument("rotate requires a unimodular factor");
  }
  std::vector<Complex> c(f.size());
  Complex power{1.0, 0.0};
  for (std::size_t k = 0; k < f.size(); ++k) {
    c[k] = f[k] * power;
    power *= u;
  }
  return CoeffSeq(std::move(c));
}

}  // namespace lpa
