#pragma once

// Coefficient sequences of analytic functions on the unit disk, normed by the
// l^p norm of their Maclaurin coefficients.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace lpa {

using Complex = std::complex<double>;

// A validated exponent 1 < p < inf together with its Hölder conjugate.
class Exponent {
 public:
  // Throws std::invalid_argument unless 1 < p < inf.
  explicit Exponent(double p);

  double p() const { return p_; }
  double conj() const { return conj_; }

  // The exponent with p and p' exchanged.
  Exponent dual() const { return Exponent(conj_, p_); }

 private:
  Exponent(double p, double conj) : p_(p), conj_(conj) {}

  double p_;
  double conj_;
};

Exponent holder_conjugate(double p);

// Finite truncation a_0 + a_1 z + ... + a_N z^N. Trailing zeros are allowed;
// equality compares the normalized (trailing-zero-stripped) forms.
class CoeffSeq {
 public:
  CoeffSeq() = default;
  explicit CoeffSeq(std::vector<Complex> coeffs);
  CoeffSeq(std::initializer_list<Complex> coeffs);

  static CoeffSeq zero(std::size_t length = 0);
  static CoeffSeq monomial(Complex gamma, std::size_t k);
  static CoeffSeq from_real(std::span<const double> coeffs);

  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  // Coefficient k, or zero past the stored length.
  Complex coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex operator[](std::size_t k) const { return coeffs_[k]; }

  std::span<const Complex> coeffs() const { return coeffs_; }
  const std::vector<Complex>& vec() const { return coeffs_; }

  bool is_zero() const;
  // Degree of the normalized form; nullopt for the zero sequence.
  std::optional<std::size_t> degree() const;
  // Number of nonzero coefficients.
  std::size_t support_size() const;
  bool is_monomial() const { return support_size() == 1; }
  // True iff every coefficient is real (zero imaginary part) and >= 0.
  bool is_nonnegative() const;

  CoeffSeq normalized() const;
  // First `length` coefficients, zero-padded if the sequence is shorter.
  CoeffSeq truncated(std::size_t length) const;

  CoeffSeq& operator+=(const CoeffSeq& rhs);
  CoeffSeq& operator-=(const CoeffSeq& rhs);
  CoeffSeq& operator*=(Complex c);

  friend bool operator==(const CoeffSeq& a, const CoeffSeq& b);

 private:
  std::vector<Complex> coeffs_;
};

CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b);
CoeffSeq operator-(CoeffSeq a, const CoeffSeq& b);
CoeffSeq operator*(Complex c, CoeffSeq a);
CoeffSeq operator*(CoeffSeq a, Complex c);

// (sum |a_k|^p)^{1/p}, computed with max-scaling so a single nonzero
// coefficient returns its modulus exactly.
double p_norm(const CoeffSeq& f, const Exponent& p);
// Same for any 1 <= q <= inf (q = inf gives the sup norm).
double lq_norm(std::span<const Complex> a, double q);
double lq_norm(const CoeffSeq& f, double q);
double sup_norm(const CoeffSeq& f);

// Bilinear pairing sum f_k g_k over overlapping indices (no conjugation).
Complex pairing(const CoeffSeq& f, const CoeffSeq& g);

// alpha^<s> = |alpha|^s e^{-i arg alpha}, with 0^<s> = 0.
Complex s_power(Complex alpha, double s);
CoeffSeq s_power(const CoeffSeq& f, double s);

// z^k f.
CoeffSeq shift(const CoeffSeq& f, std::size_t k);

// Horner evaluation of the polynomial at w.
Complex evaluate(const CoeffSeq& f, Complex w);

// a_k -> a_k u^k. Throws std::invalid_argument unless | |u| - 1 | <= 1e-12.
CoeffSeq rotate(const CoeffSeq& f, Complex u);

}  // namespace lpa
