#pragma once

// Portable seeded random numbers. The standard distributions are not
// specified bit-for-bit across library implementations, so uniform and
// normal variates are derived directly from the 64-bit engine output.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "lpa/seqspace.hpp"

namespace lpa {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  double normal() {
    double u = uniform();
    while (u == 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(2.0 * std::numbers::pi * v);
  }

  Complex complex_normal() { return {normal(), normal()}; }

  Complex unimodular() {
    return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
  }

  // Random complex sequence of the given degree with Gaussian coefficients.
  CoeffSeq sequence(std::size_t degree) {
    std::vector<Complex> c(degree + 1);
    for (auto& a : c) a = complex_normal();
    return CoeffSeq(std::move(c));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lpa
