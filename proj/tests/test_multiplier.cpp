#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lpa/json_io.hpp"
#include "lpa/multiplier.hpp"
#include "lpa/orthogonality.hpp"
#include "lpa/rng.hpp"
#include "oracles.hpp"

using namespace lpa;
using doctest::Approx;

TEST_CASE("apply is the exact Cauchy product") {
  CHECK(apply(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0}) == CoeffSeq{1.0, 1.0});
  CHECK(apply(CoeffSeq{1.0, 2.0}, CoeffSeq{3.0, 0.0, 1.0}) == CoeffSeq{3.0, 6.0, 1.0, 2.0});
  CHECK(apply(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, 1.0}).size() == 3u);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const CoeffSeq f = rng.sequence(7);
    const std::size_t k = static_cast<std::size_t>(rng.integer(0, 5));
    CHECK(apply(CoeffSeq::monomial(1.0, k), f) == shift(f, k));
  }
}

TEST_CASE("lacunary gap identity") {
  Rng rng(17);
  for (int i = 0; i < 100; ++i) {
    const Complex c = rng.complex_normal();
    const Exponent p(rng.uniform(1.1, 5.0));
    std::vector<Complex> even(13);
    for (std::size_t k = 0; k < even.size(); k += 2) even[k] = rng.complex_normal();
    const CoeffSeq f(even);
    const double lhs = std::pow(p_norm(apply(CoeffSeq{1.0, c}, f), p), p.p());
    const double rhs = (1.0 + std::pow(std::abs(c), p.p())) * std::pow(p_norm(f, p), p.p());
    CHECK(lhs == Approx(rhs).epsilon(1e-12));
    CHECK(lhs >= std::pow(p_norm(f, p), p.p()));
  }
}

TEST_CASE("toeplitz_section") {
  const auto a = toeplitz_section(CoeffSeq{1.0, 1.0}, 1);
  CHECK(a.size() == 2u);
  CHECK(a(0, 0) == Complex{1.0});
  CHECK(a(0, 1) == Complex{});
  CHECK(a(1, 0) == Complex{1.0});
  CHECK(a(1, 1) == Complex{1.0});
  CHECK(toeplitz_section(CoeffSeq::monomial(1.0, 2), 1).is_zero());
  const auto b = toeplitz_section(CoeffSeq{1.0, 2.0, 3.0}, 2);
  const double expect[3][3] = {{1, 0, 0}, {2, 1, 0}, {3, 2, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(b(i, j) == Complex{expect[i][j]});

  // multiply / multiply_transpose agree with the dense entries.
  Rng rng(6);
  const auto s = toeplitz_section(rng.sequence(4), 6);
  std::vector<Complex> x(7), y(7);
  for (auto& v : x) v = rng.complex_normal();
  for (auto& v : y) v = rng.complex_normal();
  const auto ax = s.multiply(x), aty = s.multiply_transpose(y);
  for (std::size_t i = 0; i < 7; ++i) {
    Complex r{}, t{};
    for (std::size_t j = 0; j < 7; ++j) {
      r += s(i, j) * x[j];
      t += s(j, i) * y[j];
    }
    CHECK(std::abs(ax[i] - r) < 1e-12);
    CHECK(std::abs(aty[i] - t) < 1e-12);
  }
}

TEST_CASE("section_pnorm_lower") {
  SUBCASE("1x1") {
    const auto e = section_pnorm_lower(toeplitz_section(CoeffSeq{1.0, 1.0}, 0), Exponent(3.0), 10);
    CHECK(e.estimate == Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("2x2 at p = 2 is the golden ratio") {
    const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(oracle::largest_singular_value_2x2(1, 0, 1, 1) == Approx(golden).epsilon(1e-15));
    const auto e = section_pnorm_lower(toeplitz_section(CoeffSeq{1.0, 1.0}, 1), Exponent(2.0), 500);
    CHECK(std::abs(e.estimate - golden) < 1e-10);
  }
  SUBCASE("scaled monomial") {
    for (std::size_t n : {3u, 10u, 40u}) {
      for (double pv : {1.3, 2.0, 4.5}) {
        const auto e = section_pnorm_lower(
            toeplitz_section(CoeffSeq::monomial({1.5, -2.0}, 2), n), Exponent(pv), 50);
        CHECK(e.estimate == Approx(2.5).epsilon(1e-12));
      }
    }
  }
  SUBCASE("matches brute-force maximization on small sections") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (double pv : {1.5, 3.0}) {
        const std::vector<double> sym{1.0, 1.0};
        const double brute = oracle::brute_force_section_norm(sym, n, pv);
        const auto e = section_pnorm_lower(toeplitz_section(CoeffSeq{1.0, 1.0}, n), Exponent(pv), 2000);
        CHECK(e.estimate >= brute - 1e-9);
        CHECK(e.estimate <= brute * (1.0 + 1e-6));
      }
      const std::vector<double> sym{1.0, 2.0, 3.0};
      const double brute = oracle::brute_force_section_norm(sym, n, 1.7);
      const auto e = section_pnorm_lower(toeplitz_section(CoeffSeq{1.0, 2.0, 3.0}, n), Exponent(1.7), 2000);
      CHECK(e.estimate >= brute - 1e-9);
    }
  }
  SUBCASE("estimate history is nondecreasing and the witness reproduces it") {
    Rng rng(12);
    for (int i = 0; i < 10; ++i) {
      const auto sec = toeplitz_section(rng.sequence(3), 20);
      const Exponent p(rng.uniform(1.2, 4.0));
      const auto e = section_pnorm_lower(sec, p, 300, static_cast<std::uint64_t>(i));
      for (std::size_t k = 1; k < e.history.size(); ++k) CHECK(e.history[k] >= e.history[k - 1]);
      CHECK(lq_norm(e.witness, p.p()) == Approx(1.0).epsilon(1e-12));
      CHECK(lq_norm(sec.multiply(e.witness.vec()), p.p()) == Approx(e.estimate).epsilon(1e-12));
      CHECK(e.estimate <= lq_norm(sec.symbol(), 1.0) + 1e-10);
    }
  }
  SUBCASE("zero matrix collapses") {
    CHECK_THROWS_AS(section_pnorm_lower(toeplitz_section(CoeffSeq::monomial(1.0, 3), 1), Exponent(2.0), 5),
                    std::domain_error);
    CHECK_THROWS_AS(section_pnorm_lower(toeplitz_section(CoeffSeq{1.0}, 1), Exponent(2.0), 0),
                    std::invalid_argument);
  }
}

TEST_CASE("section estimates are monotone in n and bounded by ||phi||_1") {
  for (const CoeffSeq& phi : {CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, 2.0, 3.0},
                              CoeffSeq{Complex{1.0, 1.0}, -0.5, Complex{0.0, 0.3}}}) {
    for (double pv : {1.5, 3.0}) {
      double prev = 0.0;
      for (std::size_t n : {4u, 8u, 16u, 32u, 64u}) {
        const double e = section_pnorm_lower(toeplitz_section(phi, n), Exponent(pv), 500).estimate;
        CHECK(e >= prev - 1e-10);
        CHECK(e <= lq_norm(phi, 1.0) + 1e-10);
        prev = e;
      }
    }
  }
}

TEST_CASE("multiplier_norm_bounds") {
  SUBCASE("affine symbols approach |alpha| + |beta|") {
    const Complex alpha{0.6, -0.8}, beta{1.5, 2.0};
    const Exponent p(1.5);
    const auto coarse = multiplier_norm_bounds(CoeffSeq{alpha, beta}, p, 16, 500);
    const auto fine = multiplier_norm_bounds(CoeffSeq{alpha, beta}, p, 256, 500);
    CHECK(coarse.upper == Approx(3.5).epsilon(1e-15));
    CHECK(fine.lower >= coarse.lower - 1e-12);
    CHECK(fine.lower <= fine.upper);
    CHECK(3.5 - fine.lower < 0.05);
  }
  SUBCASE("monomials are exact at every n") {
    for (std::size_t n : {0u, 1u, 5u, 64u}) {
      const auto b = multiplier_norm_bounds(CoeffSeq::monomial({0.0, -3.0}, 4), Exponent(2.7), n, 100);
      CHECK(b.lower == Approx(3.0).epsilon(1e-14));
      CHECK(b.upper == Approx(3.0).epsilon(1e-15));
    }
  }
  SUBCASE("nonnegative symbols are flagged tight") {
    CHECK(multiplier_norm_bounds(CoeffSeq{1.0, 2.0}, Exponent(3.0), 8, 50).tight);
    CHECK_FALSE(multiplier_norm_bounds(CoeffSeq{1.0, -2.0}, Exponent(3.0), 8, 50).tight);
    CHECK_FALSE(multiplier_norm_bounds(CoeffSeq{1.0, Complex{2.0, 1e-20}}, Exponent(3.0), 8, 50).tight);
  }
  SUBCASE("lower bound dominates ||phi||_p and ||phi||_{p'}") {
    Rng rng(31);
    for (int i = 0; i < 30; ++i) {
      const CoeffSeq phi = rng.sequence(static_cast<std::size_t>(rng.integer(0, 6)));
      const Exponent p(rng.uniform(1.2, 5.0));
      const auto b = multiplier_norm_bounds(phi, p, 8, 50, {}, static_cast<std::uint64_t>(i));
      CHECK(b.lower >= p_norm(phi, p) * (1.0 - 1e-12));
      CHECK(b.lower >= p_norm(phi, p.dual()) * (1.0 - 1e-12));
      CHECK(b.lower <= b.upper + 1e-12);
      CHECK(multiplier_ratio(phi, b.lower_witness, p) == Approx(b.lower).epsilon(1e-10));
    }
  }
  SUBCASE("single-zero inner function at p = 4 with its test vector") {
    const Exponent p(4.0);
    const double w = 0.5;
    const auto b = single_zero_inner(w, p, 200);
    const CoeffSeq f{1.0, -std::cbrt(w)};
    const double ratio = (1.0 + 1.0 / std::pow(w, 4)) / (1.0 + std::pow(w, 4.0 / 3.0));
    CHECK(ratio == Approx(12.170).epsilon(1e-4));
    const auto bracket = multiplier_norm_bounds(b, p, 16, 50, {f});
    CHECK(bracket.lower >= std::pow(ratio, 0.25) * (1.0 - 1e-10));
  }
  SUBCASE("rotation leaves the bracket unchanged") {
    for (const CoeffSeq& phi : {CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, 2.0, 3.0}, CoeffSeq{2.0, 0.0, 1.0}}) {
      const Exponent p(3.0);
      const auto base = multiplier_norm_bounds(phi, p, 32, 500);
      for (Complex u : {std::polar(1.0, 0.7), std::polar(1.0, -2.1), Complex{0.0, 1.0}}) {
        const auto rot = multiplier_norm_bounds(rotate(phi, u), p, 32, 500);
        CHECK(std::abs(rot.lower - base.lower) <= 1e-10 * base.lower);
        CHECK(std::abs(rot.upper - base.upper) <= 1e-10 * base.upper);
      }
    }
  }
  SUBCASE("JSON") {
    const nlohmann::json j = multiplier_norm_bounds(CoeffSeq{1.0, 1.0}, Exponent(2.0), 4, 20);
    CHECK(j.at("method").at("upper") == "ell1");
    CHECK(j.at("witness").is_array());
    CHECK(j.at("upper").get<double>() == 2.0);
  }
}

TEST_CASE("dual symmetry for nonnegative symbols") {
  const Exponent p(1.5);
  const auto bp = multiplier_norm_bounds(CoeffSeq{1.0, 1.0}, p, 512, 500);
  const auto bd = multiplier_norm_bounds(CoeffSeq{1.0, 1.0}, p.dual(), 512, 500);
  CHECK(bp.upper == bd.upper);
  CHECK(2.0 - bp.lower < 0.05);
  CHECK(2.0 - bd.lower < 0.05);
}

TEST_CASE("extremality_gap") {
  const auto mono = extremality_gap(CoeffSeq::monomial(3.0, 2), Exponent(1.5), 32, 100);
  CHECK(mono.is_monomial);
  CHECK(std::abs(mono.gap_lower) <= 1e-10);

  const auto affine = extremality_gap(CoeffSeq{1.0, 1.0}, Exponent(1.5), 512, 500);
  CHECK_FALSE(affine.is_monomial);
  CHECK(affine.gap_lower >= 2.0 - std::pow(2.0, 1.0 / 1.5) - 0.05);

  const auto b = extremality_gap(single_zero_inner(0.5, Exponent(4.0), 200), Exponent(4.0), 64, 200);
  CHECK(b.gap_lower > 0.0);
  CHECK_THROWS_AS(extremality_gap(CoeffSeq::zero(2), Exponent(2.0)), std::invalid_argument);
}

TEST_CASE("coefficient_bound_check") {
  const auto c = coefficient_bound_check(CoeffSeq{1.0, 1.0}, Exponent(2.0));
  CHECK(c.holds);
  CHECK(c.lhs.back() == 2.0);
  CHECK(c.rhs.back() == Approx(2.0 * std::sqrt(2.0)));
  CHECK(coefficient_bound_check(CoeffSeq::monomial(-4.0, 3), Exponent(3.0)).holds);
  Rng rng(40);
  for (int i = 0; i < 50; ++i) {
    std::vector<Complex> c2(8);
    for (auto& v : c2) v = rng.uniform();
    CHECK(coefficient_bound_check(CoeffSeq(c2), Exponent(rng.uniform(1.1, 4.0))).holds);
  }
}

TEST_CASE("difference_quotient") {
  const Complex w{0.3, -0.2};
  CHECK(difference_quotient(CoeffSeq{0.0, 0.0, 1.0}, w) == CoeffSeq{w, 1.0});
  CHECK(difference_quotient(CoeffSeq{5.0}, w).is_zero());
  // f - f(0.5) = (z - 0.5)(z + 1.5) for f = 1 + z + z^2.
  CHECK(difference_quotient(CoeffSeq{1.0, 1.0, 1.0}, 0.5) == CoeffSeq{1.5, 1.0});

  Rng rng(15);
  for (int i = 0; i < 100; ++i) {
    const CoeffSeq f = rng.sequence(static_cast<std::size_t>(rng.integer(0, 12)));
    const Complex v = rng.complex_normal() * 0.4;
    const CoeffSeq q = difference_quotient(f, v);
    const CoeffSeq back = apply(CoeffSeq{-v, 1.0}, q) + CoeffSeq{evaluate(f, v)};
    for (std::size_t k = 0; k < f.size(); ++k)
      CHECK(std::abs(back.coeff(k) - f[k]) <= 1e-14 * (1.0 + lq_norm(f, 1.0)));
  }
}

TEST_CASE("dq_norm_check") {
  CHECK(dq_norm_check(CoeffSeq{2.0}, 0.5, Exponent(3.0)).holds);
  const auto edge = dq_norm_check(CoeffSeq{0.0, 1.0}, 0.0, Exponent(3.0), 8, 50);
  CHECK(edge.holds);
  CHECK(edge.quotient_lower == 1.0);
  CHECK(edge.bound == 1.0);
  const auto c = dq_norm_check(CoeffSeq{1.0, 1.0}, 0.5, Exponent(3.0), 8, 50);
  CHECK(c.quotient_lower == Approx(1.0));
  CHECK(c.bound == Approx(7.0));
  CHECK(c.holds);
  CHECK_THROWS_AS(dq_norm_check(CoeffSeq{1.0}, 1.0, Exponent(2.0)), std::invalid_argument);
}

TEST_CASE("functional_norm_bounds") {
  const Exponent p(3.0);
  const auto e = functional_norm_bounds(CoeffSeq::monomial(1.0, 4), p);
  CHECK(e.lower == 1.0);
  CHECK(e.upper == 1.0);
  CHECK(e.lower_witness == CoeffSeq::monomial(1.0, 4));

  for (double pv : {1.5, 3.0, 4.0}) {
    const Exponent q(pv);
    const auto b = functional_norm_bounds(CoeffSeq{1.0, 1.0}, q);
    CHECK(b.lower == 1.0);
    CHECK(b.upper <= std::pow(2.0, 1.0 / q.conj()) + 1e-15);
    CHECK(b.upper == Approx(std::pow(2.0, 1.0 / std::max(q.p(), q.conj()))));
  }

  // phi^<p-1> of a multiplier is a bounded functional.
  const CoeffSeq phi{1.0, Complex{0.5, 0.5}, -0.25};
  const auto lam = functional_norm_bounds(s_power(phi, p.p() - 1.0), p, {phi});
  CHECK(std::isfinite(lam.upper));
  CHECK(lam.lower <= lam.upper);
  CHECK(lam.lower >= sup_norm(s_power(phi, p.p() - 1.0)));

  const nlohmann::json j = lam;
  CHECK(j.at("kind") == "functional");
}

TEST_CASE("point_growth_check") {
  const auto one = point_growth_check(CoeffSeq{1.0}, Exponent(2.0), 0.0);
  CHECK(one.holds);
  CHECK(one.value == 1.0);
  CHECK(one.bound == 1.0);

  const auto ones = point_growth_check(CoeffSeq(std::vector<Complex>(11, 1.0)), Exponent(2.0), 0.9);
  CHECK(ones.upper == Approx(std::sqrt(11.0)));
  CHECK(ones.holds);

  for (std::size_t k : {0u, 3u, 9u}) {
    const Complex w = std::polar(0.8, 1.0);
    const auto c = point_growth_check(CoeffSeq::monomial(1.0, k), Exponent(3.0), w);
    CHECK(c.value == Approx(std::pow(0.8, k)));
    CHECK(c.holds);
  }
  CHECK_THROWS_AS(point_growth_check(CoeffSeq{1.0}, Exponent(2.0), Complex{0.0, 1.0}),
                  std::invalid_argument);

  // For p > 2 the growth bound with upper = ||lambda||_p is violated:
  // lambda = 1 + z, w = 1/2 gives 1.5 > 2^{1/3} (8/7)^{1/3}.
  const auto fails = point_growth_check(CoeffSeq{1.0, 1.0}, Exponent(3.0), 0.5);
  CHECK(fails.value == 1.5);
  CHECK(fails.bound == Approx(std::cbrt(2.0 * 8.0 / 7.0)));
  CHECK_FALSE(fails.holds);
  CHECK(fails.value <= fails.kernel_l1_bound);
}

TEST_CASE("dq_functional_identity") {
  const auto a = dq_functional_identity(CoeffSeq{0.0, 1.0}, CoeffSeq{1.0}, 0.3);
  CHECK(a.lhs == Complex{1.0});
  CHECK(a.rhs == Complex{1.0});
  const Complex w{0.2, 0.7};
  const auto b = dq_functional_identity(CoeffSeq{0.0, 0.0, 1.0}, CoeffSeq{1.0}, w);
  CHECK(std::abs(b.lhs - w) < 1e-15);
  CHECK(std::abs(b.rhs - w) < 1e-15);
  Rng rng(50);
  for (int i = 0; i < 100; ++i) {
    const auto id = dq_functional_identity(
        rng.sequence(static_cast<std::size_t>(rng.integer(0, 10))),
        rng.sequence(static_cast<std::size_t>(rng.integer(0, 10))), rng.complex_normal() * 0.5);
    CHECK(id.holds);
  }
}
