#include <doctest.h>

#include <cmath>

#include "lpa/json_io.hpp"
#include "lpa/orthogonality.hpp"
#include "lpa/rng.hpp"
#include "oracles.hpp"

using namespace lpa;
using doctest::Approx;

TEST_CASE("bj_sum") {
  const Exponent p3(3.0);
  CHECK(bj_sum(CoeffSeq{1.0}, CoeffSeq{0.0, 1.0}, p3) == Complex{});
  CHECK(bj_sum(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, -1.0}, p3) == Complex{});
  // sum |f_k|^{p-2} f_k g_k = 1*1 + 2*2 for real f.
  CHECK(bj_sum(CoeffSeq{1.0, 2.0}, CoeffSeq{1.0, 1.0}, p3) == Complex{5.0, 0.0});
  CHECK_THROWS_AS(bj_sum(CoeffSeq::zero(3), CoeffSeq{1.0}, p3), std::invalid_argument);

  // Agrees with the written-out criterion sum |f_k|^{p-2} conj(f_k) g_k.
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const CoeffSeq f = rng.sequence(6), g = rng.sequence(6);
    const Exponent p(rng.uniform(1.1, 4.0));
    Complex direct{};
    for (std::size_t k = 0; k < f.size(); ++k)
      direct += std::pow(std::abs(f[k]), p.p() - 2.0) * std::conj(f[k]) * g[k];
    CHECK(std::abs(bj_sum(f, g, p) - direct) <= 1e-12 * std::abs(direct));
  }
}

TEST_CASE("variational_min") {
  SUBCASE("disjoint support") {
    const auto v = variational_min(CoeffSeq{1.0}, CoeffSeq{0.0, 1.0}, Exponent(2.5));
    CHECK(std::abs(v.beta_star) < 1e-9);
    CHECK(v.min_value == Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("criterion sum vanishes") {
    const auto v = variational_min(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, -1.0}, Exponent(3.0));
    CHECK(std::abs(v.beta_star) < 1e-9);
    CHECK(v.min_value == Approx(std::cbrt(2.0)).epsilon(1e-12));
  }
  SUBCASE("Hilbert projection") {
    const auto v = variational_min(CoeffSeq{1.0, 2.0}, CoeffSeq{1.0}, Exponent(2.0));
    CHECK(std::abs(v.beta_star - Complex{-1.0, 0.0}) < 1e-9);
    CHECK(v.min_value == Approx(2.0).epsilon(1e-12));
  }
  SUBCASE("not orthogonal has nonzero minimizer") {
    const auto v = variational_min(CoeffSeq{1.0, 2.0}, CoeffSeq{1.0, 1.0}, Exponent(3.0));
    CHECK(std::abs(v.beta_star) > 0.1);
    CHECK(v.min_value < p_norm(CoeffSeq{1.0, 2.0}, Exponent(3.0)));
  }
  SUBCASE("rejects zero direction") {
    CHECK_THROWS_AS(variational_min(CoeffSeq{1.0}, CoeffSeq::zero(2), Exponent(2.0)),
                    std::invalid_argument);
  }
  SUBCASE("matches a dense grid search") {
    Rng rng(4);
    for (int i = 0; i < 20; ++i) {
      const CoeffSeq f = rng.sequence(4), g = rng.sequence(3);
      const Exponent p(rng.uniform(1.1, 4.0));
      const auto v = variational_min(f, g, p);
      const double radius = 2.0 * std::abs(v.beta_star) + 1.0;
      const double grid = oracle::grid_min_norm(f.vec(), g.vec(), p.p(), radius, 400, 400);
      CHECK(v.min_value <= grid + 1e-12);
      CHECK(v.min_value >= grid - 1e-3 * grid);
    }
  }
}

TEST_CASE("is_bj_orthogonal") {
  const Exponent p3(3.0);
  CHECK(is_bj_orthogonal(CoeffSeq{1.0}, CoeffSeq{0.0, 1.0}, p3).orthogonal);
  const auto r = is_bj_orthogonal(CoeffSeq{1.0, 1.0}, CoeffSeq{1.0, -1.0}, p3, 1e-9, true);
  CHECK(r.orthogonal);
  REQUIRE(r.beta_star.has_value());
  CHECK(std::abs(*r.beta_star) < 1e-9);
  CHECK_FALSE(is_bj_orthogonal(CoeffSeq{1.0, 2.0}, CoeffSeq{1.0, 1.0}, p3).orthogonal);

  const nlohmann::json j = r;
  CHECK(j.at("orthogonal") == true);
  CHECK(j.at("bj_sum").size() == 2);
  CHECK(j.at("min_value").get<double>() == Approx(std::cbrt(2.0)));
  const nlohmann::json bare = is_bj_orthogonal(CoeffSeq{1.0}, CoeffSeq{0.0, 1.0}, p3);
  CHECK(bare.at("beta_star").is_null());
}

TEST_CASE("orthogonality is not symmetric") {
  // f^<2> = (1, 4) annihilates g = 4 - z, but g^<2> = (16, -1) does not
  // annihilate f.
  const Exponent p3(3.0);
  const CoeffSeq f{1.0, 2.0}, g{4.0, -1.0};
  CHECK(is_bj_orthogonal(f, g, p3).orthogonal);
  CHECK_FALSE(is_bj_orthogonal(g, f, p3).orthogonal);
  CHECK(bj_sum(g, f, p3) == Complex{14.0, 0.0});
}

TEST_CASE("orthogonality is linear in the second argument") {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const Exponent p(rng.uniform(1.1, 4.0));
    const CoeffSeq f = rng.sequence(5);
    // Two combinations inside the annihilator of f^<p-1>.
    auto project = [&](CoeffSeq g, const CoeffSeq& h) {
      return g - (bj_sum(f, g, p) / bj_sum(f, h, p)) * h;
    };
    const CoeffSeq h = rng.sequence(5);
    const CoeffSeq g1 = project(rng.sequence(5), h), g2 = project(rng.sequence(5), h);
    const Complex a = rng.complex_normal(), b = rng.complex_normal();
    CHECK(is_bj_orthogonal(f, g1, p).orthogonal);
    CHECK(is_bj_orthogonal(f, g2, p).orthogonal);
    CHECK(is_bj_orthogonal(f, a * g1 + b * g2, p).orthogonal);
  }
}

TEST_CASE("is_p_inner") {
  const Exponent p(3.0);
  CHECK(is_p_inner(CoeffSeq{Complex{2.0, -1.0}}, p, 10).p_inner);
  CHECK(is_p_inner(CoeffSeq::monomial(1.0, 4), p, 10).p_inner);
  CHECK_FALSE(is_p_inner(CoeffSeq{1.0, 1.0}, p, 3).p_inner);
  CHECK_THROWS_AS(is_p_inner(CoeffSeq{1.0}, p, 0), std::invalid_argument);
  CHECK_THROWS_AS(is_p_inner(CoeffSeq::zero(2), p, 1), std::invalid_argument);

  const auto b = single_zero_inner(0.5, Exponent(4.0), 200);
  const auto report = is_p_inner(b, Exponent(4.0), 10);
  CHECK(report.p_inner);
  REQUIRE(report.residuals.size() == 10);
  for (double r : report.residuals) CHECK(r < 1e-8);
}

TEST_CASE("single_zero_inner") {
  SUBCASE("coefficients match long division") {
    for (Complex w : {Complex{0.5, 0.0}, std::polar(0.7, 2.0), std::polar(0.2, -1.0)}) {
      for (double pv : {1.5, 2.0, 4.0}) {
        const Exponent p(pv);
        const Complex q = std::pow(std::abs(w), p.conj() - 1.0) * std::exp(Complex{0.0, -std::arg(w)});
        const auto expect = oracle::divide_by_linear({1.0, -1.0 / w}, q, 40);
        const auto b = single_zero_inner(w, p, 40);
        for (std::size_t k = 0; k <= 40; ++k)
          CHECK(std::abs(b[k] - expect[k]) <= 1e-12 * (1.0 + std::abs(expect[k])));
      }
    }
  }
  SUBCASE("p = 2 is a multiple of the Blaschke factor") {
    // (1 - z/w) / (1 - conj(w) z) = (-1/w)(z - w)/(1 - conj(w) z).
    const Complex w = std::polar(0.5, 0.8);
    const auto b = single_zero_inner(w, Exponent(2.0), 200);
    for (Complex z : {Complex{0.3, 0.1}, Complex{-0.5, 0.4}, Complex{0.0, 0.9}}) {
      const Complex blaschke = (z - w) / (1.0 - std::conj(w) * z);
      CHECK(std::abs(evaluate(b, z) - (-1.0 / w) * blaschke) < 1e-10);
    }
    CHECK(is_p_inner(b, Exponent(2.0), 10).p_inner);
  }
  SUBCASE("closed-form norm and the zero at w") {
    const Exponent p(4.0);
    const auto b = single_zero_inner(0.5, p, 200);
    const double closed = single_zero_inner_norm_pow(0.5, p);
    CHECK(std::pow(p_norm(b, p), 4.0) == Approx(closed).epsilon(1e-8));
    CHECK(single_zero_inner_tail_pow(0.5, p, 200) < 1e-50);
    CHECK(std::abs(evaluate(b, 0.5)) < 1e-10);
  }
  SUBCASE("truncation tail accounts for the norm deficit") {
    const Exponent p(3.0);
    const Complex w = std::polar(0.9, 0.3);
    const auto b = single_zero_inner(w, p, 30);
    const double partial = std::pow(p_norm(b, p), 3.0);
    CHECK(partial + single_zero_inner_tail_pow(w, p, 30) ==
          Approx(single_zero_inner_norm_pow(w, p)).epsilon(1e-12));
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(single_zero_inner(0.0, Exponent(2.0), 10), std::invalid_argument);
    CHECK_THROWS_AS(single_zero_inner(1.0, Exponent(2.0), 10), std::invalid_argument);
    CHECK_THROWS_AS(single_zero_inner(Complex{0.0, -1.2}, Exponent(2.0), 10),
                    std::invalid_argument);
    CHECK_THROWS_AS(single_zero_inner(0.5, Exponent(2.0), 0), std::invalid_argument);
  }
}
