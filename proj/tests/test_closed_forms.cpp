#include "test_main.hpp"

#include <cmath>
#include <numbers>

#include "nurad/closed_forms.hpp"
#include "nurad/errors.hpp"
#include "nurad/radius.hpp"
#include "nurad/random.hpp"

using namespace nurad;

namespace {
double sweep_tri(Complex l1, Complex l2, Complex zeta) {
  return numerical_radius(ComplexMatrix{{l1, zeta}, {0.0, l2}});
}

double ellipse_dist(const EllipseGeometry& g, double phi) {
  const double ct = std::cos(g.theta), st = std::sin(g.theta);
  const double x = g.h + g.a_axis * std::cos(phi) * ct + g.b_axis * std::sin(phi) * st;
  const double y = g.k + g.a_axis * std::cos(phi) * st - g.b_axis * std::sin(phi) * ct;
  return std::hypot(x, y);
}
}  // namespace

TEST_CASE("radius_block examples") {
  const Complex beta(0.3, -0.2), zeta(0.0, 0.7);
  CHECK(radius_block(beta, beta, std::abs(zeta)).first == doctest::Approx(std::abs(beta) + 0.35).epsilon(1e-14));
  CHECK(radius_block(Complex(0.2, 0.9), Complex(-0.5, 0.1), 0.0).first ==
        doctest::Approx(std::abs(Complex(0.2, 0.9))).epsilon(1e-12));
  const auto [w, geo] = radius_block(1.0, -1.0, 1.0);
  CHECK(std::abs(w - sweep_tri(1.0, -1.0, 1.0)) <= 1e-8);
  CHECK(w == doctest::Approx(std::sqrt(5.0) / 2.0).epsilon(1e-12));
  CHECK(geo.a_axis >= geo.b_axis);
  CHECK(std::abs(stationarity_residual(geo)) <= 1e-10);
  CHECK_THROWS_AS(radius_block(1.0, 0.0, -1.0), NuradError);
}

TEST_CASE("radius_block agrees with the sweep on 1000 random triangular 2x2") {
  Rng rng(21);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex l1 = random_gaussian_complex(rng), l2 = random_gaussian_complex(rng);
    const double an = std::abs(random_gaussian_complex(rng)) * 1.5;
    const Complex zeta = an * random_phase(rng);
    const auto [w, geo] = radius_block(l1, l2, an);
    CHECK(std::abs(w - sweep_tri(l1, l2, zeta)) <= 1e-7);
    CHECK(geo.a_axis >= geo.b_axis);
    CHECK(geo.b_axis >= 0.0);
    CHECK(std::abs(stationarity_residual(geo)) <= 1e-10);
    for (int j = 0; j < 360; ++j) {
      CHECK(ellipse_dist(geo, 2.0 * std::numbers::pi * j / 360.0) <= w + 1e-12);
    }
  }
}

TEST_CASE("radius_block with a larger off-diagonal block") {
  // [[l1 I, A], [0, l2 I]] with A 2x2; only ||A|| enters the value.
  Rng rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex l1 = random_gaussian_complex(rng), l2 = random_gaussian_complex(rng);
    const auto a = random_gaussian_matrix(2, rng);
    const ComplexMatrix t{{l1, 0.0, a(0, 0), a(0, 1)},
                          {0.0, l1, a(1, 0), a(1, 1)},
                          {0.0, 0.0, l2, 0.0},
                          {0.0, 0.0, 0.0, l2}};
    CHECK(std::abs(radius_block(l1, l2, operator_norm(a)).first - numerical_radius(t)) <= 1e-7);
  }
}

TEST_CASE("radius_collinear") {
  const double r3 = std::sqrt(3.0) / 2.0;
  CHECK(radius_collinear(r3, -r3, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  const Complex beta(0.1, 0.4), zeta(-0.3, 0.2);
  CHECK(radius_collinear(beta, beta, zeta) == doctest::Approx(std::abs(beta) + std::abs(zeta) / 2).epsilon(1e-14));
  CHECK(radius_collinear(0.0, 0.0, 2.0 * kI) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(radius_collinear(1.0, kI, 1.0), NuradError);

  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Complex dir = random_phase(rng);
    const Complex l1 = dir * random_uniform(rng, -2.0, 2.0);
    const Complex l2 = dir * random_uniform(rng, -2.0, 2.0);
    const Complex zeta = random_gaussian_complex(rng);
    const double c = radius_collinear(l1, l2, zeta);
    CHECK(std::abs(c - radius_block(l1, l2, std::abs(zeta)).first) <= 1e-9);
    CHECK(std::abs(c - sweep_tri(l1, l2, zeta)) <= 1e-8);
  }
}

TEST_CASE("radius_johnson") {
  CHECK(radius_johnson(kI, -kI, 3.0) == doctest::Approx(std::sqrt(1.0 + 9.0 / 4.0)).epsilon(1e-14));
  CHECK_THROWS_AS(radius_johnson(1.0, 0.5, 1.0), NuradError);
  CHECK_THROWS_AS(radius_johnson(kI, kI, 1.0), NuradError);
  CHECK_THROWS_AS(radius_johnson(0.0, 0.0, 1.0), NuradError);

  // Triangular form of [[1, alpha], [-conj(alpha), a]] in region (i).
  for (double a : {0.0, 0.3, -0.5}) {
    const double m = std::sqrt(0.5 * (1.0 - a)) * 0.95;
    const Complex alpha = std::polar(m, 0.7);
    const double K = std::sqrt(4.0 * m * m - (1.0 - a) * (1.0 - a));
    const Complex lam = Complex(1.0 + a, K) / 2.0;
    const Complex zeta = (1.0 - a) * Complex(1.0 - a, K) / (2.0 * alpha);
    const double theta = std::arg(lam);  // half the angle between lam and conj(lam)
    const double z = std::abs(zeta) / (2.0 * std::abs(lam) * std::sin(theta));
    CHECK(z >= std::tan(theta));
    CHECK(radius_johnson(lam, std::conj(lam), zeta) == doctest::Approx(1.0).epsilon(1e-12));
  }

  Rng rng(24);
  for (int trial = 0; trial < 300; ++trial) {
    const double r = random_uniform(rng, 0.1, 2.0);
    const Complex l1 = r * random_phase(rng), l2 = r * random_phase(rng);
    const Complex zeta = random_gaussian_complex(rng) * random_uniform(rng, 0.0, 3.0);
    const double j = radius_johnson(l1, l2, zeta);
    CHECK(std::abs(j - radius_block(l1, l2, std::abs(zeta)).first) <= 1e-9);
    CHECK(std::abs(j - sweep_tri(l1, l2, zeta)) <= 1e-8);
  }
}

TEST_CASE("radius_wt_family") {
  CHECK_THROWS_AS(WtFamily::make(1.0, 0.5), NuradError);
  CHECK_THROWS_AS(WtFamily::make(0.0, 0.0), NuradError);

  const auto f06 = WtFamily::make(0.0, 0.6);
  const auto f04 = WtFamily::make(0.0, 0.4);
  const auto fb = WtFamily::make(0.0, 1.0 / std::sqrt(2.0));
  REQUIRE(radius_wt_family(f06).has_value());
  CHECK(*radius_wt_family(f06) == 1.0);
  CHECK(*radius_wt_family(f04) == 1.0);
  REQUIRE(radius_wt_family(fb).has_value());
  CHECK(std::abs(numerical_radius(fb.matrix()) - 1.0) <= 1e-8);
  CHECK_FALSE(radius_wt_family(WtFamily::make(0.0, 0.8)).has_value());
  CHECK_FALSE(radius_wt_family(WtFamily::make(0.0, 0.5)).has_value());

  Rng rng(25);
  int defined = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto fam = WtFamily::make(random_uniform(rng, -0.99, 0.99),
                                    random_uniform(rng, 0.01, 1.2) * random_phase(rng));
    const auto w = radius_wt_family(fam);
    if (!w) continue;
    ++defined;
    CHECK(std::abs(*w - numerical_radius(fam.matrix())) <= 1e-7);
  }
  CHECK(defined > 100);
}

TEST_CASE("triangularize_wt") {
  {
    const auto [u, form] = triangularize_wt(WtFamily::make(0.0, 0.4));
    CHECK(is_unitary(u));
    CHECK(std::abs(form.lambda1 - 0.8) <= 1e-14);
    CHECK(std::abs(form.lambda2 - 0.2) <= 1e-14);
    CHECK(std::abs(form.zeta - 0.8) <= 1e-14);
  }
  {
    const auto [u, form] = triangularize_wt(WtFamily::make(0.0, 0.6));
    CHECK(is_unitary(u));
    const Complex lam = Complex(1.0, std::sqrt(0.44)) / 2.0;
    CHECK(std::abs(form.lambda1 - lam) <= 1e-14);
    CHECK(std::abs(form.lambda2 - std::conj(lam)) <= 1e-14);
  }
  CHECK_THROWS_AS(triangularize_wt(WtFamily::make(0.0, 0.5)), NuradError);

  Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const auto fam = WtFamily::make(random_uniform(rng, -0.99, 0.99),
                                    random_uniform(rng, 0.01, 1.2) * random_phase(rng));
    const auto [u, form] = triangularize_wt(fam);
    CHECK(is_unitary(u, 1e-12));
    CHECK(frobenius_norm(adjoint(u) * fam.matrix() * u - form.matrix()) <= 1e-10);
    const double wb = radius_block(form.lambda1, form.lambda2, std::abs(form.zeta)).first;
    CHECK(std::abs(wb - numerical_radius(fam.matrix())) <= 1e-8);
  }
}
