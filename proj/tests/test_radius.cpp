#include "test_main.hpp"

#include <cmath>
#include <numbers>

#include "nurad/errors.hpp"
#include "nurad/radius.hpp"
#include "nurad/random.hpp"

using namespace nurad;

namespace {
bool has_basis_vector(const RadiusReport& r, std::size_t k) {
  for (const auto& x : r.maximizers)
    if (std::abs(std::abs(x[k]) - 1.0) <= 1e-8) return true;
  return false;
}
}  // namespace

TEST_CASE("radius_sweep on reference operators") {
  CHECK(numerical_radius(ComplexMatrix{{0.0, 2.0 * kI}, {0.0, 0.0}}) == doctest::Approx(1.0).epsilon(1e-12));

  const ComplexMatrix t{{1.0, kI}, {kI, -1.0}};
  const auto rep = radius_sweep(t);
  CHECK(std::abs(rep.value - 1.0) <= 1e-9);
  CHECK(has_basis_vector(rep, 0));
  CHECK(maximizer_contains_on_basis(t, rep, 1e-7).has_value());

  const auto d = ComplexMatrix::diagonal({Complex(0.3, 0.1), Complex(-0.9, 0.2), kI * 0.5});
  CHECK(numerical_radius(d) == doctest::Approx(std::abs(Complex(-0.9, 0.2))).epsilon(1e-12));
}

TEST_CASE("paper-style example with maximizers e1 and e2") {
  const ComplexMatrix t{{1.0, 0.5}, {-0.5, -1.0}};
  const auto rep = radius_sweep(t);
  CHECK(std::abs(rep.value - 1.0) <= 1e-9);
  CHECK(has_basis_vector(rep, 0));
  CHECK(has_basis_vector(rep, 1));
  CHECK_FALSE(is_normaloid(t));
}

TEST_CASE("radius_sample is a lower bound") {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_gaussian_matrix(1 + trial % 4, rng);
    const double w = numerical_radius(t);
    const double s = radius_sample(t, 2000, 99 + trial);
    CHECK(s <= w + 1e-12);
    CHECK(radius_sample(t, 2000, 99 + trial) == s);
  }
  CHECK(radius_sample(ComplexMatrix::diagonal({1.0, -1.0}), 100000, 42) >= 0.999);
  CHECK(radius_sample(ComplexMatrix::zeros(3), 10, 1) == 0.0);
  CHECK_THROWS_AS(radius_sample(ComplexMatrix::zeros(2), 0, 1), NuradError);
}

TEST_CASE("sampling oracle agrees with the sweep, n <= 3") {
  Rng rng(2);
  for (int trial = 0; trial < 12; ++trial) {
    auto t = random_gaussian_matrix(1 + trial % 3, rng);
    t *= 1.0 / numerical_radius(t);
    CHECK(radius_sample(t, 1000000, 1000 + trial) >= 1.0 - 5e-3);
  }
}

// One million uniform samples on the sphere of C^4 (real dimension 8) leave a
// typical gap near 1e-2, so the 5e-3 agreement does not hold at n = 4.
TEST_CASE("sampling oracle agrees with the sweep, n = 4" * doctest::should_fail()) {
  Rng rng(2);
  for (int trial = 0; trial < 6; ++trial) {
    auto t = random_gaussian_matrix(4, rng);
    t *= 1.0 / numerical_radius(t);
    CHECK(radius_sample(t, 1000000, 1000 + trial) >= 1.0 - 5e-3);
  }
}

TEST_CASE("maximizer_contains_on_basis") {
  const auto id = ComplexMatrix::identity(2);
  CHECK(maximizer_contains_on_basis(id, radius_sweep(id), 1e-7).has_value());
  const auto d = ComplexMatrix::diagonal({1.0, 0.5});
  CHECK_FALSE(maximizer_contains_on_basis(d, radius_sweep(d), 1e-7).has_value());
  CHECK_THROWS_AS(maximizer_contains_on_basis(ComplexMatrix::identity(3),
                                              radius_sweep(ComplexMatrix::identity(3)), 1e-7),
                  NuradError);
}

TEST_CASE("is_normaloid") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto u = random_unitary(3, rng);
    std::vector<Complex> d{random_gaussian_complex(rng), random_gaussian_complex(rng),
                           random_gaussian_complex(rng)};
    CHECK(is_normaloid(u * ComplexMatrix::diagonal(d) * adjoint(u)));
  }
  CHECK_FALSE(is_normaloid(ComplexMatrix{{0.0, 2.0 * kI}, {0.0, 0.0}}));
}

TEST_CASE("range_boundary") {
  const Complex lam(0.3, -0.4);
  for (auto z : range_boundary(lam * ComplexMatrix::identity(3), 16)) CHECK(std::abs(z - lam) <= 1e-12);

  Rng rng(6);
  const auto h = random_hermitian(3, rng);
  for (auto z : range_boundary(h, 64)) CHECK(std::abs(z.imag()) <= 1e-10);

  // Elliptical range theorem oracle: |z - l1| + |z - l2| = sqrt(|l1 - l2|^2 + |zeta|^2).
  for (int trial = 0; trial < 10; ++trial) {
    const Complex l1 = random_gaussian_complex(rng), l2 = random_gaussian_complex(rng);
    const Complex zeta = random_gaussian_complex(rng);
    const auto u = random_unitary(2, rng);
    const ComplexMatrix t = u * ComplexMatrix{{l1, zeta}, {0.0, l2}} * adjoint(u);
    const double major = std::sqrt(std::norm(l1 - l2) + std::norm(zeta));
    const double w = numerical_radius(t);
    for (auto z : range_boundary(t, 90)) {
      CHECK(std::abs(std::abs(z - l1) + std::abs(z - l2) - major) <= 1e-8);
      CHECK(std::abs(z) <= w + 1e-9);
    }
  }
}

TEST_CASE("maximizer_condition_residual") {
  Rng rng(8);
  const auto x = random_unit_vector(3, rng);
  CHECK(maximizer_condition_residual(ComplexMatrix::identity(3), x) <= 1e-14);
  CHECK(maximizer_condition_residual(ComplexMatrix{{1.0, kI}, {kI, -1.0}}, UnitVector::basis(2, 0)) <= 1e-10);
  // diag(1, 1/2), x = e2: (1/2 * 1/2) e2 - e2 = -3/4 e2.
  CHECK(maximizer_condition_residual(ComplexMatrix::diagonal({1.0, 0.5}), UnitVector::basis(2, 1)) ==
        doctest::Approx(0.75));
}

TEST_CASE("norm axioms and invariances on random inputs") {
  Rng rng(10);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto t = random_gaussian_matrix(n, rng);
    const auto s = random_gaussian_matrix(n, rng);
    const auto rep = radius_sweep(t);
    const double w = rep.value, nt = operator_norm(t);
    CHECK(w <= nt + 1e-9);
    CHECK(w >= 0.5 * nt - 1e-9);
    const Complex c = random_gaussian_complex(rng);
    CHECK(std::abs(numerical_radius(c * t) - std::abs(c) * w) <= 1e-9 * std::max(1.0, std::abs(c) * w));
    CHECK(numerical_radius(t + s) <= w + numerical_radius(s) + 1e-9);
    const auto u = random_unitary(n, rng);
    CHECK(std::abs(numerical_radius(conjugate(u, t)) - w) <= 1e-9 * std::max(1.0, nt));
    CHECK(std::abs(numerical_radius(random_phase(rng) * t) - w) <= 1e-9 * std::max(1.0, w));
    const ComplexMatrix tn = (1.0 / w) * t;
    for (const auto& x : rep.maximizers) {
      CHECK(std::abs(std::abs(quad_form(t, x)) - w) <= 1e-7 * std::max(1.0, w));
      CHECK(maximizer_condition_residual(tn, x) <= 1e-7);
    }
  }
  CHECK(numerical_radius(ComplexMatrix::zeros(3)) == 0.0);
}
