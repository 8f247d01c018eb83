#pragma once

// Numerical radius w(T) = sup |<Tx, x>| over unit x, computed as
// max over theta of lambda_max(Re(e^{i theta} T)), plus the maximizer set,
// a sampling lower bound, and the numerical-range boundary.

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nurad/linalg.hpp"

namespace nurad {

enum class RadiusMethod { Sweep, Sample, ClosedForm };
std::string_view to_string(RadiusMethod m);

struct RadiusReport {
  double value = 0.0;
  std::vector<double> theta_stars;      // in [0, 2 pi), ascending
  std::vector<UnitVector> maximizers;   // phase-canonical representatives
  RadiusMethod method = RadiusMethod::Sweep;
  // The sweep objective was flat over the whole circle (a disc centred at the
  // origin). theta_stars then holds a fixed subsample of the maximizing angles.
  bool plateau = false;
};

struct SweepConfig {
  int coarse_points = 720;
  double refine_tol = 1e-12;
  double dedup_tol = 1e-8;
};

RadiusReport radius_sweep(const ComplexMatrix& t, const SweepConfig& cfg = {});

/// Shorthand for radius_sweep(t).value.
double numerical_radius(const ComplexMatrix& t);

/// Max of |<Tx,x>| over n_samples seeded random unit vectors; a lower bound on w(T).
double radius_sample(const ComplexMatrix& t, std::int64_t n_samples, std::uint64_t seed);

/// For a 2x2 operator: an orthonormal pair (x, y) inside M_w(T), if the
/// collected maximizers contain one (checked through the orthogonal complement
/// of each maximizer, which in dimension 2 is unique up to phase).
std::optional<std::pair<UnitVector, UnitVector>> maximizer_contains_on_basis(
    const ComplexMatrix& t, const RadiusReport& report, double tol);

/// Smallest value of w - |<Ty,y>| over complements y of collected maximizers,
/// with the maximizer achieving it. Dimension 2 only.
struct BasisDeficit {
  double deficit;
  UnitVector x;
};
BasisDeficit basis_deficit(const ComplexMatrix& t, const RadiusReport& report);

bool is_normaloid(const ComplexMatrix& t, double tol = 1e-7);

/// <T x_theta, x_theta> for the top eigenvector x_theta of Re(e^{i theta} T)
/// at n_points equispaced angles starting at theta = 0.
std::vector<Complex> range_boundary(const ComplexMatrix& t, int n_points);

/// || (<Re(T)x,x> Re(T) + <Im(T)x,x> Im(T)) x - x ||; zero for x in M_w(T)
/// when w(T) = 1.
double maximizer_condition_residual(const ComplexMatrix& t, const UnitVector& x);

/// Scales x so that its first component of largest modulus is positive real.
UnitVector canonical_phase(const UnitVector& x);

}  // namespace nurad
