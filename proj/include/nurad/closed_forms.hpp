#pragma once

// Closed-form numerical radii for 2x2 (and scalar-block 2x2) operators.

#include <optional>
#include <utility>

#include "nurad/linalg.hpp"

namespace nurad {

/// [[lambda1, zeta], [0, lambda2]]
struct TriangularForm2x2 {
  Complex lambda1;
  Complex lambda2;
  Complex zeta;

  ComplexMatrix matrix() const { return ComplexMatrix{{lambda1, zeta}, {0.0, lambda2}}; }
};

/// Geometry of the elliptical numerical range of [[l1 I, A], [0, l2 I]].
/// The ellipse is x(phi) = h + a cos(phi) cos(theta) + b sin(phi) sin(theta),
/// y(phi) = k + a cos(phi) sin(theta) - b sin(phi) cos(theta); phi0 is its
/// point farthest from the origin and (x0, y0) the point itself.
struct EllipseGeometry {
  double theta = 0.0;
  double h = 0.0, k = 0.0;
  double H_coef = 0.0, K_coef = 0.0;
  double a_axis = 0.0, b_axis = 0.0;
  double phi0 = 0.0;
  double x0 = 0.0, y0 = 0.0;
};

/// 1/2 (a^2 - b^2) sin(2 phi0) - (b K cos(phi0) - a H sin(phi0)).
double stationarity_residual(const EllipseGeometry& g);

/// w([[l1 I, A], [0, l2 I]]) given only a_norm = ||A||.
std::pair<double, EllipseGeometry> radius_block(Complex lambda1, Complex lambda2, double a_norm);

/// 1/2 (|l1 + l2| + sqrt(|l1 - l2|^2 + |zeta|^2)) for eigenvalues on a common
/// line through the origin. Throws NotCollinear otherwise.
double radius_collinear(Complex lambda1, Complex lambda2, Complex zeta);

/// Equal-modulus, distinct eigenvalues. Throws ModulusMismatch / EqualEigenvalues.
double radius_johnson(Complex lambda1, Complex lambda2, Complex zeta);

/// The operator [[1, alpha], [-conj(alpha), a]] with real |a| < 1, alpha != 0.
struct WtFamily {
  double a;
  Complex alpha;

  /// Throws InvalidArgument when |a| >= 1 or alpha == 0.
  static WtFamily make(double a, Complex alpha);
  ComplexMatrix matrix() const;
};

/// 1 when (1-a)^2 < 4|alpha|^2 <= 2(1-a) or (1-a)^2 > 4|alpha|^2; empty otherwise.
std::optional<double> radius_wt_family(const WtFamily& fam);

/// Explicit unitary U with U* T U upper triangular for T = fam.matrix().
/// Throws DegenerateDiscriminant when 4|alpha|^2 = (1-a)^2.
std::pair<ComplexMatrix, TriangularForm2x2> triangularize_wt(const WtFamily& fam);

}  // namespace nurad
