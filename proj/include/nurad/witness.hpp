#pragma once

// Explicit convex decompositions T = tA + (1-t)B with w(A), w(B) <= w(T),
// and a numerical checker for any claimed decomposition.

#include <optional>
#include <string_view>

#include "nurad/linalg.hpp"

namespace nurad {

enum class Construction { Kadison, SelfAdjoint, Shear, Offdiag, BlockUpper, BlockLift };

std::string_view to_string(Construction c);
/// Inverse of to_string; throws BadFormat on an unknown name.
Construction construction_from_string(std::string_view s);

struct Witness {
  double t = 0.5;
  ComplexMatrix A;
  ComplexMatrix B;
  Construction construction = Construction::Kadison;
};

/// c*A, c*B.
Witness scaled(const Witness& w, Complex c);
/// U A U*, U B U*. U must be unitary.
Witness transformed(const Witness& w, const ComplexMatrix& u);

struct VerificationReport {
  double midpoint_residual = 0.0;
  double radius_slack_A = 0.0;  // w(T) - w(A)
  double radius_slack_B = 0.0;
  double distinctness = 0.0;    // min(||A - T||, ||B - T||)
  double lemma_gen_residual = 0.0;
  bool passed = false;
};

constexpr double kWitnessMidpointTol = 1e-9;
constexpr double kWitnessSlackTol = 1e-7;
constexpr double kWitnessDistinctTol = 1e-6;
constexpr double kWitnessLemmaTol = 1e-5;

/// Checks the decomposition with radius_sweep. lemma_gen_residual is the
/// largest |<Tx,x> - <Px,x>| over maximizers x of T and parts P with
/// w(P) = w(T) within tol (0 when no part qualifies).
VerificationReport verify_witness(const ComplexMatrix& t, const Witness& w, double tol = 1e-7);

/// Singular-value split: T +- delta u_k v_k* where sigma_k is the smallest
/// singular value and delta = ||T|| - sigma_k. T must be normaloid and not unitary.
Witness kadison_split(const ComplexMatrix& t, double tol = 1e-7);

/// For diag(d1, d2) with {d1, d2} = {1, -1}: A = [[d1, i], [i, d2]], B = A*.
Witness selfadjoint_split(double d1, double d2);

/// For [[beta, zeta], [0, beta]], beta, zeta != 0.
Witness shear_split(Complex beta, Complex zeta);

/// [[1, alpha], [-conj(alpha), a_diag]] in the basis (x, y), up to the unimodular phase:
/// Q* T Q = phase * [[1, alpha], [-conj(alpha), a_diag]], Q = [x y].
struct CanonicalForm2x2 {
  UnitVector x;
  UnitVector y;
  Complex alpha;
  Complex a_diag;
  Complex phase;
};

enum class OffdiagCase { Basis, II, III };
std::string_view to_string(OffdiagCase c);

/// Perturbs alpha by +-beta with beta along alpha, |beta| half the largest
/// feasible magnitude. Case constraints on gamma = alpha +- beta:
/// Basis |gamma| < 1 (a = -1); II 4|gamma|^2 < (1-a)^2; III 2|gamma|^2 + a - 1 < 0.
/// Throws NoFeasibleBeta when the feasible range is shorter than tol.
Witness offdiag_perturb(const ComplexMatrix& t, const CanonicalForm2x2& canon, OffdiagCase which,
                        double tol = 1e-7);

/// T = [[l1 I, A], [0, l2 I]] with ||A|| = 1 and A not an isometry.
Witness block_upper_split(Complex lambda1, Complex lambda2, const ComplexMatrix& a);

enum class LiftPosition { First, Second };

/// Embeds the split block next to an untouched block. Throws
/// RadiusOrderViolation if w(other) exceeds w of the split block.
Witness blockdiag_lift(const Witness& w_block, const ComplexMatrix& other, LiftPosition pos);

}  // namespace nurad
