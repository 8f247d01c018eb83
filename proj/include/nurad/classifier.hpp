#pragma once

// Extreme / NotExtreme / Unknown decisions for the unit ball of the numerical
// radius norm. Every verdict names the rule that produced it.

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "nurad/linalg.hpp"
#include "nurad/witness.hpp"

namespace nurad {

enum class VerdictKind { Extreme, NotExtreme, Unknown };
std::string_view to_string(VerdictKind k);
/// Throws BadFormat on an unknown name.
VerdictKind verdict_kind_from_string(std::string_view s);

/// The fixed set of theorem / reason identifiers a Verdict may carry.
std::span<const std::string_view> theorem_registry();
bool is_registered_theorem(std::string_view tag);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  std::string theorem;
  std::optional<Witness> witness;  // decomposes T / scale
  std::string notes;
  double scale = 1.0;              // w(T) of the classified input
};

/// Band above the verdict tolerance where a value is too close to a rule
/// boundary to be trusted; such inputs come back Unknown("boundary").
constexpr double kBoundaryBand = 1e-5;

/// Normalizes to w = 1 and dispatches: block-diagonal, self-adjoint, normal,
/// normaloid, block upper-triangular, 2x2, otherwise Unknown("no-theorem").
/// NotExtreme is only returned with a witness that passed verify_witness.
/// Throws ZeroOperator.
Verdict classify(const ComplexMatrix& t, double tol = 1e-7);

/// Unit-modulus pairs: true iff equal or not on a common line through 0.
bool pair_extreme(Complex d1, Complex d2, double tol = 1e-7);

// The rules below expect w(T) = 1 (classify normalizes before calling them).

/// Throws NotNormal.
Verdict classify_normal(const ComplexMatrix& t, double tol = 1e-7);
/// Throws NotSelfAdjoint.
Verdict classify_selfadjoint(const ComplexMatrix& t, double tol = 1e-7);
/// Throws NotNormaloid.
Verdict classify_normaloid(const ComplexMatrix& t, double tol = 1e-7);
/// [[l1 I, A], [0, l2 I]] with A not a multiple of an isometry; empty otherwise.
std::optional<Verdict> classify_block_upper(const ComplexMatrix& t, double tol = 1e-7);
/// Contiguous block-diagonal inputs where some full-radius block is not extreme.
std::optional<Verdict> classify_block_diag(const ComplexMatrix& t, double tol = 1e-7);
/// Throws DimensionMismatch unless n = 2.
Verdict classify_2x2(const ComplexMatrix& t, double tol = 1e-7);

/// Canonical form of a 2x2 T (w = 1) around the maximizer x; y is the
/// orthogonal complement. Throws InternalInconsistency when <Tx,y> is not
/// -conj(<Ty,x>) after phase normalization (within 1e-7).
CanonicalForm2x2 canonical_form_2x2(const ComplexMatrix& t, const UnitVector& x);

}  // namespace nurad
