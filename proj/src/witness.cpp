#include "nurad/witness.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "nurad/closed_forms.hpp"
#include "nurad/errors.hpp"
#include "nurad/radius.hpp"

namespace nurad {

namespace {

constexpr std::array<std::pair<Construction, std::string_view>, 6> kConstructionNames{{
    {Construction::Kadison, "kadison"},
    {Construction::SelfAdjoint, "selfadjoint"},
    {Construction::Shear, "shear"},
    {Construction::Offdiag, "offdiag"},
    {Construction::BlockUpper, "block-upper"},
    {Construction::BlockLift, "block-lift"},
}};

// u v*
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
  ComplexMatrix m(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

// Sweep value of a witness part against its closed-form radius.
void certify(const ComplexMatrix& part, double closed) {
  const double w = numerical_radius(part);
  if (std::abs(w - closed) > 1e-6 * std::max(1.0, closed)) {
    throw NuradError(ErrorKind::InternalInconsistency,
                     "witness part radius " + std::to_string(w) + " disagrees with closed form " +
                         std::to_string(closed));
  }
}

ComplexMatrix block_upper(Complex l1, Complex l2, const ComplexMatrix& a) {
  const std::size_t m = a.size();
  ComplexMatrix t(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    t(i, i) = l1;
    t(m + i, m + i) = l2;
    for (std::size_t j = 0; j < m; ++j) t(i, m + j) = a(i, j);
  }
  return t;
}

}  // namespace

std::string_view to_string(Construction c) {
  for (const auto& [k, name] : kConstructionNames)
    if (k == c) return name;
  return "kadison";
}

Construction construction_from_string(std::string_view s) {
  for (const auto& [k, name] : kConstructionNames)
    if (name == s) return k;
  throw NuradError(ErrorKind::BadFormat, "unknown construction '" + std::string(s) + "'");
}

std::string_view to_string(OffdiagCase c) {
  switch (c) {
    case OffdiagCase::Basis: return "basis";
    case OffdiagCase::II: return "II";
    case OffdiagCase::III: return "III";
  }
  return "basis";
}

Witness scaled(const Witness& w, Complex c) {
  return {w.t, c * w.A, c * w.B, w.construction};
}

Witness transformed(const Witness& w, const ComplexMatrix& u) {
  const ComplexMatrix ua = adjoint(u);
  return {w.t, conjugate(ua, w.A), conjugate(ua, w.B), w.construction};
}

VerificationReport verify_witness(const ComplexMatrix& t, const Witness& w, double tol) {
  if (w.A.size() != t.size() || w.B.size() != t.size()) {
    throw NuradError(ErrorKind::DimensionMismatch, "witness parts do not match the operator size");
  }
  VerificationReport r;
  const ComplexMatrix mid = w.t * w.A + (1.0 - w.t) * w.B;
  r.midpoint_residual = frobenius_norm(t - mid);

  const RadiusReport rt = radius_sweep(t);
  const double wt = rt.value;
  const double wa = numerical_radius(w.A), wb = numerical_radius(w.B);
  r.radius_slack_A = wt - wa;
  r.radius_slack_B = wt - wb;
  r.distinctness = std::min(frobenius_norm(w.A - t), frobenius_norm(w.B - t));

  const double scale = std::max(1.0, wt);
  for (const auto* part : {&w.A, &w.B}) {
    const double wp = part == &w.A ? wa : wb;
    if (std::abs(wp - wt) > tol * scale) continue;
    for (const auto& x : rt.maximizers) {
      r.lemma_gen_residual = std::max(r.lemma_gen_residual, std::abs(quad_form(t, x) - quad_form(*part, x)));
    }
  }

  const double tnorm = std::max(1.0, frobenius_norm(t));
  r.passed = w.t > 0.0 && w.t < 1.0 && r.midpoint_residual <= kWitnessMidpointTol * tnorm &&
             r.radius_slack_A >= -kWitnessSlackTol * scale && r.radius_slack_B >= -kWitnessSlackTol * scale &&
             r.distinctness >= kWitnessDistinctTol && r.lemma_gen_residual <= kWitnessLemmaTol * scale;
  return r;
}

Witness kadison_split(const ComplexMatrix& t, double tol) {
  if (t.empty()) throw NuradError(ErrorKind::InvalidArgument, "empty operator");
  if (!is_normaloid(t, tol)) throw NuradError(ErrorKind::NotNormaloid, "w(T) != ||T||");
  const SvdSystem s = svd(t);
  const double top = s.sigma.front();
  const std::size_t k = s.sigma.size() - 1;
  if (s.sigma[k] >= top * (1.0 - tol)) throw NuradError(ErrorKind::IsUnitary, "all singular values equal ||T||");
  const double delta = top - s.sigma[k];
  const ComplexMatrix p = delta * outer(s.U.column(k), s.V.column(k));
  Witness w{0.5, t + p, t - p, Construction::Kadison};
  for (const auto* part : {&w.A, &w.B}) {
    if (operator_norm(*part) > top + 1e-9 * std::max(1.0, top)) {
      throw NuradError(ErrorKind::InternalInconsistency, "singular-value split exceeds ||T||");
    }
  }
  return w;
}

Witness selfadjoint_split(double d1, double d2) {
  const bool plus = std::abs(d1 - 1.0) <= 1e-9 && std::abs(d2 + 1.0) <= 1e-9;
  const bool minus = std::abs(d1 + 1.0) <= 1e-9 && std::abs(d2 - 1.0) <= 1e-9;
  if (!plus && !minus) throw NuradError(ErrorKind::WrongSpectrum, "need {d1, d2} = {1, -1}");
  const double s = plus ? 1.0 : -1.0;
  const ComplexMatrix a{{s, kI}, {kI, -s}};
  return {0.5, a, adjoint(a), Construction::SelfAdjoint};
}

Witness shear_split(Complex beta, Complex zeta) {
  if (beta == Complex{} || zeta == Complex{}) throw NuradError(ErrorKind::ZeroParameter, "need beta, zeta != 0");
  const double k = std::abs(zeta) / std::abs(beta);
  const double t = 2.0 / (k + 2.0);
  const Complex ph = beta / std::abs(beta);
  const ComplexMatrix a = (ph * (std::abs(beta) / t)) * ComplexMatrix::identity(2);
  const ComplexMatrix b{{0.0, zeta / (1.0 - t)}, {0.0, 0.0}};
  return {t, a, b, Construction::Shear};
}

Witness offdiag_perturb(const ComplexMatrix& t, const CanonicalForm2x2& canon, OffdiagCase which, double tol) {
  if (t.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "offdiag_perturb needs n = 2");
  const double a = which == OffdiagCase::Basis ? -1.0 : canon.a_diag.real();
  const double m = std::abs(canon.alpha);

  // Every constraint is |gamma| < cap with gamma = alpha +- beta; |alpha - beta| <= |alpha + beta|.
  double cap = 1.0;
  if (which == OffdiagCase::II) cap = 0.5 * (1.0 - a);
  if (which == OffdiagCase::III) cap = std::sqrt(0.5 * (1.0 - a));
  const double s_max = cap - m;
  if (!(s_max > tol)) {
    throw NuradError(ErrorKind::NoFeasibleBeta, "no admissible beta for case " + std::string(to_string(which)));
  }
  // Centered choice; the alternates avoid alpha - beta = 0 and, in case III,
  // the equal-eigenvalue boundary 4|alpha - beta|^2 = (1-a)^2.
  double s = 0.0;
  for (double f : {0.5, 1.0 / 3.0, 2.0 / 3.0, 0.25}) {
    const double c = f * s_max, lo = std::abs(m - c);
    if (lo <= tol) continue;
    if (which == OffdiagCase::III && std::abs(lo - 0.5 * (1.0 - a)) <= tol) continue;
    s = c;
    break;
  }
  if (s == 0.0) throw NuradError(ErrorKind::NoFeasibleBeta, "every candidate beta is degenerate");

  const Complex dir = m > 0.0 ? canon.alpha / m : Complex(1.0);
  const Complex beta = s * dir;
  const std::array<CVector, 2> cols{canon.x.components(), canon.y.components()};
  const ComplexMatrix q = ComplexMatrix::from_columns(cols);
  const ComplexMatrix delta{{0.0, beta}, {-std::conj(beta), 0.0}};
  const ComplexMatrix p = canon.phase * (q * delta * adjoint(q));
  Witness w{0.5, t + p, t - p, Construction::Offdiag};

  for (int sign : {1, -1}) {
    const Complex g = canon.alpha + static_cast<double>(sign) * beta;
    double closed = 1.0;
    if (which == OffdiagCase::Basis) {
      const double c = std::sqrt(1.0 - std::norm(g));
      closed = radius_collinear(c, -c, 2.0 * std::conj(g));
    } else {
      const auto v = radius_wt_family(WtFamily::make(a, g));
      if (!v) throw NuradError(ErrorKind::InternalInconsistency, "perturbed family left the closed-form regions");
      closed = *v;
    }
    certify(sign > 0 ? w.A : w.B, closed * std::abs(canon.phase));
  }
  return w;
}

Witness block_upper_split(Complex lambda1, Complex lambda2, const ComplexMatrix& a) {
  if (a.empty()) throw NuradError(ErrorKind::InvalidArgument, "empty corner block");
  const SvdSystem s = svd(a);
  if (std::abs(s.sigma.front() - 1.0) > 1e-9) throw NuradError(ErrorKind::InvalidArgument, "need ||A|| = 1");
  const std::size_t k = s.sigma.size() - 1;
  if (s.sigma[k] >= 1.0 - 1e-9) throw NuradError(ErrorKind::IsIsometry, "corner block is an isometry");
  const ComplexMatrix p = (1.0 - s.sigma[k]) * outer(s.U.column(k), s.V.column(k));
  Witness w{0.5, block_upper(lambda1, lambda2, a + p), block_upper(lambda1, lambda2, a - p),
            Construction::BlockUpper};
  const double closed = radius_block(lambda1, lambda2, 1.0).first;
  certify(w.A, closed);
  certify(w.B, closed);
  return w;
}

Witness blockdiag_lift(const Witness& w_block, const ComplexMatrix& other, LiftPosition pos) {
  if (other.empty()) return w_block;
  const ComplexMatrix tb = w_block.t * w_block.A + (1.0 - w_block.t) * w_block.B;
  const double wb = numerical_radius(tb);
  if (numerical_radius(other) > wb + 1e-9 * std::max(1.0, wb)) {
    throw NuradError(ErrorKind::RadiusOrderViolation, "untouched block has the larger numerical radius");
  }
  const bool first = pos == LiftPosition::First;
  return {w_block.t, first ? block_diag(w_block.A, other) : block_diag(other, w_block.A),
          first ? block_diag(w_block.B, other) : block_diag(other, w_block.B), Construction::BlockLift};
}

}  // namespace nurad
