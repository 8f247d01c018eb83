#include "nurad/classifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "nurad/errors.hpp"
#include "nurad/radius.hpp"

namespace nurad {

namespace {

constexpr std::array<std::string_view, 19> kRegistry{
    "Thm2.1",  "Cor2.2",  "Thm2.3",  "Lemma2.4",  "Thm2.5",      "Thm2.7a",          "Thm2.7b",
    "Thm2.8",  "Thm2.9",  "Thm2.13", "Thm2.14",   "Lemma2.15",   "Thm2.18",          "Thm2.18-gap",
    "Thm2.18-hypothesis", "boundary", "no-theorem", "witness-rejected", "internal-inconsistency"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Verdict extreme(std::string tag, std::string notes = {}) {
  return {VerdictKind::Extreme, std::move(tag), std::nullopt, std::move(notes), 1.0};
}

Verdict not_extreme(std::string tag, Witness w, std::string notes = {}) {
  return {VerdictKind::NotExtreme, std::move(tag), std::move(w), std::move(notes), 1.0};
}

Verdict unknown(std::string tag, std::string notes = {}) {
  return {VerdictKind::Unknown, std::move(tag), std::nullopt, std::move(notes), 1.0};
}

// Distance `v` from a rule boundary that lies strictly outside tol but inside the band.
bool in_band(double v, double tol) { return v > tol && v < kBoundaryBand; }

// Moves the (small) midpoint mismatch left by a construction on an
// approximately structured input into both parts, so T = tA + (1-t)B holds
// to rounding. Larger mismatches are left for verify_witness to reject.
Witness absorb(const ComplexMatrix& s, Witness w, double tol) {
  const ComplexMatrix e = s - (w.t * w.A + (1.0 - w.t) * w.B);
  if (frobenius_norm(e) <= 100.0 * tol * std::max(1.0, frobenius_norm(s))) {
    w.A += e;
    w.B += e;
  }
  return w;
}

// Gate: a NotExtreme verdict must carry a witness that verifies against s.
Verdict gate(const ComplexMatrix& s, Verdict v, double tol) {
  if (v.kind != VerdictKind::NotExtreme) return v;
  if (!v.witness) return unknown("witness-rejected", "no witness produced under " + v.theorem);
  const auto rep = verify_witness(s, *v.witness, tol);
  if (rep.passed) return v;
  return unknown("witness-rejected", v.theorem + " witness failed verification: midpoint=" +
                                         fmt(rep.midpoint_residual) + " slackA=" + fmt(rep.radius_slack_A) +
                                         " slackB=" + fmt(rep.radius_slack_B) + " distinct=" +
                                         fmt(rep.distinctness) + " lemma=" + fmt(rep.lemma_gen_residual));
}

// Converts construction failures into abstentions.
template <class F>
Verdict guarded(F&& f) {
  try {
    return f();
  } catch (const NuradError& e) {
    if (e.kind() == ErrorKind::NoFeasibleBeta) return unknown("boundary", e.what());
    return unknown("internal-inconsistency", std::string(to_string(e.kind())) + ": " + e.what());
  }
}

// Kadison split with the band check on the smallest singular value.
Verdict kadison_verdict(const ComplexMatrix& s, std::string tag, double tol) {
  const double smin = svd(s).sigma.back();
  if (in_band(1.0 - smin, tol)) return unknown("boundary", "smallest singular value " + fmt(smin) + " near 1");
  return not_extreme(std::move(tag), kadison_split(s, tol), "smallest singular value " + fmt(smin));
}

// Witness for Q diag(d) Q* from the antipodal pair (i, j): d[i] * diag(1, -1)
// split, lifted over the remaining diagonal, rotated back by Q.
Witness antipodal_witness(const ComplexMatrix& s, const ComplexMatrix& q, std::span<const Complex> d, std::size_t i,
                          std::size_t j, Complex unit, double tol) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order{i, j};
  for (std::size_t k = 0; k < n; ++k)
    if (k != i && k != j) order.push_back(k);
  std::vector<CVector> cols;
  std::vector<Complex> rest;
  for (std::size_t k : order) cols.push_back(q.column(k));
  for (std::size_t k = 2; k < n; ++k) rest.push_back(d[order[k]]);
  Witness w = scaled(selfadjoint_split(1.0, -1.0), unit);
  if (!rest.empty()) w = blockdiag_lift(w, ComplexMatrix::diagonal(rest), LiftPosition::First);
  w = transformed(w, ComplexMatrix::from_columns(cols));
  return absorb(s, w, tol);
}

Verdict normal_impl(const ComplexMatrix& s, double tol) {
  const NormalEigen ne = normal_eigen(s, 1e-9);
  const auto& d = ne.values;
  double min_mod = 1.0;
  for (const auto& z : d) min_mod = std::min(min_mod, std::abs(z));
  if (min_mod < 1.0 - tol) {
    return kadison_verdict(s, is_positive(s) ? "Cor2.2" : "Thm2.1", tol);
  }
  bool all_equal = true;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (std::abs(d[i] - d[j]) > tol) all_equal = false;
      const double gap = std::abs(d[i] + d[j]);  // distance from antipodality
      if (in_band(gap, tol)) return unknown("boundary", "eigenvalue pair nearly antipodal");
      if (gap > tol) continue;
      const Complex unit = d[i] / std::abs(d[i]);
      const std::string tag = s.size() == 2 ? "Thm2.7b" : "Thm2.9";
      return not_extreme(tag, antipodal_witness(s, ne.Q, d, i, j, unit, tol),
                         "antipodal eigenvalues " + fmt(d[i].real()) + "+" + fmt(d[i].imag()) + "i and " +
                             fmt(d[j].real()) + "+" + fmt(d[j].imag()) + "i");
    }
  }
  if (all_equal) return extreme("Thm2.7a", "scalar unitary; every eigenvalue pair is equal");
  if (s.size() == 2) return extreme("Thm2.8", "unitary with non-collinear eigenvalues");
  return extreme("Thm2.9", "unitary; no eigenvalue pair is antipodal");
}

Verdict selfadjoint_impl(const ComplexMatrix& s, double tol) {
  const EigenSystem es = hermitian_eigen(s, 1e-9);
  const auto& v = es.values;
  const bool plus_i = std::all_of(v.begin(), v.end(), [&](double x) { return std::abs(x - 1.0) <= tol; });
  const bool minus_i = std::all_of(v.begin(), v.end(), [&](double x) { return std::abs(x + 1.0) <= tol; });
  if (plus_i || minus_i) return extreme("Thm2.5", plus_i ? "T = I" : "T = -I");

  double min_mod = 1.0;
  for (double x : v) min_mod = std::min(min_mod, std::abs(x));
  if (min_mod < 1.0 - tol) return kadison_verdict(s, is_positive(s) ? "Cor2.2" : "Thm2.5", tol);

  // Unitary and self-adjoint, not +-I: both 1 and -1 occur (values are descending).
  std::vector<CVector> cols;
  for (const auto& x : es.vectors) cols.push_back(x.components());
  const ComplexMatrix q = ComplexMatrix::from_columns(cols);
  std::vector<Complex> d(v.begin(), v.end());
  const std::string tag = s.size() == 2 ? "Lemma2.4" : "Thm2.5";
  return not_extreme(tag, antipodal_witness(s, q, d, 0, v.size() - 1, 1.0, tol), "eigenvalues 1 and -1");
}

Verdict normaloid_impl(const ComplexMatrix& s, double tol) {
  const double smin = svd(s).sigma.back();
  if (smin < 1.0 - tol) return kadison_verdict(s, "Thm2.1", tol);
  return normal_impl(s, tol);
}

std::optional<Verdict> block_upper_impl(const ComplexMatrix& s, double tol) {
  const std::size_t n = s.size();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  const std::size_t m = n / 2;
  const Complex l1 = s(0, 0), l2 = s(m, m);
  if (s.block_frobenius(m, n, 0, m) > tol) return std::nullopt;
  if (frobenius_norm(s.block(0, 0, m) - l1 * ComplexMatrix::identity(m)) > tol) return std::nullopt;
  if (frobenius_norm(s.block(m, m, m) - l2 * ComplexMatrix::identity(m)) > tol) return std::nullopt;
  const ComplexMatrix a = s.block(0, m, m);
  const SvdSystem sv = svd(a);
  const double top = sv.sigma.front();
  if (top <= tol) return std::nullopt;
  const double ratio = sv.sigma.back() / top;
  if (ratio >= 1.0 - tol) return std::nullopt;  // corner is a multiple of an isometry: silent
  if (in_band(1.0 - ratio, tol)) return unknown("boundary", "corner block is nearly a multiple of an isometry");
  const Witness w = block_upper_split(l1 / top, l2 / top, (1.0 / top) * a);
  return not_extreme("Thm2.13", absorb(s, scaled(w, top), tol), "corner block norm " + fmt(top));
}

Verdict twobytwo_impl(const ComplexMatrix& s, double tol) {
  if (is_normaloid(s, tol)) return normaloid_impl(s, tol);
  const RadiusReport rep = radius_sweep(s);
  if (rep.maximizers.empty()) return unknown("internal-inconsistency", "no maximizer");

  const BasisDeficit bd = basis_deficit(s, rep);
  if (bd.deficit <= tol) {
    const CanonicalForm2x2 c = canonical_form_2x2(s, bd.x);
    if (std::abs(c.a_diag + 1.0) > 1e-6) {
      return unknown("internal-inconsistency", "basis case with <Ty,y>/<Tx,x> = " + fmt(c.a_diag.real()) + "+" +
                                                   fmt(c.a_diag.imag()) + "i");
    }
    const double m = std::abs(c.alpha);
    const std::string note = "|<Tx,y>| = " + fmt(m);
    if (std::abs(m - 1.0) <= tol) return extreme("Thm2.14", note);
    if (in_band(std::abs(m - 1.0), tol)) return unknown("boundary", note);
    if (m > 1.0) return unknown("internal-inconsistency", note);
    return not_extreme("Thm2.14", offdiag_perturb(s, c, OffdiagCase::Basis, tol), note);
  }
  if (in_band(bd.deficit, tol)) return unknown("boundary", "orthonormal maximizer basis nearly present");

  // Most accurate maximizers first; ties broken lexicographically.
  std::vector<std::pair<double, UnitVector>> cands;
  for (const auto& x : rep.maximizers) cands.emplace_back(maximizer_condition_residual(s, x), x);
  std::stable_sort(cands.begin(), cands.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    for (std::size_t i = 0; i < p.second.size(); ++i) {
      const Complex a = p.second[i], b = q.second[i];
      if (a.real() != b.real()) return a.real() < b.real();
      if (a.imag() != b.imag()) return a.imag() < b.imag();
    }
    return false;
  });

  double best_im = std::numeric_limits<double>::infinity();
  for (const auto& [res, x] : cands) {
    const CanonicalForm2x2 c = canonical_form_2x2(s, x);
    const double im = std::abs(c.a_diag.imag());
    best_im = std::min(best_im, im);
    if (im > tol) continue;

    const double a = c.a_diag.real();
    const double m2 = std::norm(c.alpha);
    const double d = 4.0 * m2 - (1.0 - a) * (1.0 - a);
    const std::string note = "a = " + fmt(a) + ", |alpha| = " + fmt(std::sqrt(m2)) + ", 4|alpha|^2 - (1-a)^2 = " + fmt(d);
    if (std::abs(d) <= tol) {
      // Case I: equal eigenvalues, triangular form [[beta, zeta], [0, beta]].
      const Schur2x2 sch = schur_2x2(s);
      const Complex l1 = sch.upper(0, 0), l2 = sch.upper(1, 1);
      const Complex beta = 0.5 * (l1 + l2);
      Witness w = shear_split(beta, sch.upper(0, 1));
      w.B(0, 0) += (l1 - beta) / (1.0 - w.t);
      w.B(1, 1) += (l2 - beta) / (1.0 - w.t);
      return not_extreme("Lemma2.15", absorb(s, transformed(w, sch.U), tol), note);
    }
    if (in_band(std::abs(d), tol)) return unknown("boundary", note);
    if (d < 0.0) return not_extreme("Thm2.18", offdiag_perturb(s, c, OffdiagCase::II, tol), "case II; " + note);

    const double e = 2.0 * m2 + a - 1.0;
    const std::string note3 = note + ", 2|alpha|^2 + a - 1 = " + fmt(e);
    if (e > 1e-7) return unknown("internal-inconsistency", "case III inequality violated; " + note3);
    if (std::abs(e) <= tol) return unknown("Thm2.18-gap", note3);
    if (in_band(-e, tol)) return unknown("boundary", note3);
    return not_extreme("Thm2.18", offdiag_perturb(s, c, OffdiagCase::III, tol), "case III; " + note3);
  }
  if (in_band(best_im, tol)) return unknown("boundary", "<Ty,y> nearly real after phase normalization");
  return unknown("Thm2.18-hypothesis", "no maximizer with <Ty,y>/<Tx,x> real; smallest |Im| = " + fmt(best_im));
}

// One two-block split at the admissible cut nearest the middle (ties to the
// smaller cut); each half is classified on its own and recursion finds finer
// structure inside it.
std::optional<Verdict> block_diag_impl(const ComplexMatrix& s, double tol) {
  const std::size_t n = s.size();
  std::optional<std::size_t> cut;
  for (std::size_t k = 1; k < n; ++k) {
    if (s.block_frobenius(0, k, k, n) > tol || s.block_frobenius(k, n, 0, k) > tol) continue;
    const auto dist = [n](std::size_t c) { return c * 2 > n ? c * 2 - n : n - c * 2; };
    if (!cut || dist(k) < dist(*cut)) cut = k;
  }
  if (!cut) return std::nullopt;
  const std::size_t k = *cut;
  const std::array<std::pair<std::size_t, std::size_t>, 2> halves{{{0, k}, {k, n}}};
  for (const auto& [lo, hi] : halves) {
    const ComplexMatrix blk = s.block(lo, lo, hi - lo);
    const double wb = numerical_radius(blk);
    if (wb == 0.0 || std::abs(wb - 1.0) > tol) continue;
    const Verdict inner = classify(blk, tol);
    if (inner.kind != VerdictKind::NotExtreme) continue;
    try {
      Witness w = scaled(*inner.witness, wb);
      w = lo == 0 ? blockdiag_lift(w, s.block(k, k, n - k), LiftPosition::First)
                  : blockdiag_lift(w, s.block(0, 0, k), LiftPosition::Second);
      return not_extreme("Thm2.3", absorb(s, w, tol),
                         "block [" + std::to_string(lo) + ", " + std::to_string(hi) + ") is not extreme by " +
                             inner.theorem);
    } catch (const NuradError& e) {
      if (e.kind() != ErrorKind::RadiusOrderViolation) throw;
    }
  }
  return std::nullopt;
}

Verdict dispatch(const ComplexMatrix& s, double tol) {
  if (auto v = block_diag_impl(s, tol)) return *v;
  if (is_self_adjoint(s)) return selfadjoint_impl(s, tol);
  if (is_normal(s)) return normal_impl(s, tol);
  if (is_normaloid(s, tol)) return normaloid_impl(s, tol);
  if (auto v = block_upper_impl(s, tol)) return *v;
  if (s.size() == 2) return twobytwo_impl(s, tol);
  return unknown("no-theorem", "non-normaloid, no block structure, n = " + std::to_string(s.size()));
}

}  // namespace

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Extreme: return "Extreme";
    case VerdictKind::NotExtreme: return "NotExtreme";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

VerdictKind verdict_kind_from_string(std::string_view s) {
  for (auto k : {VerdictKind::Extreme, VerdictKind::NotExtreme, VerdictKind::Unknown})
    if (to_string(k) == s) return k;
  throw NuradError(ErrorKind::BadFormat, "unknown verdict kind '" + std::string(s) + "'");
}

std::span<const std::string_view> theorem_registry() { return kRegistry; }

bool is_registered_theorem(std::string_view tag) {
  return std::find(kRegistry.begin(), kRegistry.end(), tag) != kRegistry.end();
}

bool pair_extreme(Complex d1, Complex d2, double tol) {
  if (std::min(std::abs(d1), std::abs(d2)) < 1.0 - tol) return false;
  if (std::abs(d1 - d2) <= tol) return true;
  return std::abs((d1 * std::conj(d2)).imag()) > tol;
}

CanonicalForm2x2 canonical_form_2x2(const ComplexMatrix& t, const UnitVector& x) {
  if (t.size() != 2 || x.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "canonical form needs n = 2");
  const UnitVector y = UnitVector::normalize({-std::conj(x[1]), std::conj(x[0])});
  const std::array<CVector, 2> cols{x.components(), y.components()};
  const ComplexMatrix q = ComplexMatrix::from_columns(cols);
  const ComplexMatrix m = adjoint(q) * t * q;
  if (std::abs(m(0, 0)) == 0.0) throw NuradError(ErrorKind::InternalInconsistency, "<Tx,x> = 0");
  const Complex phase = m(0, 0) / std::abs(m(0, 0));
  const ComplexMatrix c = std::conj(phase) * m;
  if (std::abs(c(1, 0) + std::conj(c(0, 1))) > 1e-7) {
    throw NuradError(ErrorKind::InternalInconsistency, "<Tx,y> != -conj(<Ty,x>) at the maximizer");
  }
  return {x, y, c(0, 1), c(1, 1), phase};
}

Verdict classify_normal(const ComplexMatrix& t, double tol) {
  if (!is_normal(t)) throw NuradError(ErrorKind::NotNormal, "operator is not normal");
  return gate(t, guarded([&] { return normal_impl(t, tol); }), tol);
}

Verdict classify_selfadjoint(const ComplexMatrix& t, double tol) {
  if (!is_self_adjoint(t)) throw NuradError(ErrorKind::NotSelfAdjoint, "operator is not self-adjoint");
  return gate(t, guarded([&] { return selfadjoint_impl(t, tol); }), tol);
}

Verdict classify_normaloid(const ComplexMatrix& t, double tol) {
  if (!is_normaloid(t, tol)) throw NuradError(ErrorKind::NotNormaloid, "w(T) != ||T||");
  return gate(t, guarded([&] { return normaloid_impl(t, tol); }), tol);
}

std::optional<Verdict> classify_block_upper(const ComplexMatrix& t, double tol) {
  std::optional<Verdict> out;
  const Verdict v = guarded([&] {
    out = block_upper_impl(t, tol);
    return out ? *out : Verdict{};
  });
  if (!out && v.theorem.empty()) return std::nullopt;
  return gate(t, v, tol);
}

std::optional<Verdict> classify_block_diag(const ComplexMatrix& t, double tol) {
  std::optional<Verdict> out;
  const Verdict v = guarded([&] {
    out = block_diag_impl(t, tol);
    return out ? *out : Verdict{};
  });
  if (!out && v.theorem.empty()) return std::nullopt;
  return gate(t, v, tol);
}

Verdict classify_2x2(const ComplexMatrix& t, double tol) {
  if (t.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "classify_2x2 needs n = 2");
  return gate(t, guarded([&] { return twobytwo_impl(t, tol); }), tol);
}

Verdict classify(const ComplexMatrix& t, double tol) {
  if (t.empty() || frobenius_norm(t) == 0.0) throw NuradError(ErrorKind::ZeroOperator, "T = 0");
  if (!(tol > 0.0) || !(tol < kBoundaryBand)) throw NuradError(ErrorKind::InvalidArgument, "tol must be in (0, 1e-5)");
  const double w = numerical_radius(t);
  const ComplexMatrix s = (1.0 / w) * t;
  Verdict v = gate(s, guarded([&] { return dispatch(s, tol); }), tol);
  v.scale = w;
  v.notes = "scale = " + fmt(w) + (v.notes.empty() ? "" : "; " + v.notes);
  return v;
}

}  // namespace nurad
