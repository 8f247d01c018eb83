#include "nurad/closed_forms.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "nurad/errors.hpp"

namespace nurad {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kPhiGrid = 1440;

struct Ellipse {
  double H, K, a, b;
  // squared distance from the origin, in the frame rotated by -theta
  double dist2(double phi) const {
    const double u = H + a * std::cos(phi), v = K + b * std::sin(phi);
    return u * u + v * v;
  }
  // half the derivative of dist2
  double g(double phi) const {
    return b * K * std::cos(phi) - a * H * std::sin(phi) - 0.5 * (a * a - b * b) * std::sin(2.0 * phi);
  }
  double dg(double phi) const {
    return -b * K * std::sin(phi) - a * H * std::cos(phi) - (a * a - b * b) * std::cos(2.0 * phi);
  }
};

// Safeguarded Newton on g inside [lo, hi] where g(lo) > 0 > g(hi).
double polish_root(const Ellipse& e, double lo, double hi) {
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 100; ++it) {
    const double gx = e.g(x);
    if (gx == 0.0) return x;
    if (gx > 0.0) lo = x; else hi = x;
    const double d = e.dg(x);
    double next = d != 0.0 ? x - gx / d : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 1e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 1e-15) return next;
    x = next;
  }
  return x;
}

}  // namespace

double stationarity_residual(const EllipseGeometry& g) {
  const double a = g.a_axis, b = g.b_axis;
  return 0.5 * (a * a - b * b) * std::sin(2.0 * g.phi0) -
         (b * g.K_coef * std::cos(g.phi0) - a * g.H_coef * std::sin(g.phi0));
}

std::pair<double, EllipseGeometry> radius_block(Complex lambda1, Complex lambda2, double a_norm) {
  if (!(a_norm >= 0.0)) throw NuradError(ErrorKind::InvalidArgument, "a_norm must be >= 0");
  EllipseGeometry geo;
  const Complex diff = lambda1 - lambda2;
  const bool degenerate = diff == Complex{};
  geo.theta = degenerate ? 0.0 : std::arg(0.5 * diff);
  const Complex sum = lambda1 + lambda2;
  geo.h = 0.5 * sum.real();
  geo.k = 0.5 * sum.imag();
  const double ct = std::cos(geo.theta), st = std::sin(geo.theta);
  geo.H_coef = geo.h * ct + geo.k * st;
  geo.K_coef = geo.h * st - geo.k * ct;
  geo.a_axis = 0.5 * std::sqrt(std::norm(diff) + a_norm * a_norm);
  geo.b_axis = 0.5 * a_norm;

  const Ellipse e{geo.H_coef, geo.K_coef, geo.a_axis, geo.b_axis};
  const double step = kTwoPi / kPhiGrid;
  std::vector<double> f(kPhiGrid);
  for (int i = 0; i < kPhiGrid; ++i) f[static_cast<std::size_t>(i)] = e.dist2(step * i);

  double best_phi = 0.0, best = f[0];
  for (int i = 0; i < kPhiGrid; ++i) {
    const double fi = f[static_cast<std::size_t>(i)];
    const double fp = f[static_cast<std::size_t>((i + kPhiGrid - 1) % kPhiGrid)];
    const double fn = f[static_cast<std::size_t>((i + 1) % kPhiGrid)];
    if (!(fi >= fp && fi >= fn)) continue;
    double phi = step * i;
    const double lo = step * (i - 1), hi = step * (i + 1);
    if (e.g(lo) > 0.0 && e.g(hi) < 0.0) phi = polish_root(e, lo, hi);
    const double val = e.dist2(phi);
    if (val > best) {
      best = val;
      best_phi = phi;
    }
  }
  best_phi = std::fmod(best_phi + kTwoPi, kTwoPi);
  geo.phi0 = best_phi;
  const double cp = std::cos(best_phi), sp = std::sin(best_phi);
  geo.x0 = geo.h + geo.a_axis * cp * ct + geo.b_axis * sp * st;
  geo.y0 = geo.k + geo.a_axis * cp * st - geo.b_axis * sp * ct;

  // Equal eigenvalues leave theta undefined; the range is then a disc of
  // radius ||A||/2 around lambda1.
  const double w = degenerate ? std::abs(lambda1) + 0.5 * a_norm : std::hypot(geo.x0, geo.y0);
  return {w, geo};
}

double radius_collinear(Complex lambda1, Complex lambda2, Complex zeta) {
  const double scale = std::abs(lambda1) * std::abs(lambda2);
  if (std::abs((lambda1 * std::conj(lambda2)).imag()) > 1e-10 * scale) {
    throw NuradError(ErrorKind::NotCollinear, "eigenvalues are not collinear with the origin");
  }
  return 0.5 * (std::abs(lambda1 + lambda2) + std::sqrt(std::norm(lambda1 - lambda2) + std::norm(zeta)));
}

double radius_johnson(Complex lambda1, Complex lambda2, Complex zeta) {
  const double m1 = std::abs(lambda1), m2 = std::abs(lambda2);
  if (std::abs(m1 - m2) > 1e-10 * std::max(1.0, m1)) {
    throw NuradError(ErrorKind::ModulusMismatch, "eigenvalues differ in modulus");
  }
  if (std::abs(lambda1 - lambda2) <= 1e-14 * std::max(1.0, m1) || m1 == 0.0) {
    throw NuradError(ErrorKind::EqualEigenvalues, "eigenvalues coincide");
  }
  const double r = 0.5 * (m1 + m2);
  const double half = 0.5 * std::abs(std::arg(lambda2 * std::conj(lambda1)));  // (0, pi/2]
  const double s = std::sin(half), c = std::cos(half);
  const double z = std::abs(zeta) / (2.0 * r * s);
  if (z * c >= s) return r * (z * s + c);  // z >= tan(half)
  return r * std::sqrt(1.0 + z * z);
}

WtFamily WtFamily::make(double a, Complex alpha) {
  if (!(std::abs(a) < 1.0)) throw NuradError(ErrorKind::InvalidArgument, "need |a| < 1");
  if (alpha == Complex{}) throw NuradError(ErrorKind::InvalidArgument, "need alpha != 0");
  return {a, alpha};
}

ComplexMatrix WtFamily::matrix() const {
  return ComplexMatrix{{1.0, alpha}, {-std::conj(alpha), a}};
}

std::optional<double> radius_wt_family(const WtFamily& fam) {
  const double s4 = 4.0 * std::norm(fam.alpha);
  const double d = (1.0 - fam.a) * (1.0 - fam.a);
  // The closed upper edge 4|alpha|^2 = 2(1-a) is admitted up to rounding.
  const bool region_i = d < s4 && s4 <= 2.0 * (1.0 - fam.a) * (1.0 + 1e-14);
  const bool region_ii = d > s4;
  if (region_i || region_ii) return 1.0;
  return std::nullopt;
}

std::pair<ComplexMatrix, TriangularForm2x2> triangularize_wt(const WtFamily& fam) {
  const double a = fam.a;
  const Complex al = fam.alpha;
  const double s4 = 4.0 * std::norm(al);
  const double d = (1.0 - a) * (1.0 - a);
  if (std::abs(s4 - d) <= 1e-12 * std::max(1.0, d)) {
    throw NuradError(ErrorKind::DegenerateDiscriminant, "4|alpha|^2 = (1-a)^2");
  }
  ComplexMatrix u;
  TriangularForm2x2 form;
  if (s4 > d) {
    const double K = std::sqrt(s4 - d);
    const Complex c1 = 2.0 * al, c2 = Complex(-1.0 + a, K);
    u = ComplexMatrix{{c1, Complex(1.0 - a, K)}, {c2, 2.0 * std::conj(al)}};
    u *= 1.0 / std::sqrt(std::norm(c1) + std::norm(c2));
    form.lambda1 = Complex(1.0 + a, K) / 2.0;
    form.lambda2 = std::conj(form.lambda1);
    form.zeta = (1.0 - a) * Complex(1.0 - a, K) / (2.0 * al);
  } else {
    const double R = std::sqrt(d - s4);
    const Complex c1 = 2.0 * al, c2 = -1.0 + a + R;
    u = ComplexMatrix{{c1, 1.0 - a - R}, {c2, 2.0 * std::conj(al)}};
    u *= 1.0 / std::sqrt(std::norm(c1) + std::norm(c2));
    form.lambda1 = (1.0 + a + R) / 2.0;
    form.lambda2 = (1.0 + a - R) / 2.0;
    form.zeta = 2.0 * std::conj(al);
  }
  const ComplexMatrix tri = adjoint(u) * fam.matrix() * u;
  if (frobenius_norm(tri - form.matrix()) > 1e-10 * std::max(1.0, frobenius_norm(tri))) {
    throw NuradError(ErrorKind::InternalInconsistency, "triangular form mismatch");
  }
  return {u, form};
}

}  // namespace nurad
