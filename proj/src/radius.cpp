#include "nurad/radius.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nurad/errors.hpp"
#include "nurad/random.hpp"

namespace nurad {

std::string_view to_string(RadiusMethod m) {
  switch (m) {
    case RadiusMethod::Sweep: return "sweep";
    case RadiusMethod::Sample: return "sample";
    case RadiusMethod::ClosedForm: return "closed-form";
  }
  return "sweep";
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

double cyclic_distance(double a, double b) {
  const double d = std::abs(wrap_angle(a) - wrap_angle(b));
  return std::min(d, kTwoPi - d);
}

struct Objective {
  const ComplexMatrix& t;
  ComplexMatrix re, im;

  explicit Objective(const ComplexMatrix& m) : t(m), re(real_part(m)), im(imag_part(m)) {}

  double value(double theta) const {
    return hermitian_top_eigenvalue(rotated_real_part(re, im, theta));
  }

  // f'(theta) = -Im(e^{i theta} <T x, x>) for the top eigenvector x.
  double slope(double theta) const {
    const auto es = hermitian_eigen(rotated_real_part(re, im, theta), 1e-6);
    const Complex z = quad_form(t, es.vectors.front());
    return -(std::polar(1.0, theta) * z).imag();
  }
};

struct Candidate {
  double theta;
  double value;
};

// Refines a coarse local maximum bracketed by [lo, hi].
Candidate refine(const Objective& f, double lo, double mid, double hi, double scale) {
  double best_theta;
  const double slo = f.slope(lo), shi = f.slope(hi);
  if (slo > 0.0 && shi < 0.0) {
    // Sign-change bisection on the analytic slope; stable to machine precision
    // even where the objective is very flat.
    double a = lo, b = hi;
    for (int it = 0; it < 80 && b - a > 1e-16; ++it) {
      const double m = 0.5 * (a + b);
      if (f.slope(m) > 0.0) a = m; else b = m;
    }
    best_theta = 0.5 * (a + b);
  } else {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f.value(c), fd = f.value(d);
    for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
      if (fc > fd) {
        b = d; d = c; fd = fc;
        c = b - gr * (b - a); fc = f.value(c);
      } else {
        a = c; c = d; fc = fd;
        d = a + gr * (b - a); fd = f.value(d);
      }
    }
    best_theta = 0.5 * (a + b);
  }

  // Between the refined angle and the coarse grid angle, keep the one with the
  // larger objective; near-ties go to the smaller slope magnitude.
  const double fr = f.value(best_theta), fm = f.value(mid);
  const double tie = 8.0 * std::numeric_limits<double>::epsilon() * scale;
  if (fm > fr + tie) return {mid, fm};
  if (fr > fm + tie) return {best_theta, fr};
  return std::abs(f.slope(mid)) <= std::abs(f.slope(best_theta)) ? Candidate{mid, fm}
                                                                  : Candidate{best_theta, fr};
}

void push_unique(std::vector<UnitVector>& out, const UnitVector& v, double tol) {
  for (const auto& w : out) {
    double d = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) d += std::norm(v[i] - w[i]);
    if (std::sqrt(d) <= tol) return;
  }
  out.push_back(v);
}

}  // namespace

UnitVector canonical_phase(const UnitVector& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i]));
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (std::abs(x[i]) >= m * (1.0 - 1e-9)) { k = i; break; }
  }
  if (m == 0.0) return x;
  const Complex ph = std::conj(x[k]) / std::abs(x[k]);
  CVector v = x.components();
  for (auto& c : v) c *= ph;
  v[k] = std::abs(v[k]);
  return UnitVector::normalize(std::move(v));
}

RadiusReport radius_sweep(const ComplexMatrix& t, const SweepConfig& cfg) {
  if (cfg.coarse_points < 4 || !(cfg.refine_tol > 0.0) || !(cfg.dedup_tol > 0.0)) {
    throw NuradError(ErrorKind::InvalidArgument, "invalid sweep configuration");
  }
  RadiusReport rep;
  rep.method = RadiusMethod::Sweep;
  const std::size_t n = t.size();
  if (n == 0) return rep;

  const Objective f(t);
  const double fro = frobenius_norm(t);
  const double scale = std::max(1.0, fro);
  const int N = cfg.coarse_points;
  const double h = kTwoPi / N;

  std::vector<double> g(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) g[static_cast<std::size_t>(i)] = f.value(h * i);
  const double gmax = *std::max_element(g.begin(), g.end());
  const double gmin = *std::min_element(g.begin(), g.end());

  std::vector<Candidate> cands;
  if (gmax - gmin <= 1e-13 * scale) {
    rep.plateau = true;
    for (int k = 0; k < 8; ++k) {
      const int i = (k * N) / 8;
      cands.push_back({h * i, g[static_cast<std::size_t>(i)]});
    }
  } else {
    // lambda_max(Re(e^{i theta} T)) is Lipschitz with constant <= ||T||_F, so a
    // coarse point more than two grid steps' worth below the coarse maximum
    // cannot lead to the global one.
    const double reach = 2.0 * fro * h;
    for (int i = 0; i < N; ++i) {
      const double gi = g[static_cast<std::size_t>(i)];
      const double gp = g[static_cast<std::size_t>((i + N - 1) % N)];
      const double gn = g[static_cast<std::size_t>((i + 1) % N)];
      if (gi >= gp && gi >= gn && gi >= gmax - reach) {
        cands.push_back(refine(f, h * (i - 1), h * i, h * (i + 1), scale));
      }
    }
  }

  double best = -std::numeric_limits<double>::infinity();
  for (const auto& c : cands) best = std::max(best, c.value);
  rep.value = std::max(0.0, best);

  const double keep = cfg.dedup_tol * std::max(1.0, rep.value);
  for (const auto& c : cands) {
    if (c.value < best - keep) continue;
    const double th = wrap_angle(c.theta);
    const bool dup = std::any_of(rep.theta_stars.begin(), rep.theta_stars.end(),
                                 [&](double o) { return cyclic_distance(o, th) <= 1e-9; });
    if (!dup) rep.theta_stars.push_back(th);
  }
  std::sort(rep.theta_stars.begin(), rep.theta_stars.end());

  for (double th : rep.theta_stars) {
    const auto es = hermitian_eigen(rotated_real_part(f.re, f.im, th), 1e-6);
    const double top = es.values.front();
    for (std::size_t k = 0; k < es.values.size(); ++k) {
      if (es.values[k] < top - 1e-9 * scale) break;
      push_unique(rep.maximizers, canonical_phase(es.vectors[k]), cfg.dedup_tol);
    }
  }
  return rep;
}

double numerical_radius(const ComplexMatrix& t) { return radius_sweep(t).value; }

double radius_sample(const ComplexMatrix& t, std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw NuradError(ErrorKind::InvalidArgument, "n_samples must be >= 1");
  Rng rng(seed);
  const std::size_t n = t.size();
  double best = 0.0;
  CVector x(n);
  for (std::int64_t s = 0; s < n_samples; ++s) {
    double nn = 0.0;
    for (auto& c : x) {
      c = random_gaussian_complex(rng);
      nn += std::norm(c);
    }
    Complex q{};
    for (std::size_t i = 0; i < n; ++i) {
      Complex row{};
      for (std::size_t j = 0; j < n; ++j) row += t(i, j) * x[j];
      q += row * std::conj(x[i]);
    }
    if (nn > 0.0) best = std::max(best, std::abs(q) / nn);
  }
  return best;
}

BasisDeficit basis_deficit(const ComplexMatrix& t, const RadiusReport& report) {
  if (t.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "basis test needs n = 2");
  BasisDeficit best{std::numeric_limits<double>::infinity(), {}};
  for (const auto& x : report.maximizers) {
    const auto y = UnitVector::normalize({-std::conj(x[1]), std::conj(x[0])});
    const double d = report.value - std::abs(quad_form(t, y));
    if (d < best.deficit) best = {d, x};
  }
  return best;
}

std::optional<std::pair<UnitVector, UnitVector>> maximizer_contains_on_basis(
    const ComplexMatrix& t, const RadiusReport& report, double tol) {
  if (t.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "basis test needs n = 2");
  if (report.maximizers.empty()) return std::nullopt;
  const auto bd = basis_deficit(t, report);
  if (std::abs(bd.deficit) > tol * std::max(1.0, report.value)) return std::nullopt;
  auto y = UnitVector::normalize({-std::conj(bd.x[1]), std::conj(bd.x[0])});
  return std::make_pair(bd.x, canonical_phase(y));
}

bool is_normaloid(const ComplexMatrix& t, double tol) {
  const double w = numerical_radius(t);
  const double nt = operator_norm(t);
  return std::abs(w - nt) <= tol * std::max(1.0, nt);
}

std::vector<Complex> range_boundary(const ComplexMatrix& t, int n_points) {
  if (n_points < 3) throw NuradError(ErrorKind::InvalidArgument, "n_points must be >= 3");
  const ComplexMatrix re = real_part(t), im = imag_part(t);
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(n_points));
  for (int j = 0; j < n_points; ++j) {
    const double th = kTwoPi * j / n_points;
    const auto es = hermitian_eigen(rotated_real_part(re, im, th), 1e-6);
    pts.push_back(quad_form(t, es.vectors.front()));
  }
  return pts;
}

double maximizer_condition_residual(const ComplexMatrix& t, const UnitVector& x) {
  const ComplexMatrix re = real_part(t), im = imag_part(t);
  const CVector rx = re * std::span<const Complex>(x);
  const CVector ix = im * std::span<const Complex>(x);
  const double r = inner(rx, x).real();
  const double s = inner(ix, x).real();
  CVector v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = r * rx[i] + s * ix[i] - x[i];
  return norm2(v);
}

}  // namespace nurad
