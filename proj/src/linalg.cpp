#include "nurad/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "nurad/errors.hpp"

namespace nurad {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::DependentInput: return "DependentInput";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::EqualEigenvalues: return "EqualEigenvalues";
    case ErrorKind::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotSelfAdjoint: return "NotSelfAdjoint";
    case ErrorKind::NotNormaloid: return "NotNormaloid";
    case ErrorKind::IsUnitary: return "IsUnitary";
    case ErrorKind::WrongSpectrum: return "WrongSpectrum";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::NoFeasibleBeta: return "NoFeasibleBeta";
    case ErrorKind::IsIsometry: return "IsIsometry";
    case ErrorKind::RadiusOrderViolation: return "RadiusOrderViolation";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// ---------------------------------------------------------------- matrix

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

ComplexMatrix::ComplexMatrix(std::size_t n, std::vector<Complex> entries)
    : n_(n), a_(std::move(entries)) {
  if (a_.size() != n_ * n_) {
    throw NuradError(ErrorKind::DimensionMismatch, "entry count does not match n*n");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw NuradError(ErrorKind::DimensionMismatch, "matrix literal is not square");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<Complex> d) {
  return diagonal(std::span<const Complex>(d.begin(), d.size()));
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const CVector> columns) {
  const std::size_t n = columns.size();
  ComplexMatrix m(n);
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != n) throw NuradError(ErrorKind::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < n; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

CVector ComplexMatrix::column(std::size_t c) const {
  CVector v(n_);
  for (std::size_t r = 0; r < n_; ++r) v[r] = (*this)(r, c);
  return v;
}

CVector ComplexMatrix::row(std::size_t r) const {
  return CVector(a_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                 a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t m) const {
  if (r0 + m > n_ || c0 + m > n_) throw NuradError(ErrorKind::DimensionMismatch, "block out of range");
  ComplexMatrix b(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

double ComplexMatrix::block_frobenius(std::size_t r0, std::size_t r1, std::size_t c0,
                                      std::size_t c1) const {
  double s = 0.0;
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = c0; j < c1; ++j) s += std::norm((*this)(i, j));
  return std::sqrt(s);
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw NuradError(ErrorKind::DimensionMismatch, "matrix sum");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.n_ != n_) throw NuradError(ErrorKind::DimensionMismatch, "matrix difference");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& x : a_) x *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw NuradError(ErrorKind::DimensionMismatch, "matrix product");
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

CVector operator*(const ComplexMatrix& a, std::span<const Complex> x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw NuradError(ErrorKind::DimensionMismatch, "matrix-vector product");
  CVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s{};
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// ---------------------------------------------------------------- vectors

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw NuradError(ErrorKind::DimensionMismatch, "inner product");
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * std::conj(v[i]);
  return s;
}

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Complex quad_form(const ComplexMatrix& t, std::span<const Complex> x) {
  return inner(t * x, x);
}

UnitVector UnitVector::normalize(CVector v) {
  const double nv = norm2(v);
  if (!(nv > 1e-300) || !std::isfinite(nv)) {
    throw NuradError(ErrorKind::DependentInput, "cannot normalize a zero vector");
  }
  for (auto& x : v) x /= nv;
  return UnitVector(std::move(v));
}

UnitVector UnitVector::basis(std::size_t n, std::size_t k) {
  CVector v(n);
  v.at(k) = 1.0;
  return UnitVector(std::move(v));
}

// ---------------------------------------------------------------- basics

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(m(i, j));
  return r;
}

ComplexMatrix real_part(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return r;
}

ComplexMatrix imag_part(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  ComplexMatrix r(n);
  // (z - conj(w)) / (2i) = -i/2 (z - conj(w))
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = Complex(0.0, -0.5) * (m(i, j) - std::conj(m(j, i)));
  return r;
}

ComplexMatrix rotated_real_part(const ComplexMatrix& re, const ComplexMatrix& im, double t) {
  const double c = std::cos(t), s = std::sin(t);
  const std::size_t n = re.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = c * re(i, j) - s * im(i, j);
  return r;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.entries()) s += std::norm(x);
  return std::sqrt(s);
}

// ---------------------------------------------------------------- Jacobi

namespace {

struct JacobiResult {
  std::vector<double> values;
  ComplexMatrix vectors;  // columns, unsorted
};

JacobiResult jacobi(ComplexMatrix a, bool want_vectors) {
  const std::size_t n = a.size();
  ComplexMatrix v = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double scale = frobenius_norm(a);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && scale > 0.0; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= 1e-14 * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex ph = std::conj(apq / mag);  // e^{-i phi}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag-phase * rotation restricted to (p, q)
        const Complex jpp = c, jpq = s, jqp = -s * ph, jqq = c * ph;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (want_vectors) {
          for (std::size_t k = 0; k < n; ++k) {
            const Complex vkp = v(k, p), vkq = v(k, q);
            v(k, p) = vkp * jpp + vkq * jqp;
            v(k, q) = vkp * jpq + vkq * jqq;
          }
        }
      }
    }
  }

  JacobiResult r;
  r.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.values[i] = a(i, i).real();
  r.vectors = std::move(v);
  return r;
}

// Largest eigenvalue: Householder reduction to tridiagonal form, then Sturm
// bisection. Only |e_i| matters, so the off-diagonal phases are dropped.
double tridiagonal_top(ComplexMatrix a) {
  const std::size_t n = a.size();
  CVector v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xn = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xn += std::norm(a(i, k));
    xn = std::sqrt(xn);
    if (xn == 0.0) continue;
    const Complex x0 = a(k + 1, k);
    const Complex ph = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    for (std::size_t i = 0; i < n; ++i) v[i] = i > k ? a(i, k) : 0.0;
    v[k + 1] += ph * xn;
    double vn = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vn += std::norm(v[i]);
    if (vn == 0.0) continue;
    const double beta = 2.0 / vn;
    // A <- H A H with H = I - beta v v*
    for (std::size_t c = 0; c < n; ++c) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += std::conj(v[i]) * a(i, c);
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(i, c) -= v[i] * s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      Complex s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += a(r, i) * v[i];
      s *= beta;
      for (std::size_t i = k + 1; i < n; ++i) a(r, i) -= s * std::conj(v[i]);
    }
  }
  std::vector<double> d(n), e2(n, 0.0);
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = a(i, i).real();
    if (i + 1 < n) e2[i] = std::norm(a(i + 1, i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::sqrt(e2[i - 1]) : 0.0) + (i + 1 < n ? std::sqrt(e2[i]) : 0.0);
    lo = i == 0 ? d[i] - r : std::min(lo, d[i] - r);
    hi = i == 0 ? d[i] + r : std::max(hi, d[i] + r);
  }
  const double tiny = std::numeric_limits<double>::min() * 4.0 + 1e-300;
  // true when every eigenvalue is < x
  const auto above_all = [&](double x) {
    double q = d[0] - x;
    if (q >= 0.0) return false;
    for (std::size_t i = 1; i < n; ++i) {
      q = d[i] - x - e2[i - 1] / (q == 0.0 ? -tiny : q);
      if (q >= 0.0) return false;
    }
    return true;
  };
  hi += std::abs(hi) * 1e-15 + tiny;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (above_all(mid)) hi = mid; else lo = mid;
  }
  return 0.5 * (lo + hi);
}

void require_hermitian(const ComplexMatrix& h, double tol) {
  const double dev = frobenius_norm(h - adjoint(h));
  if (dev > tol * std::max(1.0, frobenius_norm(h))) {
    throw NuradError(ErrorKind::NotHermitian, "||H - H*|| = " + std::to_string(dev));
  }
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& h, double tol) {
  require_hermitian(h, tol);
  const std::size_t n = h.size();
  auto jr = jacobi(real_part(h), true);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return jr.values[i] > jr.values[j]; });
  EigenSystem es;
  es.values.reserve(n);
  es.vectors.reserve(n);
  for (auto k : order) {
    es.values.push_back(jr.values[k]);
    es.vectors.push_back(UnitVector::normalize(jr.vectors.column(k)));
  }
  return es;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  auto jr = jacobi(real_part(h), false);
  std::sort(jr.values.begin(), jr.values.end(), std::greater<>());
  return jr.values;
}

double hermitian_top_eigenvalue(const ComplexMatrix& h) {
  const std::size_t n = h.size();
  if (n == 0) return 0.0;
  if (n == 1) return h(0, 0).real();
  if (n == 2) {
    const double a = h(0, 0).real(), d = h(1, 1).real();
    const double half = 0.5 * (a - d);
    return 0.5 * (a + d) + std::hypot(half, std::abs(h(0, 1)));
  }
  return tridiagonal_top(h);
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  const double top = hermitian_top_eigenvalue(real_part(adjoint(m) * m));
  return std::sqrt(std::max(0.0, top));
}

// ---------------------------------------------------------------- SVD

SvdSystem svd(const ComplexMatrix& m) {
  const std::size_t n = m.size();
  const auto es = hermitian_eigen(real_part(adjoint(m) * m), 1e-6);

  struct Col {
    double sigma;
    UnitVector v;
    CVector mv;
  };
  std::vector<Col> cols;
  cols.reserve(n);
  for (const auto& v : es.vectors) {
    CVector mv = m * std::span<const Complex>(v);
    const double s = norm2(mv);
    cols.push_back({s, v, std::move(mv)});
  }
  std::stable_sort(cols.begin(), cols.end(),
                   [](const Col& a, const Col& b) { return a.sigma > b.sigma; });

  const double top = cols.empty() ? 0.0 : cols.front().sigma;
  const double cutoff = 1e-12 * std::max(top, 1e-300);

  std::vector<UnitVector> left;
  SvdSystem out;
  out.sigma.reserve(n);
  std::vector<CVector> vcols;
  for (const auto& c : cols) {
    out.sigma.push_back(c.sigma);
    vcols.push_back(c.v.components());
    if (c.sigma > cutoff) {
      CVector u = c.mv;
      for (auto& x : u) x /= c.sigma;
      // Re-orthogonalize against previously accepted left vectors.
      for (int pass = 0; pass < 2; ++pass)
        for (const auto& w : left) {
          const Complex proj = inner(u, w);
          for (std::size_t i = 0; i < n; ++i) u[i] -= proj * w[i];
        }
      left.push_back(UnitVector::normalize(std::move(u)));
    }
  }
  const auto full = orthonormal_complete(left, n);
  std::vector<CVector> ucols;
  for (const auto& u : full) ucols.push_back(u.components());
  out.U = ComplexMatrix::from_columns(ucols);
  out.V = ComplexMatrix::from_columns(vcols);
  return out;
}

// ---------------------------------------------------------------- normal eigen

NormalEigen normal_eigen(const ComplexMatrix& m, double tol) {
  const std::size_t n = m.size();
  const double fro = frobenius_norm(m);
  const ComplexMatrix mm = m * adjoint(m), mtm = adjoint(m) * m;
  if (frobenius_norm(mm - mtm) > tol * std::max(1.0, fro * fro)) {
    throw NuradError(ErrorKind::NotNormal, "matrix is not normal");
  }
  const ComplexMatrix re = real_part(m), im = imag_part(m);
  const auto es = hermitian_eigen(re, 1e-6);
  std::vector<CVector> q;
  for (const auto& v : es.vectors) q.push_back(v.components());

  const double cluster_tol = 1e-8 * std::max(1.0, fro);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    while (end < n && es.values[end - 1] - es.values[end] <= cluster_tol) ++end;
    const std::size_t m_sz = end - start;
    if (m_sz > 1) {
      ComplexMatrix g(m_sz);
      for (std::size_t i = 0; i < m_sz; ++i) {
        const CVector imv = im * std::span<const Complex>(q[start + i]);
        for (std::size_t j = 0; j < m_sz; ++j) g(j, i) = inner(imv, q[start + j]);
      }
      const auto gs = hermitian_eigen(real_part(g), 1e-6);
      std::vector<CVector> rotated;
      for (const auto& gv : gs.vectors) {
        CVector w(n);
        for (std::size_t i = 0; i < m_sz; ++i)
          for (std::size_t r = 0; r < n; ++r) w[r] += gv[i] * q[start + i][r];
        rotated.push_back(UnitVector::normalize(std::move(w)).components());
      }
      for (std::size_t i = 0; i < m_sz; ++i) q[start + i] = rotated[i];
    }
    start = end;
  }

  NormalEigen out;
  for (const auto& v : q) out.values.push_back(quad_form(m, v));
  out.Q = ComplexMatrix::from_columns(q);
  return out;
}

// ---------------------------------------------------------------- predicates

namespace {
double scale_of(const ComplexMatrix& m) { return std::max(1.0, frobenius_norm(m)); }
}  // namespace

bool is_self_adjoint(const ComplexMatrix& m, double tol) {
  return frobenius_norm(m - adjoint(m)) <= tol * scale_of(m);
}

bool is_normal(const ComplexMatrix& m, double tol) {
  const ComplexMatrix a = adjoint(m);
  const double s = scale_of(m);
  return frobenius_norm(m * a - a * m) <= tol * s * s;
}

bool is_isometry(const ComplexMatrix& m, double tol) {
  const auto n = m.size();
  return frobenius_norm(adjoint(m) * m - ComplexMatrix::identity(n)) <= tol * scale_of(m);
}

bool is_co_isometry(const ComplexMatrix& m, double tol) {
  const auto n = m.size();
  return frobenius_norm(m * adjoint(m) - ComplexMatrix::identity(n)) <= tol * scale_of(m);
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return is_isometry(m, tol) && is_co_isometry(m, tol);
}

bool is_positive(const ComplexMatrix& m, double tol) {
  if (!is_self_adjoint(m, tol)) return false;
  const auto vals = hermitian_eigenvalues(m);
  return vals.empty() || vals.back() >= -tol * scale_of(m);
}

// ---------------------------------------------------------------- 2x2 Schur

Schur2x2 schur_2x2(const ComplexMatrix& m) {
  if (m.size() != 2) throw NuradError(ErrorKind::DimensionMismatch, "schur_2x2 needs n = 2");
  const double scale = std::max(1.0, frobenius_norm(m));
  if (std::abs(m(1, 0)) <= 1e-14 * scale) {
    ComplexMatrix up = m;
    up(1, 0) = 0.0;
    return {ComplexMatrix::identity(2), up};
  }
  const Complex half_diff = 0.5 * (m(0, 0) - m(1, 1));
  const Complex root = std::sqrt(half_diff * half_diff + m(0, 1) * m(1, 0));
  const Complex lambda = 0.5 * (m(0, 0) + m(1, 1)) + root;
  CVector a{m(0, 1), lambda - m(0, 0)};
  CVector b{lambda - m(1, 1), m(1, 0)};
  const CVector& v = norm2(a) >= norm2(b) ? a : b;
  const auto u = UnitVector::normalize(v);
  ComplexMatrix U{{u[0], -std::conj(u[1])}, {u[1], std::conj(u[0])}};
  ComplexMatrix up = adjoint(U) * m * U;
  up(1, 0) = 0.0;
  return {std::move(U), std::move(up)};
}

ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& t) {
  if (u.size() != t.size()) throw NuradError(ErrorKind::DimensionMismatch, "conjugate");
  if (!is_unitary(u, 1e-10)) throw NuradError(ErrorKind::NotUnitary, "conjugate needs a unitary");
  return adjoint(u) * t * u;
}

// ---------------------------------------------------------------- completion

std::vector<UnitVector> orthonormal_complete(std::span<const UnitVector> vs, std::size_t n) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != n) throw NuradError(ErrorKind::DimensionMismatch, "vector length");
    if (std::abs(norm2(vs[i]) - 1.0) > 1e-10)
      throw NuradError(ErrorKind::DependentInput, "input vector is not unit length");
    for (std::size_t j = 0; j < i; ++j)
      if (std::abs(inner(vs[i], vs[j])) > 1e-10)
        throw NuradError(ErrorKind::DependentInput, "input vectors are not orthogonal");
  }
  if (vs.size() > n) throw NuradError(ErrorKind::DependentInput, "more vectors than dimensions");

  std::vector<UnitVector> out(vs.begin(), vs.end());
  auto residual = [&](CVector x) {
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& w : out) {
        const Complex proj = inner(x, w);
        for (std::size_t i = 0; i < n; ++i) x[i] -= proj * w[i];
      }
    return x;
  };
  while (out.size() < n) {
    double best = -1.0;
    CVector best_vec;
    for (std::size_t k = 0; k < n; ++k) {
      CVector e(n);
      e[k] = 1.0;
      CVector r = residual(std::move(e));
      const double nr = norm2(r);
      if (nr > best + 1e-12) {
        best = nr;
        best_vec = std::move(r);
      }
    }
    out.push_back(UnitVector::normalize(residual(std::move(best_vec))));
  }
  return out;
}

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t na = a.size(), nb = b.size();
  ComplexMatrix m(na + nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) m(na + i, na + j) = b(i, j);
  return m;
}

}  // namespace nurad
