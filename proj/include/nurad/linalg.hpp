#pragma once

// Small dense complex linear algebra: value-semantic matrices and vectors,
// a cyclic Jacobi Hermitian eigensolver, an SVD built on top of it, and the
// structural predicates (self-adjoint, normal, unitary, ...) used everywhere
// else in the library.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace nurad {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr Complex kI{0.0, 1.0};

/// Square n x n complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n);
  ComplexMatrix(std::size_t n, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t n) { return ComplexMatrix(n); }
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix diagonal(std::initializer_list<Complex> d);
  /// Matrix whose columns are the given vectors (each of length n = count).
  static ComplexMatrix from_columns(std::span<const CVector> columns);

  std::size_t size() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  std::span<const Complex> entries() const noexcept { return a_; }

  CVector column(std::size_t c) const;
  CVector row(std::size_t r) const;

  /// Square sub-block starting at (r0, c0) of size m.
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t m) const;
  /// Rectangular sub-block norm helper: Frobenius norm of rows [r0,r1) x cols [c0,c1).
  double block_frobenius(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  bool operator==(const ComplexMatrix& o) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
CVector operator*(const ComplexMatrix& a, std::span<const Complex> x);

/// Euclidean unit vector; the constructor normalizes.
class UnitVector {
 public:
  UnitVector() = default;
  /// Normalizes `v`; throws DependentInput if v is (numerically) zero.
  static UnitVector normalize(CVector v);
  static UnitVector basis(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return c_.size(); }
  const Complex& operator[](std::size_t i) const { return c_[i]; }
  const CVector& components() const noexcept { return c_; }
  operator std::span<const Complex>() const noexcept { return c_; }

 private:
  explicit UnitVector(CVector v) : c_(std::move(v)) {}
  CVector c_;
};

struct EigenSystem {
  std::vector<double> values;        // descending
  std::vector<UnitVector> vectors;   // vectors[i] belongs to values[i]
};

struct SvdSystem {
  ComplexMatrix U;
  std::vector<double> sigma;         // descending, >= 0
  ComplexMatrix V;
};

// Vector helpers. inner(u, v) = sum u_i conj(v_i), linear in the first slot.
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm2(std::span<const Complex> v);
/// <T x, x>
Complex quad_form(const ComplexMatrix& T, std::span<const Complex> x);

ComplexMatrix adjoint(const ComplexMatrix& m);
/// (M + M*) / 2
ComplexMatrix real_part(const ComplexMatrix& m);
/// (M - M*) / (2i)
ComplexMatrix imag_part(const ComplexMatrix& m);
/// cos(t) Re(M) - sin(t) Im(M) = Re(e^{it} M)
ComplexMatrix rotated_real_part(const ComplexMatrix& re, const ComplexMatrix& im, double t);

double frobenius_norm(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);

/// Cyclic Jacobi. Throws NotHermitian when ||H - H*||_F > tol * max(1, ||H||_F).
EigenSystem hermitian_eigen(const ComplexMatrix& h, double tol = 1e-9);
/// Eigenvalues only (descending); same algorithm without vector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);
/// Largest eigenvalue of a Hermitian matrix (hot path of the radius sweep).
double hermitian_top_eigenvalue(const ComplexMatrix& h);

SvdSystem svd(const ComplexMatrix& m);

/// Spectral decomposition of a normal matrix: m = Q diag(values) Q*.
struct NormalEigen {
  std::vector<Complex> values;
  ComplexMatrix Q;
};
/// Two-stage Jacobi (Re part, then Im part inside degenerate clusters).
/// Throws NotNormal when ||mm* - m*m|| exceeds tol at scale.
NormalEigen normal_eigen(const ComplexMatrix& m, double tol = 1e-9);

inline constexpr double kDefaultPredicateTol = 1e-9;

bool is_self_adjoint(const ComplexMatrix& m, double tol = kDefaultPredicateTol);
bool is_normal(const ComplexMatrix& m, double tol = kDefaultPredicateTol);
bool is_unitary(const ComplexMatrix& m, double tol = kDefaultPredicateTol);
bool is_isometry(const ComplexMatrix& m, double tol = kDefaultPredicateTol);
bool is_co_isometry(const ComplexMatrix& m, double tol = kDefaultPredicateTol);
bool is_positive(const ComplexMatrix& m, double tol = kDefaultPredicateTol);

struct Schur2x2 {
  ComplexMatrix U;      // unitary
  ComplexMatrix upper;  // U* M U, upper triangular
};
Schur2x2 schur_2x2(const ComplexMatrix& m);

/// Returns U* T U. Throws NotUnitary when U is not unitary within 1e-10.
ComplexMatrix conjugate(const ComplexMatrix& u, const ComplexMatrix& t);

/// Extends an orthonormal family to a basis of C^n.
std::vector<UnitVector> orthonormal_complete(std::span<const UnitVector> vs, std::size_t n);

/// Block-diagonal assembly diag(a, b).
ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace nurad
