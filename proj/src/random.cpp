#include "nurad/random.hpp"

#include <numbers>

namespace nurad {

Complex random_gaussian_complex(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

ComplexMatrix random_gaussian_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_gaussian_complex(rng);
  return m;
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_gaussian_matrix(n, rng);
  std::vector<CVector> cols;
  for (std::size_t c = 0; c < n; ++c) {
    CVector v = g.column(c);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& w : cols) {
        const Complex p = inner(v, w);
        for (std::size_t i = 0; i < n; ++i) v[i] -= p * w[i];
      }
    cols.push_back(UnitVector::normalize(std::move(v)).components());
  }
  return ComplexMatrix::from_columns(cols);
}

ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  return real_part(random_gaussian_matrix(n, rng));
}

UnitVector random_unit_vector(std::size_t n, Rng& rng) {
  CVector v(n);
  for (auto& x : v) x = random_gaussian_complex(rng);
  return UnitVector::normalize(std::move(v));
}

double random_uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return u(rng);
}

Complex random_phase(Rng& rng) {
  return std::polar(1.0, random_uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

}  // namespace nurad
