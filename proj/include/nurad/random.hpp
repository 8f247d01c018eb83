#pragma once

// Seeded generators for test inputs. Everything here is deterministic per
// seed for a given standard library implementation.

#include <cstdint>
#include <random>

#include "nurad/linalg.hpp"

namespace nurad {

using Rng = std::mt19937_64;

Complex random_gaussian_complex(Rng& rng);
/// Entries i.i.d. standard complex Gaussian.
ComplexMatrix random_gaussian_matrix(std::size_t n, Rng& rng);
/// Gram-Schmidt orthonormalization of a complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
ComplexMatrix random_hermitian(std::size_t n, Rng& rng);
/// Uniform point on the complex unit sphere (normalized complex Gaussian).
UnitVector random_unit_vector(std::size_t n, Rng& rng);
double random_uniform(Rng& rng, double lo, double hi);
/// e^{i phi} with phi uniform in [0, 2 pi).
Complex random_phase(Rng& rng);

}  // namespace nurad
