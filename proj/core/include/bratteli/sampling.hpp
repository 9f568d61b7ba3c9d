#ifndef BRATTELI_SAMPLING_HPP
#define BRATTELI_SAMPLING_HPP

#include <random>

#include "bratteli/cylinder_algebra.hpp"

namespace bratteli {

/// Small random Gaussian rational: numerators in [-bound, bound], positive
/// denominators up to `bound`, imaginary part zero about a third of the time.
GaussianRational random_scalar(std::mt19937_64& rng, int bound = 5);

/// Random element of B_n with up to `terms` terms (possibly zero).
AlgebraElement random_element(const MatrixRealization& level, std::mt19937_64& rng,
                              std::size_t terms = 6);

}  // namespace bratteli

#endif  // BRATTELI_SAMPLING_HPP
