#pragma once

#include <random>

#include "rigid/matnum.hpp"

namespace rigid::random {

/// Entries standard normal (imaginary parts too for the complex field).
Mat gaussian(Eigen::Index rows, Eigen::Index cols, Field field, std::mt19937_64& rng);
Vec gaussian_vector(Eigen::Index n, Field field, std::mt19937_64& rng);

/// Haar-distributed unitary (orthogonal for the real field) via QR.
Mat unitary(int n, Field field, std::mt19937_64& rng);

/// Skew-hermitian matrix with spectral norm exactly `norm`.
Mat skew_hermitian(int n, double norm, std::mt19937_64& rng);

double uniform(double lo, double hi, std::mt19937_64& rng);

}  // namespace rigid::random
