#pragma once

#include <random>
#include <vector>

#include "gaprig/lie/lie_model.hpp"

namespace gaprig {

// Random element of the real form of k with small Gaussian-integer entries.
Matrix random_real_k(const LieModel& m, std::mt19937_64& rng, int range = 2);

// Cayley transform (I - X)(I + X)^{-1}; lands in K for X in the real form of k.
Matrix cayley(const Matrix& x);

// Rational elements of K, reproducible from the generator state.
std::vector<Matrix> sample_k(const LieModel& m, int count, std::mt19937_64& rng);

// Ad(k) X = k X k^{-1}
Matrix adjoint_action(const Matrix& k, const Matrix& k_inv, const Matrix& x);

}  // namespace gaprig
