#pragma once

// Seeded random generators for states and operators. No global state: every
// sampler takes the generator explicitly.

#include <cstdint>
#include <random>

#include "bineg/density_matrix.hpp"
#include "bineg/measures.hpp"
#include "bineg/qmat.hpp"

namespace bineg {

using Rng = std::mt19937_64;

/// Deterministic sub-stream seed for `index` under `parent` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index);

/// Standard complex Gaussian (real and imaginary parts N(0, 1/2)).
Complex complex_gaussian(Rng& rng);

Mat2 ginibre_mat2(Rng& rng);
Mat4 ginibre_mat4(Rng& rng);

/// ρ = GG†/Tr[GG†] with G a 4×4 complex Ginibre matrix.
DensityMatrix4 random_state_ginibre(Rng& rng);

/// Haar-random pure two-qubit state.
DensityMatrix4 random_pure_state(Rng& rng);
Vec4 random_unit_vector(Rng& rng);

/// Hermitian matrix (G + G†)/2; not normalized.
Mat4 random_hermitian(Rng& rng);

/// Valid X-state. A third of draws carry only corner coherence, a third only
/// middle-block coherence and a third both, so every branch of the closed
/// forms gets exercised.
XState random_xstate(Rng& rng);

}  // namespace bineg
