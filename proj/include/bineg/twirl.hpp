#pragma once

// U⊗U twirling: Haar Monte Carlo, the exact Werner projection, and the
// binegativity monotonicity experiment built on them.

#include <cstddef>
#include <string>

#include "bineg/density_matrix.hpp"
#include "bineg/sampling.hpp"

namespace bineg {

/// Haar-random 2×2 unitary (Gram–Schmidt on a complex Ginibre matrix, R with
/// positive real diagonal).
Mat2 haar_unitary_2(Rng& rng);

/// Average of (U⊗U)ρ(U⊗U)† over `samples` Haar draws.
///
/// Samples are split into fixed-size batches, each seeded from a parent seed
/// drawn once from `rng`, so the result depends only on `rng` and `samples`
/// regardless of thread count. Throws ValidationError when samples == 0.
DensityMatrix4 mc_twirl(const DensityMatrix4& rho, std::size_t samples, Rng& rng);

/// (1−p)/4 𝕀 + p|ψ⁻⟩⟨ψ⁻| for p ∈ [−1/3, 1].
DensityMatrix4 werner_form(double p);

struct AnalyticTwirl {
  DensityMatrix4 state;
  double werner_p = 0.0;
  double singlet_fidelity = 0.0;
};

/// Exact twirl: the Werner state with the same singlet fidelity F, p = (4F − 1)/3.
AnalyticTwirl analytic_twirl(const DensityMatrix4& rho);

struct TwirlResult {
  double input_binegativity = 0.0;
  double output_binegativity = 0.0;
  double werner_p = 0.0;
  std::size_t mc_samples = 0;
  double mc_deviation = 0.0;  // max entry distance, MC average vs analytic
};

/// Twirls one state; runs Monte Carlo only when mc_samples > 0.
TwirlResult twirl_state(const DensityMatrix4& rho, std::size_t mc_samples, Rng& rng);

struct MonotonicityReport {
  std::string ensemble = "ginibre (rho = GG^dagger / Tr, rejection on N > 1e-6)";
  std::size_t n_states = 0;
  std::size_t samples_per_state = 0;
  double tolerance = 1e-9;

  std::size_t violations = 0;  // N₂(twirl(ρ)) > N₂(ρ) + tolerance
  double worst_margin = 0.0;   // max over states of N₂(out) − N₂(in)
  std::size_t negativity_violations = 0;
  std::size_t concurrence_violations = 0;

  // Monte-Carlo cross-check (zero when samples_per_state == 0).
  double mc_max_deviation = 0.0;
  double mc_mean_deviation = 0.0;
  std::size_t mc_within_bound = 0;  // states with deviation < 5/√M
};

inline constexpr double kEntangledSamplingThreshold = 1e-6;

/// Draws an entangled Ginibre state (N > 1e-6) by rejection.
DensityMatrix4 random_entangled_state(Rng& rng);

/// Compares N₂ (and N, C) before and after the analytic twirl on `n_states`
/// random entangled states; optionally cross-checks each twirl by Monte Carlo.
/// State k uses the sub-stream derive_seed(parent, k) with parent drawn from `rng`.
MonotonicityReport monotonicity_experiment(std::size_t n_states, std::size_t samples_per_state, Rng& rng);

}  // namespace bineg
