#pragma once

// Concurrence, negativity and binegativity of two-qubit states.

#include <stdexcept>

#include "bineg/density_matrix.hpp"
#include "bineg/qmat.hpp"

namespace bineg {

/// ρ is PPT: ρ^Γ has no eigenvalue below the negative threshold.
class NoNegativeEigenvalue : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// ρ^Γ of a valid two-qubit state has more than one negative eigenvalue.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Negativities below this are treated as exactly separable.
inline constexpr double kSeparableNegativity = 1e-10;

struct MeasureTriple {
  double concurrence = 0.0;
  double negativity = 0.0;
  double binegativity = 0.0;
};

/// Largest componentwise |difference|.
double max_abs_diff(const MeasureTriple& x, const MeasureTriple& y);

/// The pure state built from the eigenvector of ρ^Γ's single negative eigenvalue.
struct NegativeEigenstate {
  DensityMatrix4 state;
  Vec4 vector{};
  double negative_eigenvalue_magnitude = 0.0;
};

/// N(ρ) = 2 Tr[(ρ^Γ)_−] = ‖ρ^Γ‖₁ − 1.
///
/// Both forms are evaluated; ConsistencyError is thrown if they differ by
/// more than 1e-10. The returned value is the negative-part form.
double negativity(const DensityMatrix4& rho);

/// Wootters concurrence max(0, λ₁ − λ₂ − λ₃ − λ₄).
///
/// The λᵢ are the singular values of τ = Wᵀ(σ_y⊗σ_y)W for ρ = WW†, read off
/// the spectrum of the Hermitian dilation [[0, τ], [τ†, 0]]. This keeps full
/// precision on rank-deficient states, where square roots of the eigenvalues
/// of ρρ̃ lose half the digits.
double concurrence(const DensityMatrix4& rho);

/// N₂(ρ) = Tr[ρ^{Γ−}] + 2 Tr[((ρ^{Γ−})^Γ)_−], evaluated with two eigendecompositions.
double binegativity_spectral(const DensityMatrix4& rho);

/// N₂(ρ) = ½ N(ρ) [1 + N(ρ_ψ)] with ρ_ψ from negative_eigvec_state().
/// Returns 0 without touching ρ_ψ when N(ρ) < kSeparableNegativity.
double binegativity_closed(const DensityMatrix4& rho);

/// Throws NoNegativeEigenvalue when N(ρ) < kSeparableNegativity and
/// InvariantViolation when ρ^Γ has two or more negative eigenvalues.
NegativeEigenstate negative_eigvec_state(const DensityMatrix4& rho);

/// Number of eigenvalues of ρ^Γ below the negative threshold.
int negative_eigenvalue_count(const DensityMatrix4& rho);

/// (C, N, N₂) with N₂ from the spectral route.
MeasureTriple measure_triple(const DensityMatrix4& rho);

/// Two-qubit X-state
///
///     | a  0  0  e |
///     | 0  b  c  0 |
///     | 0  c* b  0 |
///     | e* 0  0  d |
struct XState {
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
  Complex c = 0.0;
  Complex e = 0.0;

  Mat4 matrix() const;
};

enum class XStateBranch {
  Separable,
  InnerCoherence,  // a + d < θ, driven by the middle-block coherence c
  OuterCoherence,  // b < |e|, driven by the corner coherence e
};

XStateBranch xstate_branch(const XState& x);

/// Closed-form (C, N, N₂) of an X-state, with θ = √((a−d)² + 4|c|²):
///   C  = 2 max[0, |c| − √(ad), |e| − b]
///   N  = θ − (a+d)          if a+d < θ,   2(|e| − b)  if b < |e|
///   N₂ = (N/2)(1 + |2c/θ|)  if a+d < θ,   N           if b < |e|
/// Throws ValidationError when the assembled matrix is not a density matrix.
MeasureTriple xstate_measures(const XState& x);

}  // namespace bineg
