#pragma once

// Amplitude-damping, phase-damping and depolarizing noise on two qubits:
// Kraus application (the reference) and the closed-form evolved states and
// measures of the (1−p)/4 𝕀 + p|Ψ⟩⟨Ψ| family.

#include <string>
#include <string_view>
#include <vector>

#include "bineg/density_matrix.hpp"
#include "bineg/measures.hpp"
#include "bineg/states.hpp"

namespace bineg {

enum class ChannelKind { AmplitudeDamping, PhaseDamping, Depolarizing };

enum class Sidedness {
  OneSidedA,  // K_i ⊗ 𝕀
  OneSidedB,  // 𝕀 ⊗ K_i
  BothSided,  // K_i ⊗ K_j
};

struct ChannelConfig {
  ChannelKind kind = ChannelKind::AmplitudeDamping;
  Sidedness sidedness = Sidedness::OneSidedA;
  double eta = 0.0;
};

std::string_view to_string(ChannelKind kind);
std::string_view to_string(Sidedness sidedness);

/// Parses "ad" / "pd" / "dp" (case-insensitive). Throws ValidationError.
ChannelKind parse_channel_kind(std::string_view text);
/// Parses "one" / "a" / "b" / "both". Throws ValidationError.
Sidedness parse_sidedness(std::string_view text);

/// Single-qubit channel in operator-sum form.
struct KrausSet {
  ChannelKind kind = ChannelKind::AmplitudeDamping;
  double eta = 0.0;
  std::vector<Mat2> operators;

  /// max |Σ K†K − 𝕀|
  double completeness_error() const;
  Mat2 apply(const Mat2& qubit_state) const;
};

///   AD: K₀ = diag(1, √(1−η)), K₁ = √η |0⟩⟨1|
///   PD: √(1−η) 𝕀, diag(√η, 0), diag(0, √η)
///   DP: √(1−η) 𝕀, √(η/3) σ_x, √(η/3) σ_y, √(η/3) σ_z
/// Throws ValidationError unless η ∈ [0, 1].
KrausSet kraus(ChannelKind kind, double eta);

/// Σ (K_i⊗M_j) ρ (K_i⊗M_j)†.
DensityMatrix4 apply(const DensityMatrix4& rho, const ChannelConfig& config);

/// Which set of closed-form expressions to evaluate.
///
/// Corrected expressions reproduce Kraus application exactly. Literal ones
/// are the originally published expressions, misprints included, kept for
/// discrepancy studies.
enum class FormVariant { Corrected, Literal };

struct NamedScalar {
  std::string name;
  Complex value;
};

struct ClosedForm {
  Mat4 state;  // not necessarily a valid density matrix for the literal variant
  MeasureTriple measures;
  std::vector<NamedScalar> scalars;  // intermediate symbols, for debug output
};

/// Closed-form evolved state and (C, N, N₂) for the EW family under `config`.
/// Only OneSidedA and BothSided have closed forms; OneSidedB throws ValidationError.
ClosedForm closed_form(const ChannelConfig& config, const EwParams& params,
                       FormVariant variant = FormVariant::Corrected);

Mat4 closed_form_state(const ChannelConfig& config, const EwParams& params,
                       FormVariant variant = FormVariant::Corrected);

MeasureTriple closed_form_measures(const ChannelConfig& config, const EwParams& params,
                                   FormVariant variant = FormVariant::Corrected);

/// Closed form side by side with the Kraus reference and its spectral measures.
struct ClosedFormReport {
  FormVariant variant = FormVariant::Corrected;
  Mat4 state;
  MeasureTriple measures;
  DensityMatrix4 oracle_state;
  MeasureTriple oracle_measures;
  double max_entry_deviation = 0.0;
  double measure_deviation = 0.0;
  std::vector<NamedScalar> scalars;
};

ClosedFormReport closed_form_report(const ChannelConfig& config, const EwParams& params,
                                    FormVariant variant = FormVariant::Corrected);

/// Where |κ| ≤ δ for the two-sided depolarized EW state, over a parameter grid.
struct KappaScan {
  std::size_t cells = 0;
  std::size_t violations = 0;  // cells with |κ| ≤ δ
  double worst_margin = 0.0;   // min over cells of |κ| − δ
  // Bounding box of the violating cells (meaningless when violations == 0).
  double p_min = 0.0, p_max = 0.0, eta_min = 0.0, eta_max = 0.0;
};

KappaScan scan_dp_kappa(const std::vector<double>& p_values, const std::vector<double>& eta_values,
                        const std::vector<Complex>& alphas, FormVariant variant = FormVariant::Corrected);

/// n evenly spaced points over [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t n);

}  // namespace bineg
