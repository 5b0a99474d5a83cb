#pragma once

// Two-qubit state families with their known closed-form measure values.

#include <array>

#include "bineg/density_matrix.hpp"
#include "bineg/measures.hpp"

namespace bineg {

/// |ψ⁻⟩ = (|01⟩ − |10⟩)/√2
Vec4 singlet_vector();

// ---------------------------------------------------------------------------
// Werner: (1−p)/4 𝕀 + p |ψ⁻⟩⟨ψ⁻|, entangled for p > 1/3.

struct WernerParams {
  double p = 0.0;
};

DensityMatrix4 werner(double p);
MeasureTriple werner_measures(double p);  // all equal max(0, (3p−1)/2)

// ---------------------------------------------------------------------------
// Bell-diagonal: ¼(𝕀 + Σ cᵢ σᵢ⊗σᵢ).

struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// λ_mn = ¼[1 + (−1)^m c₁ − (−1)^{m+n} c₂ + (−1)^n c₃], indexed [2m + n].
std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& c);

DensityMatrix4 bell_diagonal(const BellDiagonalParams& c);
MeasureTriple bell_diagonal_measures(const BellDiagonalParams& c);  // max(0, 2λ_max − 1)

// ---------------------------------------------------------------------------
// Maximally entangled mixed states parameterized by concurrence C.

struct MemParams {
  double concurrence = 0.0;
};

/// g(C) = C/2 for C ≥ 2/3, else 1/3.
double mem_g(double concurrence);

DensityMatrix4 mem(double concurrence);
MeasureTriple mem_measures(double concurrence);

// ---------------------------------------------------------------------------
// Generalized MEMs:
//
//     | x+γ/2  0  0  γ/2   |
//     | 0      a  0  0     |
//     | 0      0  b  0     |
//     | γ/2    0  0  y+γ/2 |

struct GMemParams {
  double x = 0.0;
  double y = 0.0;
  double a = 0.0;
  double b = 0.0;
  double gamma = 0.0;
};

DensityMatrix4 gmem(const GMemParams& params);
MeasureTriple gmem_measures(const GMemParams& params);

// ---------------------------------------------------------------------------
// (1−p)/4 𝕀 + p |Ψ⟩⟨Ψ| with |Ψ⟩ = α|00⟩ + β|11⟩. β = √(1 − |α|²) is real;
// α may carry a phase.

struct EwParams {
  double p = 0.0;
  Complex alpha = 0.0;

  Complex beta() const;
};

DensityMatrix4 ew(const EwParams& params);
MeasureTriple ew_measures(const EwParams& params);  // all equal 2 max[0, |pαβ*| − (1−p)/4]

}  // namespace bineg
