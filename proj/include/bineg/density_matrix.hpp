#pragma once

#include <optional>
#include <string>

#include "bineg/qmat.hpp"

namespace bineg {

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
///
/// Construction goes through from_matrix(), which rejects anything outside
/// the tolerances below and stores the exact Hermitian part of the input.
class DensityMatrix4 {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPsdTolerance = 1e-10;

  /// Throws ValidationError with a diagnostic when `m` is not a density matrix.
  static DensityMatrix4 from_matrix(const Mat4& m);

  /// Empty when `m` is a valid density matrix, otherwise the reason it is not.
  static std::optional<std::string> validation_error(const Mat4& m);

  static DensityMatrix4 maximally_mixed();
  static DensityMatrix4 pure(const Vec4& psi);  // normalizes psi

  const Mat4& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  double purity() const;  // Tr[ρ²]

 private:
  explicit DensityMatrix4(const Mat4& m) : m_(m) {}
  Mat4 m_;
};

}  // namespace bineg
