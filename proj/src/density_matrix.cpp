#include "bineg/density_matrix.hpp"

#include <sstream>

namespace bineg {

std::optional<std::string> DensityMatrix4::validation_error(const Mat4& m) {
  std::ostringstream os;
  os.precision(3);
  if (!m.all_finite()) return "matrix has non-finite entries";
  if (const double herr = hermiticity_error(m); !(herr < kHermitianTolerance)) {
    os << "matrix is not Hermitian (max |rho - rho^dagger| = " << herr << ")";
    return os.str();
  }
  if (const double terr = std::abs(m.trace() - Complex(1.0)); !(terr <= kTraceTolerance)) {
    os << "trace is " << m.trace().real() << ", expected 1";
    return os.str();
  }
  const double lmin = hermitian_eig(m.hermitian_part()).eigenvalues[0];
  if (lmin < -kPsdTolerance) {
    os << "matrix is not positive semidefinite (smallest eigenvalue " << lmin << ")";
    return os.str();
  }
  return std::nullopt;
}

DensityMatrix4 DensityMatrix4::from_matrix(const Mat4& m) {
  if (auto err = validation_error(m)) throw ValidationError("invalid density matrix: " + *err);
  return DensityMatrix4(m.hermitian_part());
}

DensityMatrix4 DensityMatrix4::maximally_mixed() { return DensityMatrix4(0.25 * Mat4::identity()); }

DensityMatrix4 DensityMatrix4::pure(const Vec4& psi) {
  const double norm = std::sqrt(inner(psi, psi).real());
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("pure state vector has zero norm");
  Vec4 v = psi;
  for (auto& x : v) x /= norm;
  return DensityMatrix4(projector(v).hermitian_part());
}

double DensityMatrix4::purity() const { return (m_ * m_).trace().real(); }

}  // namespace bineg
