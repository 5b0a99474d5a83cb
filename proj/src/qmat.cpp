#include "bineg/qmat.hpp"

#include <sstream>

#include "jacobi.hpp"

namespace bineg {

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 m;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return m;
}

Mat4 outer(const Vec4& u, const Vec4& v) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = u[i] * std::conj(v[j]);
  return m;
}

Vec4 apply(const Mat4& a, const Vec4& v) {
  Vec4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out[i] += a(i, j) * v[j];
  return out;
}

Complex inner(const Vec4& u, const Vec4& v) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < 4; ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Complex expectation(const Mat4& a, const Vec4& v) { return inner(v, apply(a, v)); }

Mat4 partial_transpose(const Mat4& rho, Subsystem subsystem) {
  Mat4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) {
          if (subsystem == Subsystem::B) {
            out(2 * i + k, 2 * j + l) = rho(2 * i + l, 2 * j + k);
          } else {
            out(2 * i + k, 2 * j + l) = rho(2 * j + k, 2 * i + l);
          }
        }
  return out;
}

Vec4 SpectralDecomposition::eigenvector(std::size_t k) const {
  Vec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = eigenvectors(i, k);
  return v;
}

Mat4 SpectralDecomposition::reconstruct() const {
  Mat4 lambda;
  for (std::size_t k = 0; k < 4; ++k) lambda(k, k) = eigenvalues[k];
  return eigenvectors * lambda * eigenvectors.adjoint();
}

namespace {

constexpr double kHermitianInputTolerance = 1e-10;
constexpr double kPhaseTieTolerance = 1e-12;

void fix_phase(Mat4& vectors, std::size_t col) {
  double best = 0.0;
  for (std::size_t i = 0; i < 4; ++i) best = std::max(best, std::abs(vectors(i, col)));
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(vectors(i, col)) >= best - kPhaseTieTolerance) {
      pivot = i;
      break;
    }
  }
  const Complex z = vectors(pivot, col);
  if (std::abs(z) == 0.0) return;
  const Complex rot = std::conj(z) / std::abs(z);
  for (std::size_t i = 0; i < 4; ++i) vectors(i, col) *= rot;
  vectors(pivot, col) = vectors(pivot, col).real();
}

}  // namespace

SpectralDecomposition hermitian_eig(const Mat4& a, const EigenOptions& options) {
  const double herr = hermiticity_error(a);
  if (!(herr < kHermitianInputTolerance)) {
    std::ostringstream os;
    os << "hermitian_eig: input is not Hermitian (max |A - A^dagger| = " << herr << ")";
    throw ValidationError(os.str());
  }
  auto jr = detail::jacobi_eigen(a.hermitian_part(), options);
  SpectralDecomposition out;
  out.eigenvalues = jr.values;
  out.eigenvectors = jr.vectors;
  for (std::size_t k = 0; k < 4; ++k) fix_phase(out.eigenvectors, k);
  return out;
}

NegativePart negative_part(const SpectralDecomposition& spectrum) {
  NegativePart out;
  for (std::size_t k = 0; k < 4; ++k) {
    const double lambda = spectrum.eigenvalues[k];
    if (lambda < -kNegativeEigenvalueThreshold) {
      out.op += std::abs(lambda) * projector(spectrum.eigenvector(k));
      out.trace += std::abs(lambda);
      ++out.rank;
    }
  }
  out.op = out.op.hermitian_part();
  return out;
}

NegativePart negative_part(const Mat4& a) { return negative_part(hermitian_eig(a)); }

double trace_norm(const Mat4& a) {
  const auto spectrum = hermitian_eig(a);
  double s = 0.0;
  for (double l : spectrum.eigenvalues) s += std::abs(l);
  return s;
}

}  // namespace bineg
