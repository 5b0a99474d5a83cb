#include "bineg/measures.hpp"

#include <algorithm>
#include <sstream>

#include "jacobi.hpp"

namespace bineg {

namespace {

constexpr double kNegativityFormsTolerance = 1e-10;

double negativity_from_spectrum(const SpectralDecomposition& spectrum) {
  const double via_negative_part = 2.0 * negative_part(spectrum).trace;
  double norm1 = 0.0;
  for (double l : spectrum.eigenvalues) norm1 += std::abs(l);
  const double via_trace_norm = norm1 - 1.0;
  if (std::abs(via_negative_part - via_trace_norm) > kNegativityFormsTolerance) {
    std::ostringstream os;
    os << "negativity: 2 Tr[rho^Gamma_-] = " << via_negative_part
       << " disagrees with ||rho^Gamma||_1 - 1 = " << via_trace_norm;
    throw ConsistencyError(os.str());
  }
  return via_negative_part;
}

SpectralDecomposition pt_spectrum(const DensityMatrix4& rho) {
  return hermitian_eig(partial_transpose(rho.matrix()));
}

}  // namespace

double max_abs_diff(const MeasureTriple& x, const MeasureTriple& y) {
  return std::max({std::abs(x.concurrence - y.concurrence), std::abs(x.negativity - y.negativity),
                   std::abs(x.binegativity - y.binegativity)});
}

double negativity(const DensityMatrix4& rho) { return negativity_from_spectrum(pt_spectrum(rho)); }

double concurrence(const DensityMatrix4& rho) {
  const auto spectrum = hermitian_eig(rho.matrix());
  Mat4 w;
  for (std::size_t k = 0; k < 4; ++k) {
    const double s = std::sqrt(std::max(spectrum.eigenvalues[k], 0.0));
    for (std::size_t i = 0; i < 4; ++i) w(i, k) = s * spectrum.eigenvectors(i, k);
  }
  const Mat4 yy = kron(pauli::y(), pauli::y());
  const Mat4 tau = w.transpose() * yy * w;

  SquareMatrix<8> dilation;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      dilation(i, 4 + j) = tau(i, j);
      dilation(4 + j, i) = std::conj(tau(i, j));
    }
  const auto jr = detail::jacobi_eigen(dilation, EigenOptions{});
  // The four largest eigenvalues of the dilation are the singular values of τ.
  const double s0 = std::abs(jr.values[7]);
  const double s1 = std::abs(jr.values[6]);
  const double s2 = std::abs(jr.values[5]);
  const double s3 = std::abs(jr.values[4]);
  return std::max(0.0, s0 - s1 - s2 - s3);
}

double binegativity_spectral(const DensityMatrix4& rho) {
  const NegativePart first = negative_part(pt_spectrum(rho));
  if (first.rank == 0) return 0.0;
  const NegativePart second = negative_part(partial_transpose(first.op));
  return first.trace + 2.0 * second.trace;
}

NegativeEigenstate negative_eigvec_state(const DensityMatrix4& rho) {
  const auto spectrum = pt_spectrum(rho);
  const double n = negativity_from_spectrum(spectrum);
  if (n < kSeparableNegativity) {
    std::ostringstream os;
    os << "state is PPT (negativity " << n << "); no negative eigenvector of rho^Gamma";
    throw NoNegativeEigenvalue(os.str());
  }
  int count = 0;
  for (double l : spectrum.eigenvalues)
    if (l < -kNegativeEigenvalueThreshold) ++count;
  if (count != 1) {
    std::ostringstream os;
    os << "rho^Gamma has " << count << " negative eigenvalues; a two-qubit state has at most one";
    throw InvariantViolation(os.str());
  }
  const Vec4 v = spectrum.eigenvector(0);
  return NegativeEigenstate{DensityMatrix4::pure(v), v, std::abs(spectrum.eigenvalues[0])};
}

double binegativity_closed(const DensityMatrix4& rho) {
  const double n = negativity(rho);
  if (n < kSeparableNegativity) return 0.0;
  const auto psi = negative_eigvec_state(rho);
  return 0.5 * n * (1.0 + negativity(psi.state));
}

int negative_eigenvalue_count(const DensityMatrix4& rho) { return negative_part(pt_spectrum(rho)).rank; }

MeasureTriple measure_triple(const DensityMatrix4& rho) {
  return MeasureTriple{concurrence(rho), negativity(rho), binegativity_spectral(rho)};
}

Mat4 XState::matrix() const {
  Mat4 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = b;
  m(3, 3) = d;
  m(0, 3) = e;
  m(3, 0) = std::conj(e);
  m(1, 2) = c;
  m(2, 1) = std::conj(c);
  return m;
}

XStateBranch xstate_branch(const XState& x) {
  const double theta = std::hypot(x.a - x.d, 2.0 * std::abs(x.c));
  if (x.a + x.d < theta) return XStateBranch::InnerCoherence;
  if (x.b < std::abs(x.e)) return XStateBranch::OuterCoherence;
  return XStateBranch::Separable;
}

MeasureTriple xstate_measures(const XState& x) {
  if (auto err = DensityMatrix4::validation_error(x.matrix())) {
    throw ValidationError("xstate_measures: " + *err);
  }
  const double abs_c = std::abs(x.c);
  const double abs_e = std::abs(x.e);
  const double theta = std::hypot(x.a - x.d, 2.0 * abs_c);

  MeasureTriple out;
  out.concurrence = 2.0 * std::max({0.0, abs_c - std::sqrt(x.a * x.d), abs_e - x.b});
  switch (xstate_branch(x)) {
    case XStateBranch::InnerCoherence:
      out.negativity = theta - (x.a + x.d);
      out.binegativity = 0.5 * out.negativity * (1.0 + 2.0 * abs_c / theta);
      break;
    case XStateBranch::OuterCoherence:
      out.negativity = 2.0 * (abs_e - x.b);
      out.binegativity = out.negativity;
      break;
    case XStateBranch::Separable:
      break;
  }
  return out;
}

}  // namespace bineg
