#include "bineg/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace bineg {

namespace {

constexpr double kParamTolerance = 1e-12;

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << what << " must lie in [0, 1], got " << v;
    throw ValidationError(os.str());
  }
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << what << " must be a finite nonnegative number, got " << v;
    throw ValidationError(os.str());
  }
}

}  // namespace

Vec4 singlet_vector() {
  const double h = 1.0 / std::sqrt(2.0);
  return {0.0, h, -h, 0.0};
}

DensityMatrix4 werner(double p) {
  require_unit_interval(p, "werner: p");
  return DensityMatrix4::from_matrix((1.0 - p) / 4.0 * Mat4::identity() + p * projector(singlet_vector()));
}

MeasureTriple werner_measures(double p) {
  require_unit_interval(p, "werner: p");
  const double v = std::max(0.0, (3.0 * p - 1.0) / 2.0);
  return {v, v, v};
}

std::array<double, 4> bell_diagonal_eigenvalues(const BellDiagonalParams& c) {
  std::array<double, 4> out{};
  for (int m = 0; m < 2; ++m)
    for (int n = 0; n < 2; ++n) {
      const double sm = m == 0 ? 1.0 : -1.0;
      const double sn = n == 0 ? 1.0 : -1.0;
      out[2 * m + n] = 0.25 * (1.0 + sm * c.c1 - sm * sn * c.c2 + sn * c.c3);
    }
  return out;
}

DensityMatrix4 bell_diagonal(const BellDiagonalParams& c) {
  for (double ci : {c.c1, c.c2, c.c3}) {
    if (!(ci >= -1.0 && ci <= 1.0)) throw ValidationError("bell_diagonal: coefficients must lie in [-1, 1]");
  }
  for (double l : bell_diagonal_eigenvalues(c)) {
    if (l < -kParamTolerance) {
      std::ostringstream os;
      os << "bell_diagonal: coefficients (" << c.c1 << ", " << c.c2 << ", " << c.c3
         << ") give a negative eigenvalue " << l;
      throw ValidationError(os.str());
    }
  }
  const Mat4 m = Mat4::identity() + c.c1 * kron(pauli::x(), pauli::x()) +
                 c.c2 * kron(pauli::y(), pauli::y()) + c.c3 * kron(pauli::z(), pauli::z());
  return DensityMatrix4::from_matrix(0.25 * m);
}

MeasureTriple bell_diagonal_measures(const BellDiagonalParams& c) {
  const auto l = bell_diagonal_eigenvalues(c);
  const double v = std::max(0.0, 2.0 * *std::max_element(l.begin(), l.end()) - 1.0);
  return {v, v, v};
}

double mem_g(double concurrence) { return concurrence >= 2.0 / 3.0 ? concurrence / 2.0 : 1.0 / 3.0; }

DensityMatrix4 mem(double concurrence) {
  require_unit_interval(concurrence, "mem: C");
  const double g = mem_g(concurrence);
  Mat4 m;
  m(0, 0) = g;
  m(1, 1) = 1.0 - 2.0 * g;
  m(3, 3) = g;
  m(0, 3) = concurrence / 2.0;
  m(3, 0) = concurrence / 2.0;
  return DensityMatrix4::from_matrix(m);
}

MeasureTriple mem_measures(double concurrence) {
  require_unit_interval(concurrence, "mem: C");
  const double c = concurrence;
  MeasureTriple out;
  out.concurrence = c;
  if (c >= 2.0 / 3.0) {
    const double root = std::hypot(1.0 - c, c);
    out.negativity = root - (1.0 - c);
    out.binegativity = out.negativity / 2.0 * (1.0 + c / root);
  } else {
    const double root = std::sqrt(1.0 + 9.0 * c * c);
    out.negativity = (root - 1.0) / 3.0;
    out.binegativity = out.negativity / 2.0 * (1.0 + 3.0 * c / root);
  }
  return out;
}

DensityMatrix4 gmem(const GMemParams& q) {
  require_nonnegative(q.x, "gmem: x");
  require_nonnegative(q.y, "gmem: y");
  require_nonnegative(q.a, "gmem: a");
  require_nonnegative(q.b, "gmem: b");
  require_nonnegative(q.gamma, "gmem: gamma");
  const double total = q.x + q.y + q.a + q.b + q.gamma;
  if (std::abs(total - 1.0) > kParamTolerance) {
    std::ostringstream os;
    os << "gmem: x + y + a + b + gamma must equal 1, got " << total;
    throw ValidationError(os.str());
  }
  Mat4 m;
  m(0, 0) = q.x + q.gamma / 2.0;
  m(1, 1) = q.a;
  m(2, 2) = q.b;
  m(3, 3) = q.y + q.gamma / 2.0;
  m(0, 3) = q.gamma / 2.0;
  m(3, 0) = q.gamma / 2.0;
  return DensityMatrix4::from_matrix(m);
}

MeasureTriple gmem_measures(const GMemParams& q) {
  MeasureTriple out;
  out.concurrence = std::max(0.0, q.gamma - 2.0 * std::sqrt(q.a * q.b));
  const double root = std::hypot(q.a - q.b, q.gamma);
  out.negativity = std::max(0.0, root - (q.a + q.b));
  if (out.negativity > 0.0) out.binegativity = out.negativity / 2.0 * (1.0 + q.gamma / root);
  return out;
}

Complex EwParams::beta() const { return std::sqrt(std::max(0.0, 1.0 - std::norm(alpha))); }

DensityMatrix4 ew(const EwParams& params) {
  require_unit_interval(params.p, "ew: p");
  if (!(std::abs(params.alpha) <= 1.0 + kParamTolerance)) {
    throw ValidationError("ew: |alpha| must not exceed 1");
  }
  const Vec4 psi{params.alpha, 0.0, 0.0, params.beta()};
  return DensityMatrix4::from_matrix((1.0 - params.p) / 4.0 * Mat4::identity() + params.p * projector(psi));
}

MeasureTriple ew_measures(const EwParams& params) {
  const double v =
      2.0 * std::max(0.0, std::abs(params.p * params.alpha * std::conj(params.beta())) - (1.0 - params.p) / 4.0);
  return {v, v, v};
}

}  // namespace bineg
