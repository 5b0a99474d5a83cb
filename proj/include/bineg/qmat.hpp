#pragma once

// Fixed-size complex matrix algebra for single- and two-qubit operators.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace bineg {

using Complex = std::complex<double>;

/// Input failed a structural check (non-Hermitian, not a density matrix, bad parameters).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two routes that must agree did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() = default;

  /// Row-major nested initializer, e.g. {{1, 0}, {0, 1}}.
  SquareMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    if (rows.size() != N) throw std::invalid_argument("SquareMatrix: wrong row count");
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != N) throw std::invalid_argument("SquareMatrix: wrong column count");
      std::size_t j = 0;
      for (const auto& v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const std::array<Complex, N>& d) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * N + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * N + j]; }

  const std::array<Complex, N * N>& data() const { return data_; }

  SquareMatrix adjoint() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
  }

  SquareMatrix conjugate() const {
    SquareMatrix m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = std::conj(data_[k]);
    return m;
  }

  SquareMatrix transpose() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m(i, j) = (*this)(j, i);
    return m;
  }

  /// (A + A†) / 2
  SquareMatrix hermitian_part() const {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        m(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const auto& v : data_)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  SquareMatrix& operator+=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(SquareMatrix a, Complex s) { return a *= s; }
  friend SquareMatrix operator*(Complex s, SquareMatrix a) { return a *= s; }
  friend SquareMatrix operator*(double s, SquareMatrix a) { return a *= Complex(s); }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < N; ++j) m(i, j) += aik * b(k, j);
      }
    return m;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Mat2 = SquareMatrix<2>;
using Mat4 = SquareMatrix<4>;
using Vec4 = std::array<Complex, 4>;

/// max_ij |a_ij - b_ij|
template <std::size_t N>
double max_abs_diff(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  return (a - b).max_abs();
}

template <std::size_t N>
double hermiticity_error(const SquareMatrix<N>& a) {
  return max_abs_diff(a, a.adjoint());
}

namespace pauli {
inline Mat2 x() { return Mat2{{0.0, 1.0}, {1.0, 0.0}}; }
inline Mat2 y() { return Mat2{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}; }
inline Mat2 z() { return Mat2{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli

/// Which tensor factor an operation acts on. A is the most significant index.
enum class Subsystem { A, B };

/// (a⊗b)[2i+k][2j+l] = a[i][j]·b[k][l]
Mat4 kron(const Mat2& a, const Mat2& b);

Mat4 outer(const Vec4& u, const Vec4& v);
inline Mat4 projector(const Vec4& v) { return outer(v, v); }

Vec4 apply(const Mat4& a, const Vec4& v);
Complex inner(const Vec4& u, const Vec4& v);  // ⟨u|v⟩
Complex expectation(const Mat4& a, const Vec4& v);  // ⟨v|a|v⟩

Mat4 partial_transpose(const Mat4& rho, Subsystem subsystem = Subsystem::B);

struct EigenOptions {
  // Stop once the off-diagonal Frobenius mass drops below this (scaled by max(1, ‖A‖_F)).
  double tolerance = 1e-14;
  int max_sweeps = 64;
};

struct SpectralDecomposition {
  std::array<double, 4> eigenvalues{};  // ascending
  Mat4 eigenvectors;                    // column k belongs to eigenvalues[k]

  Vec4 eigenvector(std::size_t k) const;
  Mat4 reconstruct() const;
};

/// Hermitian eigendecomposition by cyclic Jacobi rotations.
///
/// Eigenvalues are returned in ascending order. Each eigenvector is normalized
/// and has its largest-magnitude component real and positive (the first such
/// component when several tie), so outputs are deterministic.
/// Throws ValidationError when ‖a − a†‖_max ≥ 1e-10.
SpectralDecomposition hermitian_eig(const Mat4& a, const EigenOptions& options = {});

/// Eigenvalues below this count as negative.
inline constexpr double kNegativeEigenvalueThreshold = 1e-12;

/// Σ_{λ<0} |λ| |v⟩⟨v|: a positive operator carrying the magnitude of the negative spectrum.
struct NegativePart {
  Mat4 op;
  double trace = 0.0;
  int rank = 0;  // number of eigenvalues below the threshold
};

NegativePart negative_part(const Mat4& a);
NegativePart negative_part(const SpectralDecomposition& spectrum);

/// Σ|λ_i|
double trace_norm(const Mat4& a);

}  // namespace bineg
