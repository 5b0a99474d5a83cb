#include "bineg/sampling.hpp"

namespace bineg {

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) {
  std::uint64_t z = parent + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Complex complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

Mat2 ginibre_mat2(Rng& rng) {
  Mat2 g;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) g(i, j) = complex_gaussian(rng);
  return g;
}

Mat4 ginibre_mat4(Rng& rng) {
  Mat4 g;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) g(i, j) = complex_gaussian(rng);
  return g;
}

DensityMatrix4 random_state_ginibre(Rng& rng) {
  const Mat4 g = ginibre_mat4(rng);
  Mat4 rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return DensityMatrix4::from_matrix(rho.hermitian_part());
}

Vec4 random_unit_vector(Rng& rng) {
  Vec4 v;
  for (auto& x : v) x = complex_gaussian(rng);
  const double norm = std::sqrt(inner(v, v).real());
  for (auto& x : v) x /= norm;
  return v;
}

DensityMatrix4 random_pure_state(Rng& rng) { return DensityMatrix4::pure(random_unit_vector(rng)); }

Mat4 random_hermitian(Rng& rng) { return ginibre_mat4(rng).hermitian_part(); }

XState random_xstate(Rng& rng) {
  std::exponential_distribution<double> weight(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  const double wa = weight(rng);
  const double wb = weight(rng);
  const double wd = weight(rng);
  const double total = wa + wb + wd;
  XState x;
  x.a = wa / total;
  x.b = wb / (2.0 * total);
  x.d = wd / total;
  const int mode = std::uniform_int_distribution<int>(0, 2)(rng);
  if (mode != 1) x.e = std::polar(std::sqrt(x.a * x.d) * unit(rng), angle(rng));
  if (mode != 0) x.c = std::polar(x.b * unit(rng), angle(rng));
  return x;
}

}  // namespace bineg
