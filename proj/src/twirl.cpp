#include "bineg/twirl.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "bineg/measures.hpp"
#include "bineg/states.hpp"
#include "parallel.hpp"

namespace bineg {

namespace {

constexpr std::size_t kMcBatch = 1024;

Mat4 conjugate_by(const Mat4& rho, const Mat2& u) {
  const Mat4 uu = kron(u, u);
  return uu * rho * uu.adjoint();
}

}  // namespace

Mat2 haar_unitary_2(Rng& rng) {
  const Mat2 g = ginibre_mat2(rng);
  Complex c0[2] = {g(0, 0), g(1, 0)};
  Complex c1[2] = {g(0, 1), g(1, 1)};
  const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
  c0[0] /= n0;
  c0[1] /= n0;
  const Complex proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
  c1[0] -= proj * c0[0];
  c1[1] -= proj * c0[1];
  const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
  c1[0] /= n1;
  c1[1] /= n1;
  return Mat2{{c0[0], c1[0]}, {c0[1], c1[1]}};
}

DensityMatrix4 mc_twirl(const DensityMatrix4& rho, std::size_t samples, Rng& rng) {
  if (samples == 0) throw ValidationError("mc_twirl: samples must be at least 1");
  const std::uint64_t parent = rng();
  const std::size_t batches = (samples + kMcBatch - 1) / kMcBatch;
  std::vector<Mat4> partial(batches);
  detail::parallel_for(batches, [&](std::size_t b) {
    Rng sub(derive_seed(parent, b));
    const std::size_t count = std::min(kMcBatch, samples - b * kMcBatch);
    Mat4 acc;
    for (std::size_t k = 0; k < count; ++k) acc += conjugate_by(rho.matrix(), haar_unitary_2(sub));
    partial[b] = acc;
  });
  Mat4 total;
  for (const auto& m : partial) total += m;
  total *= Complex(1.0 / static_cast<double>(samples));
  return DensityMatrix4::from_matrix(total.hermitian_part());
}

DensityMatrix4 werner_form(double p) {
  if (!(p >= -1.0 / 3.0 - 1e-12 && p <= 1.0 + 1e-12)) {
    throw ValidationError("werner_form: p must lie in [-1/3, 1]");
  }
  return DensityMatrix4::from_matrix((1.0 - p) / 4.0 * Mat4::identity() + p * projector(singlet_vector()));
}

AnalyticTwirl analytic_twirl(const DensityMatrix4& rho) {
  const double f = expectation(rho.matrix(), singlet_vector()).real();
  const double p = (4.0 * f - 1.0) / 3.0;
  return AnalyticTwirl{werner_form(p), p, f};
}

TwirlResult twirl_state(const DensityMatrix4& rho, std::size_t mc_samples, Rng& rng) {
  const AnalyticTwirl exact = analytic_twirl(rho);
  TwirlResult out;
  out.input_binegativity = binegativity_spectral(rho);
  out.output_binegativity = binegativity_spectral(exact.state);
  out.werner_p = exact.werner_p;
  out.mc_samples = mc_samples;
  if (mc_samples > 0) {
    out.mc_deviation = max_abs_diff(mc_twirl(rho, mc_samples, rng).matrix(), exact.state.matrix());
  }
  return out;
}

DensityMatrix4 random_entangled_state(Rng& rng) {
  for (;;) {
    DensityMatrix4 rho = random_state_ginibre(rng);
    if (negativity(rho) > kEntangledSamplingThreshold) return rho;
  }
}

MonotonicityReport monotonicity_experiment(std::size_t n_states, std::size_t samples_per_state, Rng& rng) {
  MonotonicityReport report;
  report.n_states = n_states;
  report.samples_per_state = samples_per_state;
  const std::uint64_t parent = rng();

  struct Row {
    TwirlResult twirl;
    double n_in, n_out, c_in, c_out;
  };
  std::vector<Row> rows(n_states);
  detail::parallel_for(n_states, [&](std::size_t k) {
    Rng sub(derive_seed(parent, k));
    const DensityMatrix4 rho = random_entangled_state(sub);
    Row row;
    row.twirl = twirl_state(rho, samples_per_state, sub);
    const DensityMatrix4 out = analytic_twirl(rho).state;
    row.n_in = negativity(rho);
    row.n_out = negativity(out);
    row.c_in = concurrence(rho);
    row.c_out = concurrence(out);
    rows[k] = row;
  });

  if (n_states == 0) return report;
  report.worst_margin = -std::numeric_limits<double>::infinity();
  double mc_sum = 0.0;
  const double mc_bound = samples_per_state > 0 ? 5.0 / std::sqrt(static_cast<double>(samples_per_state)) : 0.0;
  for (const auto& row : rows) {
    const double margin = row.twirl.output_binegativity - row.twirl.input_binegativity;
    report.worst_margin = std::max(report.worst_margin, margin);
    if (margin > report.tolerance) ++report.violations;
    if (row.n_out > row.n_in + report.tolerance) ++report.negativity_violations;
    if (row.c_out > row.c_in + report.tolerance) ++report.concurrence_violations;
    if (samples_per_state > 0) {
      report.mc_max_deviation = std::max(report.mc_max_deviation, row.twirl.mc_deviation);
      mc_sum += row.twirl.mc_deviation;
      if (row.twirl.mc_deviation < mc_bound) ++report.mc_within_bound;
    }
  }
  if (samples_per_state > 0) report.mc_mean_deviation = mc_sum / static_cast<double>(n_states);
  return report;
}

}  // namespace bineg
