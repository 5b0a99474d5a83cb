#include "bineg/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "bineg/measures.hpp"
#include "bineg/sampling.hpp"
#include "bineg/states.hpp"
#include "bineg/twirl.hpp"

namespace bineg {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

SuiteResult guarded(const std::string& name, const std::function<SuiteResult()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return {name, false, std::string("threw: ") + e.what()};
  }
}

SuiteResult eigen_reconstruction(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 1));
  double worst_recon = 0.0;
  double worst_ortho = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const Mat4 a = random_hermitian(rng);
    const auto sd = hermitian_eig(a, opt.reconstruction_eigen);
    worst_recon = std::max(worst_recon, max_abs_diff(sd.reconstruct(), a));
    worst_ortho = std::max(worst_ortho, max_abs_diff(sd.eigenvectors.adjoint() * sd.eigenvectors, Mat4::identity()));
  }
  const bool ok = worst_recon < 1e-10 && worst_ortho < 1e-10;
  return {"qmat-eigen-reconstruction", ok,
          "max |A - V L V^dagger| = " + fmt(worst_recon) + ", max |V^dagger V - I| = " + fmt(worst_ortho)};
}

SuiteResult qmat_identities(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 2));
  double tn = 0.0, inv = 0.0, herm = 0.0, tr = 0.0, mixed = 0.0;
  for (int k = 0; k < 2000; ++k) {
    Mat4 a = random_hermitian(rng);
    a *= Complex(1.0 / a.trace().real());
    const double lhs = trace_norm(a);
    const double rhs = a.trace().real() + 2.0 * negative_part(a).trace;
    tn = std::max(tn, std::abs(lhs - rhs));
    const Mat4 g = ginibre_mat4(rng);
    inv = std::max(inv, max_abs_diff(partial_transpose(partial_transpose(g)), g));
    herm = std::max(herm, hermiticity_error(partial_transpose(a)));
    tr = std::max(tr, std::abs(partial_transpose(g).trace() - g.trace()));
    const Mat2 w = ginibre_mat2(rng), x = ginibre_mat2(rng), y = ginibre_mat2(rng), z = ginibre_mat2(rng);
    mixed = std::max(mixed, max_abs_diff(kron(w, x) * kron(y, z), kron(w * y, x * z)));
  }
  const bool ok = tn < 1e-10 && inv == 0.0 && herm < 1e-15 && tr < 1e-15 && mixed < 1e-12;
  return {"qmat-identities", ok,
          "trace-norm identity " + fmt(tn) + ", PT involution " + fmt(inv) + ", kron mixed product " + fmt(mixed)};
}

SuiteResult identity_and_ordering(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 3));
  double gap = 0.0;
  std::size_t order_violations = 0, ppt_mismatch = 0, multi_negative = 0;
  for (int k = 0; k < 5000; ++k) {
    const auto rho = random_state_ginibre(rng);
    const double c = concurrence(rho), n = negativity(rho);
    const double n2 = binegativity_spectral(rho);
    gap = std::max(gap, std::abs(n2 - binegativity_closed(rho)));
    if (n2 > n + 1e-9 || n > c + 1e-9) ++order_violations;
    const bool zn = n < 1e-9, zc = c < 1e-9, z2 = n2 < 1e-9;
    if (zn != zc || zn != z2) ++ppt_mismatch;
    if (negative_eigenvalue_count(rho) > 1) ++multi_negative;
  }
  const bool ok = gap < 1e-9 && order_violations == 0 && ppt_mismatch == 0 && multi_negative == 0;
  return {"n2-identity-and-ordering", ok,
          "max |N2_spectral - N2_closed| = " + fmt(gap) + ", ordering violations " +
              std::to_string(order_violations) + ", PPT mismatches " + std::to_string(ppt_mismatch)};
}

SuiteResult pure_states(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 4));
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto rho = random_pure_state(rng);
    const auto t = measure_triple(rho);
    worst = std::max({worst, std::abs(t.binegativity - t.negativity), std::abs(t.negativity - t.concurrence)});
  }
  return {"pure-state-coincidence", worst < 1e-9, "max spread of (C, N, N2) = " + fmt(worst)};
}

SuiteResult families(const VerifyOptions&) {
  double worst = 0.0;
  for (double p : linspace(0.0, 1.0, 51)) {
    worst = std::max(worst, max_abs_diff(measure_triple(werner(p)), werner_measures(p)));
    worst = std::max(worst, max_abs_diff(measure_triple(mem(p)), mem_measures(p)));
    const EwParams e{p, 0.4};
    worst = std::max(worst, max_abs_diff(measure_triple(ew(e)), ew_measures(e)));
    const BellDiagonalParams c{-p, -0.9 * p, -0.9 * p};
    worst = std::max(worst, max_abs_diff(measure_triple(bell_diagonal(c)), bell_diagonal_measures(c)));
    const GMemParams g{0.1 * (1.0 - p), 0.05 * (1.0 - p), 0.6 * (1.0 - p), 0.25 * (1.0 - p), p};
    worst = std::max(worst, max_abs_diff(measure_triple(gmem(g)), gmem_measures(g)));
  }
  return {"family-closed-forms", worst < 1e-10, "max deviation from spectral pipeline = " + fmt(worst)};
}

SuiteResult xstates(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 5));
  double worst = 0.0;
  for (int k = 0; k < 2000; ++k) {
    const XState x = random_xstate(rng);
    worst = std::max(worst, max_abs_diff(xstate_measures(x), measure_triple(DensityMatrix4::from_matrix(x.matrix()))));
  }
  return {"xstate-closed-forms", worst < 1e-10, "max deviation from spectral pipeline = " + fmt(worst)};
}

SuiteResult channel_agreement(const VerifyOptions& opt) {
  double state_dev = 0.0;
  double measure_dev = 0.0;
  std::string worst_where;
  for (ChannelConfig cfg : closed_form_configs()) {
    for (double p : linspace(0.0, 1.0, 21)) {
      for (double eta : linspace(0.0, 1.0, 21)) {
        cfg.eta = eta;
        const auto rep = closed_form_report(cfg, EwParams{p, 0.4}, opt.variant);
        if (rep.max_entry_deviation > state_dev || rep.measure_deviation > measure_dev) {
          std::ostringstream os;
          os << to_string(cfg.kind) << ' ' << to_string(cfg.sidedness) << " at p=" << p << ", eta=" << eta;
          worst_where = os.str();
        }
        state_dev = std::max(state_dev, rep.max_entry_deviation);
        measure_dev = std::max(measure_dev, rep.measure_deviation);
      }
    }
  }
  const bool ok = state_dev < 1e-12 && measure_dev < 1e-9;
  std::string detail = std::string(opt.variant == FormVariant::Literal ? "literal" : "corrected") +
                       " closed forms vs Kraus: max entry deviation " + fmt(state_dev) +
                       ", max measure deviation " + fmt(measure_dev);
  if (!ok) detail += " (worst: " + worst_where + ")";
  return {"channel-oracle-agreement", ok, detail};
}

SuiteResult monotone_decay(const VerifyOptions&) {
  const auto etas = linspace(0.0, 1.0, 101);
  std::size_t increases = 0, dominance = 0;
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing}) {
    for (double p : {0.4, 0.6, 0.8, 1.0}) {
      const auto rho = ew(EwParams{p, 0.4});
      MeasureTriple prev_one{}, prev_both{};
      for (std::size_t i = 0; i < etas.size(); ++i) {
        const auto one = measure_triple(apply(rho, {kind, Sidedness::OneSidedA, etas[i]}));
        const auto both = measure_triple(apply(rho, {kind, Sidedness::BothSided, etas[i]}));
        if (i > 0) {
          for (auto [cur, prev] : {std::pair{one, prev_one}, std::pair{both, prev_both}}) {
            if (cur.concurrence > prev.concurrence + 1e-12 || cur.negativity > prev.negativity + 1e-12 ||
                cur.binegativity > prev.binegativity + 1e-12)
              ++increases;
          }
        }
        if (both.concurrence > one.concurrence + 1e-12 || both.negativity > one.negativity + 1e-12 ||
            both.binegativity > one.binegativity + 1e-12)
          ++dominance;
        prev_one = one;
        prev_both = both;
      }
    }
  }
  return {"monotone-decay", increases == 0 && dominance == 0,
          std::to_string(increases) + " increases along eta, " + std::to_string(dominance) +
              " cells where two-sided noise leaves more entanglement than one-sided"};
}

SuiteResult twirl_experiment(const VerifyOptions& opt) {
  Rng rng(derive_seed(opt.seed, 7));
  const auto report = monotonicity_experiment(300, 0, rng);
  Rng mc_rng(derive_seed(opt.seed, 8));
  const auto mc = monotonicity_experiment(10, 4000, mc_rng);
  const bool ok = report.violations == 0 && report.negativity_violations == 0 &&
                  report.concurrence_violations == 0 && mc.mc_within_bound == mc.n_states;
  return {"twirl-monotonicity", ok,
          std::to_string(report.violations) + " N2 violations in " + std::to_string(report.n_states) +
              " states (worst margin " + fmt(report.worst_margin) + "), MC max deviation " +
              fmt(mc.mc_max_deviation)};
}

}  // namespace

std::vector<ChannelConfig> closed_form_configs() {
  std::vector<ChannelConfig> out;
  for (ChannelKind kind : {ChannelKind::AmplitudeDamping, ChannelKind::PhaseDamping, ChannelKind::Depolarizing})
    for (Sidedness s : {Sidedness::OneSidedA, Sidedness::BothSided}) out.push_back({kind, s, 0.0});
  return out;
}

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
  using Suite = SuiteResult (*)(const VerifyOptions&);
  const std::pair<const char*, Suite> suites[] = {
      {"qmat-eigen-reconstruction", eigen_reconstruction},
      {"qmat-identities", qmat_identities},
      {"n2-identity-and-ordering", identity_and_ordering},
      {"pure-state-coincidence", pure_states},
      {"family-closed-forms", families},
      {"xstate-closed-forms", xstates},
      {"channel-oracle-agreement", channel_agreement},
      {"monotone-decay", monotone_decay},
      {"twirl-monotonicity", twirl_experiment},
  };
  std::vector<SuiteResult> results;
  for (const auto& [name, fn] : suites) results.push_back(guarded(name, [&] { return fn(options); }));
  return results;
}

}  // namespace bineg
