// Acceptance run: one PASS/FAIL line per criterion, full sample sizes.
//
//   acceptance [path-to-bineg-cli]
//
// Criterion 10 shells out to the CLI; its path defaults to the one baked in
// at build time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bineg/channels.hpp"
#include "bineg/measures.hpp"
#include "bineg/sampling.hpp"
#include "bineg/states.hpp"
#include "bineg/twirl.hpp"
#include "bineg/verify.hpp"

using namespace bineg;

namespace {

constexpr std::uint64_t kSeed = 0x5eed2019;

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

struct Outcome {
  bool passed = false;
  std::string detail;
};

// ---------------------------------------------------------------------------

struct GinibreStats {
  double identity_gap = 0.0;
  std::size_t order_violations = 0;
  std::size_t entangled = 0;
};

const GinibreStats& ginibre_stats() {
  static const GinibreStats stats = [] {
    GinibreStats s;
    Rng rng(derive_seed(kSeed, 1));
    for (int k = 0; k < 100000; ++k) {
      const auto rho = random_state_ginibre(rng);
      const double c = concurrence(rho);
      const double n = negativity(rho);
      const double n2 = binegativity_spectral(rho);
      s.identity_gap = std::max(s.identity_gap, std::abs(n2 - binegativity_closed(rho)));
      if (n2 > n + 1e-9 || n > c + 1e-9) ++s.order_violations;
      if (n > 1e-10) ++s.entangled;
    }
    return s;
  }();
  return stats;
}

Outcome n2_identity() {
  const auto& s = ginibre_stats();
  return {s.identity_gap < 1e-9, "1e5 Ginibre states (" + std::to_string(s.entangled) +
                                  " entangled), max |N2_spectral - N2_closed| = " + sci(s.identity_gap) + " < 1e-9"};
}

Outcome ordering_chain() {
  const auto& s = ginibre_stats();
  return {s.order_violations == 0,
          "1e5 Ginibre states, violations of N2 <= N <= C (1e-9 slack): " + std::to_string(s.order_violations)};
}

Outcome pure_coincidence() {
  Rng rng(derive_seed(kSeed, 3));
  double n2n = 0.0, nc = 0.0;
  for (int k = 0; k < 10000; ++k) {
    const auto t = measure_triple(random_pure_state(rng));
    n2n = std::max(n2n, std::abs(t.binegativity - t.negativity));
    nc = std::max(nc, std::abs(t.negativity - t.concurrence));
  }
  return {n2n < 1e-9 && nc < 1e-9,
          "1e4 Haar pure states, max |N2 - N| = " + sci(n2n) + ", max |N - C| = " + sci(nc) + " (< 1e-9)"};
}

Outcome family_formulas() {
  const auto grid = linspace(0.0, 1.0, 51);
  double werner_dev = 0.0, bell_dev = 0.0, mem_dev = 0.0, gmem_dev = 0.0;
  for (double p : grid) {
    werner_dev = std::max(werner_dev, max_abs_diff(measure_triple(werner(p)), werner_measures(p)));
    for (const BellDiagonalParams& c :
         {BellDiagonalParams{-p, -p, -p}, BellDiagonalParams{-p, -0.9 * p, -0.9 * p}, BellDiagonalParams{p, p, -p}})
      bell_dev = std::max(bell_dev, max_abs_diff(measure_triple(bell_diagonal(c)), bell_diagonal_measures(c)));
    mem_dev = std::max(mem_dev, max_abs_diff(measure_triple(mem(p)), mem_measures(p)));
    const double rest = 1.0 - p;
    for (const GMemParams& q : {GMemParams{0.1 * rest, 0.2 * rest, 0.3 * rest, 0.4 * rest, p},
                                GMemParams{0.5 * rest, 0.0, 0.5 * rest, 0.0, p},
                                GMemParams{0.25 * rest, 0.25 * rest, 0.25 * rest, 0.25 * rest, p}})
      gmem_dev = std::max(gmem_dev, max_abs_diff(measure_triple(gmem(q)), gmem_measures(q)));
  }
  const double werner_spot = measure_triple(werner(0.7)).negativity;
  const double mem_spot = measure_triple(mem(0.5)).negativity;
  const bool ok = werner_dev < 1e-10 && bell_dev < 1e-10 && mem_dev < 1e-10 && gmem_dev < 1e-10 &&
                  std::abs(werner_spot - 0.55) < 1e-10 && std::abs(mem_spot - 0.267592) < 1e-6;
  std::ostringstream os;
  os << "51-point grids, max deviation Werner " << sci(werner_dev) << ", Bell-diagonal " << sci(bell_dev) << ", MEM "
     << sci(mem_dev) << ", gMEM " << sci(gmem_dev) << " (< 1e-10); Werner p=0.7 N = " << werner_spot
     << ", MEM C=0.5 N = " << mem_spot;
  return {ok, os.str()};
}

Outcome channel_agreement() {
  const auto grid = linspace(0.0, 1.0, 21);
  bool ok = true;
  std::ostringstream os;
  os << "21x21 (p, eta), alpha=0.4; corrected max entry deviation / literal max entry-or-measure deviation:";
  for (ChannelConfig cfg : closed_form_configs()) {
    double corrected = 0.0, literal = 0.0;
    for (double p : grid) {
      for (double eta : grid) {
        cfg.eta = eta;
        corrected = std::max(corrected, closed_form_report(cfg, {p, 0.4}).max_entry_deviation);
        const auto lit = closed_form_report(cfg, {p, 0.4}, FormVariant::Literal);
        literal = std::max({literal, lit.max_entry_deviation, lit.measure_deviation});
      }
    }
    ok = ok && corrected < 1e-12;
    // The phase-damping and two-sided depolarizing forms are the ones known
    // to carry misprints; their literal deviation must be visible.
    const bool must_deviate = cfg.kind == ChannelKind::PhaseDamping ||
                              (cfg.kind == ChannelKind::Depolarizing && cfg.sidedness == Sidedness::BothSided);
    if (must_deviate) ok = ok && literal > 1e-6;
    os << ' ' << to_string(cfg.kind) << '/' << (cfg.sidedness == Sidedness::BothSided ? "both" : "one") << ' '
       << sci(corrected) << '/' << sci(literal);
  }
  return {ok, os.str()};
}

Outcome monotone_decay() {
  const auto etas = linspace(0.0, 1.0, 101);
  std::size_t violations = 0, sequences = 0;
  for (ChannelConfig cfg : closed_form_configs()) {
    for (int step = 4; step <= 10; ++step) {
      const auto rho = ew({step / 10.0, 0.4});
      MeasureTriple prev_oracle{}, prev_closed{};
      for (std::size_t i = 0; i < etas.size(); ++i) {
        cfg.eta = etas[i];
        const auto oracle = measure_triple(apply(rho, cfg));
        const auto closed = closed_form_measures(cfg, {step / 10.0, 0.4});
        if (i > 0) {
          for (auto [cur, prev] : {std::pair{oracle, prev_oracle}, std::pair{closed, prev_closed}}) {
            violations += cur.concurrence > prev.concurrence + 1e-12;
            violations += cur.negativity > prev.negativity + 1e-12;
            violations += cur.binegativity > prev.binegativity + 1e-12;
          }
        }
        prev_oracle = oracle;
        prev_closed = closed;
      }
      sequences += 6;
    }
  }
  return {violations == 0, "6 channel configs x p in {0.4..1.0} x 101 eta, " + std::to_string(sequences) +
                               " sequences (Kraus and closed form), increases beyond 1e-12: " +
                               std::to_string(violations)};
}

Outcome ad_spot_value() {
  const double a = 1.0 / std::sqrt(2.0);
  const auto t = measure_triple(apply(ew({1.0, a}), {ChannelKind::AmplitudeDamping, Sidedness::OneSidedA, 0.5}));
  const bool ok = std::abs(t.negativity - 0.5) < 1e-10 && std::abs(t.concurrence - std::sqrt(0.5)) < 1e-10 &&
                  std::abs(t.binegativity - 0.485702) < 1e-6;
  char buf[160];
  std::snprintf(buf, sizeof buf, "AD one-sided p=1 alpha=1/sqrt2 eta=0.5: N = %.12f, C = %.12f, N2 = %.9f", t.negativity,
                t.concurrence, t.binegativity);
  return {ok, buf};
}

Outcome twirl() {
  std::size_t within = 0;
  double worst = 0.0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng(derive_seed(kSeed + 8, k));
    const auto rho = random_entangled_state(rng);
    const double dev = max_abs_diff(mc_twirl(rho, 10000, rng).matrix(), analytic_twirl(rho).state.matrix());
    within += dev < 5e-2;
    worst = std::max(worst, dev);
  }
  Rng rng(derive_seed(kSeed, 9));
  const auto r = monotonicity_experiment(10000, 0, rng);
  const bool ok = within >= 99 && r.violations == 0;
  return {ok, "MC (M=1e4) within 5e-2 of analytic twirl in " + std::to_string(within) +
                  "/100 states (max deviation " + sci(worst) + "); 1e4 entangled states, " +
                  std::to_string(r.violations) + " violations of N2(twirl) <= N2 + 1e-9 (worst margin " +
                  sci(r.worst_margin) + ")"};
}

Outcome xstates() {
  Rng rng(derive_seed(kSeed, 10));
  double worst = 0.0;
  std::size_t inner = 0, outer = 0;
  for (int k = 0; k < 10000; ++k) {
    const XState x = random_xstate(rng);
    inner += xstate_branch(x) == XStateBranch::InnerCoherence;
    outer += xstate_branch(x) == XStateBranch::OuterCoherence;
    worst = std::max(worst, max_abs_diff(xstate_measures(x), measure_triple(DensityMatrix4::from_matrix(x.matrix()))));
  }
  return {worst < 1e-10 && inner > 0 && outer > 0,
          "1e4 X-states (" + std::to_string(inner) + " middle-block branch, " + std::to_string(outer) +
              " corner branch), max deviation " + sci(worst) + " < 1e-10"};
}

Outcome cli_verify(const std::string& cli) {
  const std::string quiet = " >/dev/null 2>&1";
  const int clean = std::system(("\"" + cli + "\" verify" + quiet).c_str());
  const int faulty = std::system(("\"" + cli + "\" verify --inject-eig-tolerance 10" + quiet).c_str());
  const bool ok = clean == 0 && faulty != 0;
  return {ok, "verify exit status clean = " + std::to_string(clean) + ", with injected eigensolver tolerance = " +
                  std::to_string(faulty)};
}

}  // namespace

int main(int argc, char** argv) {
#ifdef BINEG_CLI_PATH
  std::string cli = BINEG_CLI_PATH;
#else
  std::string cli = "bineg";
#endif
  if (argc > 1) cli = argv[1];

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"N2 closed-form identity", n2_identity},
      {"ordering chain", ordering_chain},
      {"pure-state coincidence", pure_coincidence},
      {"family formulas", family_formulas},
      {"channel oracle agreement", channel_agreement},
      {"monotone decay", monotone_decay},
      {"AD spot value", ad_spot_value},
      {"twirl", twirl},
      {"X-state closed forms", xstates},
      {"verify command", [&] { return cli_verify(cli); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !out.passed;
    std::printf("criterion %2zu %s  %-26s %s [%.1fs]\n", i + 1, out.passed ? "PASS" : "FAIL",
                criteria[i].first.c_str(), out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
