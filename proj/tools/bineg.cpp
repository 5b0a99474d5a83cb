// bineg: command-line front end.
//
//   bineg measures <state.json>
//   bineg sweep --channel ad --sided one --alpha 0.4 --grid 51 --out ad.csv
//   bineg twirl --states 1000 --samples 0 --seed 7
//   bineg verify

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bineg/channels.hpp"
#include "bineg/measures.hpp"
#include "bineg/state_io.hpp"
#include "bineg/sweep.hpp"
#include "bineg/twirl.hpp"
#include "bineg/verify.hpp"

namespace {

using namespace bineg;

constexpr std::uint64_t kDefaultSeed = 20190521;

// Accepts "0.4", "-0.3i", "0.3+0.2i", "0.3-0.2i", "i".
std::optional<Complex> parse_complex(std::string text) {
  std::erase(text, ' ');
  if (text.empty()) return std::nullopt;
  auto parse_real = [](const std::string& s, double& out) {
    if (s.empty()) return false;
    std::istringstream is(s);
    is.imbue(std::locale::classic());
    is >> out;
    return !is.fail() && is.eof();
  };
  auto parse_imag = [&](std::string s, double& out) {
    s.pop_back();  // trailing 'i'
    if (s.empty() || s == "+") return out = 1.0, true;
    if (s == "-") return out = -1.0, true;
    return parse_real(s, out);
  };
  double re = 0.0, im = 0.0;
  if (text.back() != 'i') {
    if (!parse_real(text, re)) return std::nullopt;
    return Complex(re, 0.0);
  }
  // Split at the last sign that is not the leading one and not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = text.size() - 1; k > 0; --k) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) {
    if (!parse_imag(text, im)) return std::nullopt;
    return Complex(0.0, im);
  }
  if (!parse_real(text.substr(0, split), re) || !parse_imag(text.substr(split), im)) return std::nullopt;
  return Complex(re, im);
}

std::string fixed(double v, int digits = 12) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(digits);
  os << std::fixed << (v == 0.0 ? 0.0 : v);
  return os.str();
}

std::string sci(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

int cmd_measures(const std::string& path) {
  const LoadedState loaded = load_state_file(path);
  const DensityMatrix4& rho = loaded.state;
  const double c = concurrence(rho);
  const double n = negativity(rho);
  const double n2 = binegativity_spectral(rho);
  const double n2_closed = binegativity_closed(rho);
  const int negatives = negative_eigenvalue_count(rho);

  std::cout << "state: " << loaded.family << '\n';
  std::cout << "C            " << fixed(c) << '\n';
  std::cout << "N            " << fixed(n) << '\n';
  std::cout << "N2 spectral  " << fixed(n2) << '\n';
  std::cout << "N2 closed    " << fixed(n2_closed) << '\n';
  if (negatives == 0) {
    std::cout << "N(rho_psi)   n/a\n";
    std::cout << "negative eigenvalues of rho^T_B: 0\n";
    std::cout << "PPT: yes (separable)\n";
  } else {
    const auto psi = negative_eigvec_state(rho);
    std::cout << "N(rho_psi)   " << fixed(negativity(psi.state)) << '\n';
    std::cout << "negative eigenvalues of rho^T_B: " << negatives
              << (negatives == 1 ? " (single, as expected)" : " (UNEXPECTED)") << '\n';
    std::cout << "PPT: no (entangled)\n";
  }
  if (loaded.closed) {
    std::cout << "family closed form: C=" << fixed(loaded.closed->concurrence)
              << " N=" << fixed(loaded.closed->negativity) << " N2=" << fixed(loaded.closed->binegativity)
              << " (max deviation " << sci(max_abs_diff(*loaded.closed, measure_triple(rho))) << ")\n";
  }
  return negatives > 1 ? 3 : 0;
}

struct SweepArgs {
  std::string channel = "ad";
  std::string sided = "one";
  std::string alpha = "0.4";
  std::size_t grid = 51;
  std::string out;
  bool literal = false;
  bool debug = false;
};

int cmd_sweep(const SweepArgs& args) {
  const ChannelKind kind = parse_channel_kind(args.channel);
  const Sidedness sided = parse_sidedness(args.sided);
  const auto alpha = parse_complex(args.alpha);
  if (!alpha) throw ValidationError("cannot parse --alpha '" + args.alpha + "'");
  if (args.grid < 2) throw ValidationError("--grid must be at least 2");
  const FormVariant variant = args.literal ? FormVariant::Literal : FormVariant::Corrected;

  const auto axis = linspace(0.0, 1.0, args.grid);
  const SweepGrid grid = run_sweep(kind, sided, *alpha, axis, axis, variant);

  std::ofstream out(args.out, std::ios::binary | std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open '" << args.out << "' for writing\n";
    return 2;
  }
  write_csv(grid, out);
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << args.out << "'\n";
    return 2;
  }

  const double worst = grid.max_disagreement();
  std::cout << "wrote " << grid.rows.size() << " rows to " << args.out << '\n';
  std::cout << "channel " << to_string(kind) << ", " << to_string(sided) << ", "
            << (args.literal ? "literal" : "corrected") << " closed forms\n";
  std::cout << "max |closed - oracle| = " << sci(worst) << '\n';

  if (args.debug) {
    const auto cf = closed_form({kind, sided, 0.5}, EwParams{1.0, *alpha}, variant);
    std::cout << "scalars at p=1, eta=0.5:\n";
    for (const auto& s : cf.scalars)
      std::cout << "  " << s.name << " = " << fixed(s.value.real()) << (s.value.imag() < 0.0 ? " - " : " + ")
                << fixed(std::abs(s.value.imag())) << "i\n";
  }

  if (!args.literal && worst > 1e-9) {
    std::cerr << "error: closed forms disagree with the Kraus oracle by " << sci(worst) << '\n';
    return 4;
  }
  return 0;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BINEG_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw ValidationError(std::string("BINEG_SEED is not an unsigned integer: '") + env + "'");
  }
  return kDefaultSeed;
}

int cmd_twirl(std::size_t states, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  const MonotonicityReport r = monotonicity_experiment(states, samples, rng);
  std::cout << "ensemble:            " << r.ensemble << '\n';
  std::cout << "seed:                " << seed << '\n';
  std::cout << "states:              " << r.n_states << '\n';
  std::cout << "mc samples/state:    " << r.samples_per_state << '\n';
  std::cout << "tolerance:           " << sci(r.tolerance) << '\n';
  std::cout << "N2 violations:       " << r.violations << '\n';
  std::cout << "worst margin:        " << sci(r.worst_margin) << "  (max N2(out) - N2(in))\n";
  std::cout << "N violations:        " << r.negativity_violations << '\n';
  std::cout << "C violations:        " << r.concurrence_violations << '\n';
  if (r.samples_per_state > 0) {
    std::cout << "mc max deviation:    " << sci(r.mc_max_deviation) << '\n';
    std::cout << "mc mean deviation:   " << sci(r.mc_mean_deviation) << '\n';
    std::cout << "mc within 5/sqrt(M): " << r.mc_within_bound << " of " << r.n_states << '\n';
  } else {
    std::cout << "mc cross-check:      skipped (--samples 0)\n";
  }
  return r.violations == 0 ? 0 : 1;
}

int cmd_verify(bool literal, std::optional<double> injected_tolerance) {
  VerifyOptions opt;
  opt.variant = literal ? FormVariant::Literal : FormVariant::Corrected;
  if (injected_tolerance) opt.reconstruction_eigen.tolerance = *injected_tolerance;

  const auto results = run_verification(opt);
  bool all = true;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }

  // Informational only: the claimed κ > δ ordering for two-sided depolarizing
  // noise does not hold on the whole grid.
  const auto axis = linspace(0.0, 1.0, 21);
  const auto scan = scan_dp_kappa(axis, axis, {Complex(0.4), Complex(1.0 / std::sqrt(2.0))}, opt.variant);
  std::cout << "note: dp two-sided |kappa| <= delta in " << scan.violations << " of " << scan.cells << " cells";
  if (scan.violations > 0)
    std::cout << " (p in [" << scan.p_min << ", " << scan.p_max << "], eta in [" << scan.eta_min << ", "
              << scan.eta_max << "])";
  std::cout << '\n';

  if (!all) {
    std::cerr << "failed suites:";
    for (const auto& r : results)
      if (!r.passed) std::cerr << ' ' << r.name;
    std::cerr << '\n';
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concurrence, negativity and binegativity of two-qubit states"};
  app.require_subcommand(1);

  std::string state_path;
  auto* measures = app.add_subcommand("measures", "Print C, N and N2 for a JSON state file");
  measures->add_option("file", state_path, "State file")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Write a (p, eta) grid of closed-form and oracle measures as CSV");
  sweep->add_option("--channel", sweep_args.channel, "ad | pd | dp")
      ->check(CLI::IsMember({"ad", "pd", "dp"}))
      ->capture_default_str();
  sweep->add_option("--sided", sweep_args.sided, "one | both")
      ->check(CLI::IsMember({"one", "both"}))
      ->capture_default_str();
  sweep->add_option("--alpha", sweep_args.alpha, "Amplitude alpha, e.g. 0.4 or 0.3+0.2i")->capture_default_str();
  sweep->add_option("--grid", sweep_args.grid, "Points per axis over [0, 1]")->capture_default_str();
  sweep->add_option("--out", sweep_args.out, "Output CSV path")->required();
  sweep->add_flag("--paper-literal", sweep_args.literal, "Use the closed forms exactly as printed");
  sweep->add_flag("--debug", sweep_args.debug, "Print intermediate closed-form scalars");

  std::size_t twirl_states = 1000;
  std::size_t twirl_samples = 0;
  std::optional<std::uint64_t> twirl_seed;
  auto* twirl = app.add_subcommand("twirl", "Check N2 monotonicity under U x U twirling");
  twirl->add_option("--states", twirl_states, "Number of entangled random states")->capture_default_str();
  twirl->add_option("--samples", twirl_samples, "Monte Carlo Haar samples per state (0 skips MC)")
      ->capture_default_str();
  twirl->add_option("--seed", twirl_seed, "RNG seed (falls back to $BINEG_SEED)");

  bool verify_literal = false;
  std::optional<double> inject_tolerance;
  auto* verify = app.add_subcommand("verify", "Run every invariant suite at reduced size");
  verify->add_flag("--paper-literal", verify_literal, "Check the closed forms exactly as printed");
  verify->add_option("--inject-eig-tolerance", inject_tolerance,
                     "Test hook: stopping tolerance for the reconstruction suite's eigensolver");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*measures) return cmd_measures(state_path);
    if (*sweep) return cmd_sweep(sweep_args);
    if (*twirl) return cmd_twirl(twirl_states, twirl_samples, resolve_seed(twirl_seed));
    if (*verify) return cmd_verify(verify_literal, inject_tolerance);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
