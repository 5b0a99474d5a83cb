#include "bineg/channels.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace bineg {

namespace {

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

void require_eta(double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    std::ostringstream os;
    os << "channel strength eta must lie in [0, 1], got " << eta;
    throw ValidationError(os.str());
  }
}

// |a / b| with 0 when b vanishes.
double safe_ratio(double num, double den) { return den == 0.0 ? 0.0 : std::abs(num / den); }

// Entries shared by every EW closed form.
struct EwScalars {
  double p;
  double eta;
  Complex alpha;
  Complex beta;
  double a2;  // |α|²
  double b2;  // |β|²
  double ab;  // |αβ*|
  double r;   // (1−p)/4
  // Corner coherence phase: αβ* for corrected forms, α*β as printed.
  Complex corner(FormVariant v) const { return v == FormVariant::Corrected ? alpha * std::conj(beta) : std::conj(alpha) * beta; }
};

EwScalars ew_scalars(const EwParams& params, double eta) {
  EwScalars s;
  s.p = params.p;
  s.eta = eta;
  s.alpha = params.alpha;
  s.beta = params.beta();
  s.a2 = std::norm(s.alpha);
  s.b2 = std::norm(s.beta);
  s.ab = std::abs(s.alpha * std::conj(s.beta));
  s.r = (1.0 - s.p) / 4.0;
  return s;
}

void set_corner(Mat4& m, Complex value) {
  m(0, 3) = value;
  m(3, 0) = std::conj(value);
}

ClosedForm amplitude_damping_one_sided(const EwScalars& s, FormVariant v) {
  const double p = s.p;
  const double eta = s.eta;
  const double ell_plus = (1.0 - p) * (1.0 + eta) / 4.0;
  const double ell_minus = (1.0 - p) * (1.0 - eta) / 4.0;
  const double eps = p * std::sqrt(1.0 - eta);
  const double m = p * (1.0 - eta);

  ClosedForm out;
  out.state(0, 0) = ell_plus + p * s.a2;
  out.state(1, 1) = ell_plus + p * eta * s.b2;
  out.state(2, 2) = ell_minus;
  out.state(3, 3) = ell_minus + m * s.b2;
  set_corner(out.state, eps * s.corner(v));

  const double inner_b = ell_plus + p * eta * s.b2;
  const double vartheta = ell_plus - ell_minus + p * eta * s.b2;
  // Printed: 4ε|αβ*|²; the reference evolution gives 4ε²|αβ*|².
  const double coupling = v == FormVariant::Corrected ? 4.0 * eps * eps * s.ab * s.ab : 4.0 * eps * s.ab * s.ab;
  const double big_l = std::sqrt(vartheta * vartheta + coupling);

  out.measures.concurrence = 2.0 * std::max(0.0, eps * s.ab - std::sqrt(ell_minus * inner_b));
  out.measures.negativity = std::max(0.0, big_l - (ell_plus + ell_minus + p * eta * s.b2));
  if (out.measures.negativity > 0.0) {
    const double ratio = safe_ratio(eps * s.ab * (vartheta - big_l), coupling + vartheta * (vartheta - big_l));
    out.measures.binegativity = out.measures.negativity / 2.0 * (1.0 + 2.0 * ratio);
  }
  out.scalars = {{"ell_plus", ell_plus}, {"ell_minus", ell_minus}, {"epsilon", eps},
                 {"m", m},               {"vartheta", vartheta},   {"L", big_l}};
  return out;
}

ClosedForm amplitude_damping_both_sided(const EwScalars& s, FormVariant v) {
  const double p = s.p;
  const double eta = s.eta;
  const double ell_plus = (1.0 - p) * (1.0 + eta) / 4.0;
  const double eps = p * std::sqrt(1.0 - eta);
  const double m = p * (1.0 - eta);
  const double s_corner = s.r * (1.0 + eta) * (1.0 + eta) + p * (s.a2 + eta * eta * s.b2);
  // Printed with pη²|β|²; the reference evolution has pη|β|².
  const double eta_power = v == FormVariant::Corrected ? eta : eta * eta;
  const double v_mid = (1.0 - eta) * (ell_plus + p * eta_power * s.b2);

  ClosedForm out;
  out.state(0, 0) = s_corner;
  out.state(1, 1) = v_mid;
  out.state(2, 2) = v_mid;
  out.state(3, 3) = (s.r + p * s.b2) * (1.0 - eta) * (1.0 - eta);
  set_corner(out.state, m * s.corner(v));

  // ε²/p = p(1−η) = m, written without the division so p = 0 is well defined.
  const double value = 2.0 * std::max(0.0, m * s.ab - v_mid);
  out.measures = {value, value, value};
  out.scalars = {{"r", s.r}, {"ell_plus", ell_plus}, {"epsilon", eps}, {"m", m}, {"s", s_corner}, {"v", v_mid}};
  return out;
}

ClosedForm phase_damping(const EwScalars& s, int sides, FormVariant v) {
  const double p = s.p;
  const double eta = s.eta;
  const double m = p * (1.0 - eta);
  const double decay = std::pow(1.0 - eta, sides);
  // m^i / p^{i−1} = p(1−η)^i. As printed the matrix entry reads m^i / p = p^{i−1}(1−η)^i.
  const double matrix_coef = v == FormVariant::Corrected ? p * decay : std::pow(p, sides - 1) * decay;
  const double measure_coef = p * decay;
  // Printed measure subtracts (1−η)/4; the middle diagonal is r = (1−p)/4.
  const double offset = v == FormVariant::Corrected ? s.r : (1.0 - eta) / 4.0;

  ClosedForm out;
  out.state(0, 0) = s.r + p * s.a2;
  out.state(1, 1) = s.r;
  out.state(2, 2) = s.r;
  out.state(3, 3) = s.r + p * s.b2;
  set_corner(out.state, matrix_coef * s.corner(v));

  const double value = 2.0 * std::max(0.0, measure_coef * s.ab - offset);
  out.measures = {value, value, value};
  out.scalars = {{"r", s.r}, {"m", m}, {"i", double(sides)}, {"corner_coefficient", matrix_coef}};
  return out;
}

ClosedForm depolarizing_one_sided(const EwScalars& s, FormVariant v) {
  const double p = s.p;
  const double eta = s.eta;
  const double t2 = 1.0 - 2.0 * eta / 3.0;
  const double t4 = 1.0 - 4.0 * eta / 3.0;
  // Printed Θ_x = r + pη|x|²; the reference evolution carries a factor 2/3.
  const double theta_scale = v == FormVariant::Corrected ? 2.0 / 3.0 : 1.0;
  const double theta_a = s.r + theta_scale * p * eta * s.a2;
  const double theta_b = s.r + theta_scale * p * eta * s.b2;
  const Complex omega = p * t4 * std::conj(s.alpha) * s.beta;
  const double abs_omega = std::abs(omega);
  const double split = theta_b - theta_a;
  const double upsilon = std::sqrt(split * split + 4.0 * abs_omega * abs_omega);

  ClosedForm out;
  out.state(0, 0) = s.r + p * t2 * s.a2;
  out.state(1, 1) = theta_b;
  out.state(2, 2) = theta_a;
  out.state(3, 3) = s.r + p * t2 * s.b2;
  set_corner(out.state, p * t4 * s.corner(v));

  out.measures.concurrence = 2.0 * std::max(0.0, abs_omega - std::sqrt(theta_a * theta_b));
  out.measures.negativity = std::max(0.0, upsilon - (theta_a + theta_b));
  if (out.measures.negativity > 0.0) {
    const double ratio =
        safe_ratio(2.0 * abs_omega * (split - upsilon), 4.0 * abs_omega * abs_omega + split * (split - upsilon));
    out.measures.binegativity = out.measures.negativity / 2.0 * (1.0 + ratio);
  }
  out.scalars = {{"r", s.r},           {"t2", t2},          {"t4", t4},           {"Theta_alpha", theta_a},
                 {"Theta_beta", theta_b}, {"omega", omega}, {"Upsilon", upsilon}};
  return out;
}

ClosedForm depolarizing_both_sided(const EwScalars& s, FormVariant v) {
  const double p = s.p;
  const double eta = s.eta;
  const double t2 = 1.0 - 2.0 * eta / 3.0;
  const double t4 = 1.0 - 4.0 * eta / 3.0;
  const double delta = s.r + 2.0 / 9.0 * p * eta * (3.0 - 2.0 * eta);
  const double xi = 2.0 / 9.0 * p * eta * eta;
  const double tau = p / 9.0 * (9.0 - 24.0 * eta + 14.0 * eta * eta);
  const Complex varsigma = p / 9.0 * Complex(1.0, -1.0) * eta * eta;
  const double delta_ab = s.r + p * t2 * t2 * s.a2 + 2.0 * xi * s.b2;
  const double delta_ba = s.r + p * t2 * t2 * s.b2 + 2.0 * xi * s.a2;

  Complex kappa;
  Complex middle;
  if (v == FormVariant::Corrected) {
    // The reference evolution has corner p t₄² αβ* and no middle-block coherence.
    kappa = p * t4 * t4 * s.corner(v);
    middle = 0.0;
  } else {
    kappa = varsigma * s.alpha * std::conj(s.beta) + tau * std::conj(s.alpha) * s.beta;
    middle = -xi * std::conj(s.alpha) * s.beta;
  }

  ClosedForm out;
  out.state(0, 0) = delta_ab;
  out.state(1, 1) = delta;
  out.state(2, 2) = delta;
  out.state(3, 3) = delta_ba;
  set_corner(out.state, kappa);
  out.state(1, 2) = middle;
  out.state(2, 1) = std::conj(middle);

  const double value = 2.0 * std::max(0.0, std::abs(kappa) - delta);
  out.measures = {value, value, value};
  out.scalars = {{"r", s.r},   {"t2", t2},     {"t4", t4},         {"delta", delta},       {"tau", tau},
                 {"varsigma", varsigma}, {"xi", xi}, {"kappa", kappa}, {"Delta_alpha_beta", delta_ab},
                 {"Delta_beta_alpha", delta_ba}};
  return out;
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      return "AD";
    case ChannelKind::PhaseDamping:
      return "PD";
    case ChannelKind::Depolarizing:
      return "DP";
  }
  return "?";
}

std::string_view to_string(Sidedness sidedness) {
  switch (sidedness) {
    case Sidedness::OneSidedA:
      return "one-sided(A)";
    case Sidedness::OneSidedB:
      return "one-sided(B)";
    case Sidedness::BothSided:
      return "both-sided";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view text) {
  const auto s = lower(text);
  if (s == "ad") return ChannelKind::AmplitudeDamping;
  if (s == "pd") return ChannelKind::PhaseDamping;
  if (s == "dp") return ChannelKind::Depolarizing;
  throw ValidationError("unknown channel '" + std::string(text) + "' (expected ad, pd or dp)");
}

Sidedness parse_sidedness(std::string_view text) {
  const auto s = lower(text);
  if (s == "one" || s == "a") return Sidedness::OneSidedA;
  if (s == "b") return Sidedness::OneSidedB;
  if (s == "both") return Sidedness::BothSided;
  throw ValidationError("unknown sidedness '" + std::string(text) + "' (expected one, both, a or b)");
}

double KrausSet::completeness_error() const {
  Mat2 sum;
  for (const auto& k : operators) sum += k.adjoint() * k;
  return max_abs_diff(sum, Mat2::identity());
}

Mat2 KrausSet::apply(const Mat2& qubit_state) const {
  Mat2 out;
  for (const auto& k : operators) out += k * qubit_state * k.adjoint();
  return out;
}

KrausSet kraus(ChannelKind kind, double eta) {
  require_eta(eta);
  KrausSet set{kind, eta, {}};
  const double keep = std::sqrt(1.0 - eta);
  switch (kind) {
    case ChannelKind::AmplitudeDamping:
      set.operators = {Mat2{{1.0, 0.0}, {0.0, keep}}, Mat2{{0.0, std::sqrt(eta)}, {0.0, 0.0}}};
      break;
    case ChannelKind::PhaseDamping:
      set.operators = {keep * Mat2::identity(), Mat2{{std::sqrt(eta), 0.0}, {0.0, 0.0}},
                       Mat2{{0.0, 0.0}, {0.0, std::sqrt(eta)}}};
      break;
    case ChannelKind::Depolarizing: {
      const double w = std::sqrt(eta / 3.0);
      set.operators = {keep * Mat2::identity(), w * pauli::x(), w * pauli::y(), w * pauli::z()};
      break;
    }
  }
  return set;
}

DensityMatrix4 apply(const DensityMatrix4& rho, const ChannelConfig& config) {
  const KrausSet set = kraus(config.kind, config.eta);
  const std::vector<Mat2> identity{Mat2::identity()};
  const auto& left = config.sidedness == Sidedness::OneSidedB ? identity : set.operators;
  const auto& right = config.sidedness == Sidedness::OneSidedA ? identity : set.operators;
  Mat4 out;
  for (const auto& k : left) {
    for (const auto& mj : right) {
      const Mat4 op = kron(k, mj);
      out += op * rho.matrix() * op.adjoint();
    }
  }
  return DensityMatrix4::from_matrix(out.hermitian_part());
}

ClosedForm closed_form(const ChannelConfig& config, const EwParams& params, FormVariant variant) {
  require_eta(config.eta);
  ew(params);  // parameter validation
  const EwScalars s = ew_scalars(params, config.eta);
  if (config.sidedness == Sidedness::OneSidedB) {
    throw ValidationError("closed forms exist for a channel on qubit A or on both qubits");
  }
  const bool both = config.sidedness == Sidedness::BothSided;
  switch (config.kind) {
    case ChannelKind::AmplitudeDamping:
      return both ? amplitude_damping_both_sided(s, variant) : amplitude_damping_one_sided(s, variant);
    case ChannelKind::PhaseDamping:
      return phase_damping(s, both ? 2 : 1, variant);
    case ChannelKind::Depolarizing:
      return both ? depolarizing_both_sided(s, variant) : depolarizing_one_sided(s, variant);
  }
  throw ValidationError("unknown channel kind");
}

Mat4 closed_form_state(const ChannelConfig& config, const EwParams& params, FormVariant variant) {
  return closed_form(config, params, variant).state;
}

MeasureTriple closed_form_measures(const ChannelConfig& config, const EwParams& params, FormVariant variant) {
  return closed_form(config, params, variant).measures;
}

ClosedFormReport closed_form_report(const ChannelConfig& config, const EwParams& params, FormVariant variant) {
  ClosedForm cf = closed_form(config, params, variant);
  DensityMatrix4 oracle = apply(ew(params), config);
  const MeasureTriple oracle_measures = measure_triple(oracle);
  const double entry_dev = max_abs_diff(cf.state, oracle.matrix());
  const double measure_dev = max_abs_diff(cf.measures, oracle_measures);
  return ClosedFormReport{variant,
                          cf.state,
                          cf.measures,
                          std::move(oracle),
                          oracle_measures,
                          std::isfinite(entry_dev) ? entry_dev : std::numeric_limits<double>::max(),
                          std::isfinite(measure_dev) ? measure_dev : std::numeric_limits<double>::max(),
                          std::move(cf.scalars)};
}

KappaScan scan_dp_kappa(const std::vector<double>& p_values, const std::vector<double>& eta_values,
                        const std::vector<Complex>& alphas, FormVariant variant) {
  KappaScan scan;
  scan.worst_margin = std::numeric_limits<double>::infinity();
  scan.p_min = scan.eta_min = std::numeric_limits<double>::infinity();
  scan.p_max = scan.eta_max = -std::numeric_limits<double>::infinity();
  for (double p : p_values) {
    for (double eta : eta_values) {
      for (const Complex& alpha : alphas) {
        const ClosedForm cf =
            closed_form({ChannelKind::Depolarizing, Sidedness::BothSided, eta}, EwParams{p, alpha}, variant);
        double kappa = 0.0;
        double delta = 0.0;
        for (const auto& [name, value] : cf.scalars) {
          if (name == "kappa") kappa = std::abs(value);
          if (name == "delta") delta = value.real();
        }
        const double margin = kappa - delta;
        ++scan.cells;
        scan.worst_margin = std::min(scan.worst_margin, margin);
        if (margin <= 0.0) {
          ++scan.violations;
          scan.p_min = std::min(scan.p_min, p);
          scan.p_max = std::max(scan.p_max, p);
          scan.eta_min = std::min(scan.eta_min, eta);
          scan.eta_max = std::max(scan.eta_max, eta);
        }
      }
    }
  }
  return scan;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 0) return out;
  if (n == 1) return {lo};
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  return out;
}

}  // namespace bineg
