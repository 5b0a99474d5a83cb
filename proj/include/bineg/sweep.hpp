#pragma once

// (p, η) grids of closed-form and reference measures, written as CSV.

#include <ostream>
#include <string>
#include <vector>

#include "bineg/channels.hpp"

namespace bineg {

struct SweepRow {
  double p = 0.0;
  double eta = 0.0;
  MeasureTriple closed;
  MeasureTriple oracle;
};

struct SweepGrid {
  std::vector<double> p_values;
  std::vector<double> eta_values;
  Complex alpha = 0.4;
  ChannelKind kind = ChannelKind::AmplitudeDamping;
  Sidedness sidedness = Sidedness::OneSidedA;
  FormVariant variant = FormVariant::Corrected;
  std::vector<SweepRow> rows;  // p-major, then η, in input order

  /// max over rows of |closed − oracle| (any of the three measures).
  double max_disagreement() const;
};

inline constexpr const char* kSweepCsvHeader = "p,eta,C,N,N2,C_oracle,N_oracle,N2_oracle";

/// Evaluates every cell. Cells run in parallel; row order is fixed.
SweepGrid run_sweep(ChannelKind kind, Sidedness sidedness, Complex alpha, const std::vector<double>& p_values,
                    const std::vector<double>& eta_values, FormVariant variant = FormVariant::Corrected);

/// Locale-independent, '.' decimal point, 12 significant digits, no "-0".
std::string format_number(double v);

/// Header plus one LF-terminated line per row.
void write_csv(const SweepGrid& grid, std::ostream& out);

}  // namespace bineg
