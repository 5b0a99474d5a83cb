#include "bineg/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>

#include "parallel.hpp"

namespace bineg {

double SweepGrid::max_disagreement() const {
  double worst = 0.0;
  for (const auto& row : rows) worst = std::max(worst, max_abs_diff(row.closed, row.oracle));
  return worst;
}

SweepGrid run_sweep(ChannelKind kind, Sidedness sidedness, Complex alpha, const std::vector<double>& p_values,
                    const std::vector<double>& eta_values, FormVariant variant) {
  SweepGrid grid;
  grid.p_values = p_values;
  grid.eta_values = eta_values;
  grid.alpha = alpha;
  grid.kind = kind;
  grid.sidedness = sidedness;
  grid.variant = variant;
  grid.rows.resize(p_values.size() * eta_values.size());
  detail::parallel_for(grid.rows.size(), [&](std::size_t idx) {
    const double p = p_values[idx / eta_values.size()];
    const double eta = eta_values[idx % eta_values.size()];
    const ClosedFormReport report = closed_form_report({kind, sidedness, eta}, EwParams{p, alpha}, variant);
    grid.rows[idx] = SweepRow{p, eta, report.measures, report.oracle_measures};
  });
  return grid;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // folds -0 into +0
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 12);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : grid.rows) {
    out << format_number(row.p) << ',' << format_number(row.eta) << ',' << format_number(row.closed.concurrence)
        << ',' << format_number(row.closed.negativity) << ',' << format_number(row.closed.binegativity) << ','
        << format_number(row.oracle.concurrence) << ',' << format_number(row.oracle.negativity) << ','
        << format_number(row.oracle.binegativity) << '\n';
  }
}

}  // namespace bineg
