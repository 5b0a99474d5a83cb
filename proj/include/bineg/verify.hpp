#pragma once

// Reduced-size runs of every invariant the library promises, as named suites.

#include <cstdint>
#include <string>
#include <vector>

#include "bineg/channels.hpp"
#include "bineg/qmat.hpp"

namespace bineg {

struct VerifyOptions {
  FormVariant variant = FormVariant::Corrected;
  // Used only by the eigensolver reconstruction suite; lets a caller inject
  // a broken stopping tolerance and watch that suite fail.
  EigenOptions reconstruction_eigen{};
  std::uint64_t seed = 20190521;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SuiteResult> run_verification(const VerifyOptions& options = {});

/// Every channel configuration with a closed form.
std::vector<ChannelConfig> closed_form_configs();

}  // namespace bineg
