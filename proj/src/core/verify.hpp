// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/spaces.hpp"

namespace slt {

// Result of one numerical experiment: measured constants against the
// check's thresholds, reproducible from (config, seed).
struct CheckReport {
  std::string name;
  std::map<std::string, double> parameters;
  std::map<std::string, double> measured;
  std::string threshold;
  bool pass = false;
  double runtime_seconds = 0.0;
};

struct VerifyConfig {
  int dim = 2;
  int n = 256;
  int j_max = -1;
  FrameVariant variant = FrameVariant::Smooth;
  uint64_t seed = 1;
  int trials = 20;
};

CheckReport check_reproducing_identity(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_sampling_plancherel_polya(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_almost_orthogonality(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_geometry(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_maximal_inequalities(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_embeddings(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_vanishing_sequences(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_parseval(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_overlap(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_energy(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_sequence_characterization(const Frame& frame, const VerifyConfig& cfg);
CheckReport check_s_star_equivalence(const VerifyConfig& cfg);

std::vector<std::string> verify_suite_names();
// Runs the named check ("all" runs every one); returns the reports.
std::vector<CheckReport> run_verify_suite(const std::string& suite, const VerifyConfig& cfg);

std::string report_to_json(const std::vector<CheckReport>& reports, const VerifyConfig& cfg);

}  // namespace slt
