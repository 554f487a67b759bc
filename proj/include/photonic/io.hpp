// Copyright 2026 The Photonic Basis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON configuration/script parsing and the CSV writers.

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "photonic/dynamics.hpp"
#include "photonic/protocol.hpp"
#include "photonic/scenarios.hpp"

namespace photonic {

/// Registry + partitions + n_max (or an explicit element list). Parse errors
/// carry the line/column or the offending field path.
std::shared_ptr<const Basis> basis_from_config(const std::string& json_text);

struct Script {
  std::shared_ptr<const Basis> basis;
  QState initial;
  std::vector<ProtocolStep> steps;
  RunOptions options;
  std::vector<SupportTemplate> templates;  // inline templates, may be empty
};

/// `base_dir` resolves a basis_config given as a relative path.
Script script_from_json(const std::string& json_text, const std::filesystem::path& base_dir = {});
std::string script_to_json(const Scenario& s, RunOptions options = {});

/// "lambda", "halted-light" or "dissociation" with optional JSON parameter
/// overrides (field names follow the parameter structs; directions as [x,y,z],
/// a null direction means "not configured").
Scenario builtin_scenario(const std::string& name, const std::string& params_json = "");

std::vector<SupportTemplate> templates_from_json(const std::string& json_text);
std::string templates_to_json(const std::vector<SupportTemplate>& templates, const Basis& basis);

/// Rows: step,time,kind,index,re,im,mode,kx,ky,kz,Rx,Ry,Rz. Amplitude rows
/// for every nonzero amplitude, one emission row per record, one ledger row
/// per entry and one annotation row per note.
std::string trace_to_csv(const Trace& t);

struct SecularConfig {
  CMatrix matrix;  // channel order 0..3
  double threshold = 5.0;
};

SecularConfig secular_from_json(const std::string& json_text);

struct SecularClaim {
  std::string anchor_name;
  double anchor = 0.0;
  std::size_t root_index = 0;
  double root_value = 0.0;
  std::vector<double> abs_c;
  std::vector<int> order;  // channels 1..3 by descending |C|
  std::optional<double> ratio;  // |C2| / |C3|
  std::string verdict;          // PASS, FAIL or N/A
};

struct SecularReport {
  std::vector<double> eigenvalues;
  std::vector<SecularClaim> claims;
  bool passed() const;
  std::string to_csv() const;
};

/// Anchors at the excited level (expects [1,2,3] and the ratio threshold)
/// and at the ground level (expects channel 3 above channel 2).
SecularReport secular_report(const SecularConfig& cfg);

std::string atto_to_csv(const AttoState& a);
std::string slits_to_csv(const std::vector<SlitSample>& pattern);
std::string spin_report();

/// %.12g with negative zero folded to 0.
std::string fmt(double v);

}  // namespace photonic
