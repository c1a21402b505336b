// Copyright 2026 The ipid Authors
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

#include "consistency.hpp"

#include <string>
#include <vector>

namespace ipid {

/// One row of the built-in reference grid: parameters identified from a
/// hardware experiment, published rounded to three decimals, by an
/// unconstrained linear solve ("linear") or the manifold solve ("manifold")
/// over a given excitation segment duration.
struct Table1Row {
  const char* segment;          // "10s" .. "0.5s"
  const char* method;           // "linear" or "manifold"
  Vec10 values;                 // m, mcx..mcz, ixx..izz
  bool reference_consistent;    // verdict shipped with the published grid
};

/// Verdicts of this library's checker over one fixture row.
struct Table1Verdict {
  Table1Row row;
  ConsistencyReport report;      // at the rounding tolerance
  bool consistent = false;       // at the rounding tolerance
  bool strict_consistent = false;  // at tol 1e-6
  double violation = 0.0;        // kg*m^2, worst amount at strict tol
  bool matches_reference = false;
};

/// Three-decimal rounding of the published values perturbs eigenvalues and
/// second moments by up to a few 1e-2 kg*m^2 on this grid, so verdicts meant
/// to reproduce the published classification are taken at this tolerance.
/// Violations beyond it cannot be rounding artifacts at this magnitude.
inline constexpr double kPublicationRoundingTol = 2e-2;

/// The ten published rows, ordered by decreasing segment duration with the
/// linear row first in each pair.
[[nodiscard]] const std::vector<Table1Row>& table1_rows();

/// Runs check_full_physical over every fixture row, once at strict
/// tolerance 1e-6 and once at kPublicationRoundingTol; the latter verdict is
/// compared against the shipped classification.
[[nodiscard]] std::vector<Table1Verdict> run_table1();

/// Pass/fail grid for terminal output, one line per row.
[[nodiscard]] std::string table1_to_text(
    const std::vector<Table1Verdict>& verdicts);

}  // namespace ipid
