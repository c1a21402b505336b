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

#include "table1.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace ipid {

namespace {

Vec10 row(double m, double hx, double hy, double hz, double ixx, double ixy,
          double ixz, double iyy, double iyz, double izz) {
  Vec10 v;
  v << m, hx, hy, hz, ixx, ixy, ixz, iyy, iyz, izz;
  return v;
}

}  // namespace

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = {
      {"10s", "linear",
       row(1.836, 0.062, 0.001, 0.208, 0.580, 0.593, -0.541, 1.022, 0.190,
           -0.129),
       false},
      {"10s", "manifold",
       row(1.836, 0.062, 0.001, 0.208, 0.215, 0.012, -0.064, 0.227, 0.038,
           0.028),
       true},
      {"5s", "linear",
       row(1.842, 0.061, 0.000, 0.206, 0.128, -0.018, -0.125, 0.125, 0.026,
           -0.001),
       false},
      {"5s", "manifold",
       row(1.842, 0.060, 0.000, 0.206, 0.166, 0.001, -0.089, 0.216, 0.001,
           0.050),
       true},
      {"2s", "linear",
       row(1.852, 0.060, 0.001, 0.206, 0.065, 0.001, -0.035, 0.066, 0.006,
           0.007),
       true},
      {"2s", "manifold",
       row(1.852, 0.060, 0.001, 0.206, 0.067, 0.001, -0.030, 0.086, 0.003,
           0.014),
       true},
      {"1s", "linear",
       row(1.820, 0.060, 0.002, 0.205, 0.032, 0.0014, -0.017, 0.036, 0.002,
           0.008),
       true},
      {"1s", "manifold",
       row(1.820, 0.060, 0.002, 0.205, 0.034, 0.001, -0.015, 0.042, 0.001,
           0.009),
       true},
      {"0.5s", "linear",
       row(1.843, 0.060, 0.005, 0.204, 0.033, 0.003, -0.014, 0.035, 0.000,
           0.008),
       true},
      {"0.5s", "manifold",
       row(1.844, 0.059, 0.004, 0.204, 0.037, 0.001, -0.013, 0.039, 0.000,
           0.008),
       true},
  };
  return rows;
}

std::vector<Table1Verdict> run_table1() {
  std::vector<Table1Verdict> verdicts;
  verdicts.reserve(table1_rows().size());
  for (const Table1Row& fixture : table1_rows()) {
    const InertialParams pi = InertialParams::from_vector(fixture.values);
    Table1Verdict v;
    v.row = fixture;
    const auto [strict_ok, strict_report] = check_full_physical(pi, 1e-6);
    std::tie(v.consistent, v.report) =
        check_full_physical(pi, kPublicationRoundingTol);
    v.strict_consistent = strict_ok;
    v.violation = std::max(
        {0.0, -strict_report.min_eigenvalue,
         -strict_report.second_moments.minCoeff(), -strict_report.mass});
    v.matches_reference = v.consistent == fixture.reference_consistent;
    verdicts.push_back(v);
  }
  return verdicts;
}

std::string table1_to_text(const std::vector<Table1Verdict>& verdicts) {
  std::ostringstream out;
  out << "segment method   consistent reference match strict violation\n";
  char buf[160];
  for (const Table1Verdict& v : verdicts) {
    std::snprintf(buf, sizeof(buf), "%-7s %-8s %-10s %-9s %-5s %-6s %.6g\n",
                  v.row.segment, v.row.method, v.consistent ? "yes" : "NO",
                  v.row.reference_consistent ? "yes" : "NO",
                  v.matches_reference ? "yes" : "NO",
                  v.strict_consistent ? "yes" : "NO", v.violation);
    out << buf;
  }
  return out.str();
}

}  // namespace ipid
