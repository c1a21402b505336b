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

#include "solver.hpp"
#include "trajectory.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ipid {

/// Fixed 19-column CSV layout:
///   t, v_lin(3), v_ang(3), ag_lin(3), ag_ang(3), f(3), mu(3)
/// comma-separated, '.' decimal, header row required, values at 17
/// significant digits so write/read roundtrips bitwise. Lines starting
/// with '#' are comments (the writer emits one carrying the units).
void write_csv(const Dataset& dataset, const std::string& path);

/// Throws Error(missing_header) when the first non-comment line is not the
/// expected header, Error(malformed_row) with the 1-based line number on
/// arity or number-parse failures, Error(io) when the file cannot be read.
/// A header-only file yields an empty Dataset.
[[nodiscard]] Dataset read_csv(const std::string& path);

/// Flat "key = value" document, one pair per line, written in input order.
void write_key_values(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::string& path);

/// Parses a key-value document; '#' lines and blank lines are skipped.
/// Throws Error(io) / Error(malformed_row).
[[nodiscard]] std::vector<std::pair<std::string, std::string>>
read_key_values(const std::string& path);

/// Extracts the ten parameters from keys m, mcx, mcy, mcz, ixx, ixy, ixz,
/// iyy, iyz, izz. Throws Error(parse) when a key is missing or non-numeric.
[[nodiscard]] InertialParams params_from_key_values(
    const std::vector<std::pair<std::string, std::string>>& pairs);

/// The ten parameter keys with values at 17 significant digits, in the
/// canonical order above.
[[nodiscard]] std::vector<std::pair<std::string, std::string>>
params_to_key_values(const InertialParams& pi);

/// Solver settings from a key-value file; recognized keys are max_iters,
/// grad_tol, step_tol, damping0, mass_floor, moment_floor, seed. Unknown
/// keys throw Error(parse) so typos fail loudly.
[[nodiscard]] SolverConfig read_solver_config(const std::string& path);

/// Shortest decimal string that roundtrips a double (17 significant digits).
[[nodiscard]] std::string format_double(double value);

}  // namespace ipid
