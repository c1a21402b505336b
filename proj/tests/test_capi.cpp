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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <ipid/ipid.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

std::string tmp_file(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

/// Canonical demo body used across the C API tests.
ipid_theta demo_theta() {
  ipid_theta theta{};
  theta.mass = 2.0;
  theta.com[0] = 0.05;
  theta.com[1] = -0.03;
  theta.com[2] = 0.1;
  const double omega[3] = {0.3, -0.2, 0.5};
  ipid_so3_exp(omega, theta.orientation);
  theta.second_moments[0] = 0.02;
  theta.second_moments[1] = 0.01;
  theta.second_moments[2] = 0.015;
  return theta;
}

double rel_err(double a, double b) {
  return std::fabs(a - b) / std::max(1.0, std::fabs(b));
}

}  // namespace

TEST_CASE("version and error text") {
  const char* v = ipid_version();
  REQUIRE(v != nullptr);
  CHECK(std::strlen(v) >= 5);

  // Failures set the message, successes clear it.
  CHECK(ipid_so3_exp(nullptr, nullptr) == IPID_ERR_INVALID_ARGUMENT);
  CHECK(std::strlen(ipid_last_error()) > 0);
  double m[9];
  const double w[3] = {0.0, 0.0, 0.0};
  CHECK(ipid_so3_exp(w, m) == IPID_OK);
  CHECK(std::strlen(ipid_last_error()) == 0);
}

TEST_CASE("rotation exponential matches known values") {
  const double quarter[3] = {0.0, 0.0, M_PI / 2.0};
  double m[9];
  REQUIRE(ipid_so3_exp(quarter, m) == IPID_OK);
  // Row-major: x axis maps to y.
  CHECK(std::fabs(m[0 * 3 + 0]) < 1e-15);
  CHECK(std::fabs(m[1 * 3 + 0] - 1.0) < 1e-15);
  CHECK(std::fabs(m[2 * 3 + 2] - 1.0) < 1e-15);
}

TEST_CASE("parameter map and inverse") {
  const ipid_theta theta = demo_theta();
  double pi[10];
  REQUIRE(ipid_params_from_theta(&theta, pi) == IPID_OK);
  CHECK(pi[0] == 2.0);
  CHECK(rel_err(pi[1], 2.0 * 0.05) < 1e-12);

  ipid_theta back{};
  REQUIRE(ipid_theta_from_params(pi, 1e-9, &back) == IPID_OK);
  double pi2[10];
  REQUIRE(ipid_params_from_theta(&back, pi2) == IPID_OK);
  for (int i = 0; i < 10; ++i) CHECK(rel_err(pi2[i], pi[i]) < 1e-9);

  // A rejected (non-rotation) orientation fails cleanly.
  ipid_theta bad = theta;
  bad.orientation[0] = 2.0;
  CHECK(ipid_params_from_theta(&bad, pi2) == IPID_ERR_INVALID_ARGUMENT);

  // Inconsistent parameters cannot be charted.
  double junk[10] = {1.0, 0, 0, 0, 1.0, 0, 0, 1.0, 0, -1.0};
  CHECK(ipid_theta_from_params(junk, 1e-9, &back) ==
        IPID_ERR_NOT_CONSISTENT);
}

TEST_CASE("consistency checks") {
  double point[10] = {1.0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
  ipid_consistency report{};
  REQUIRE(ipid_check_full_physical(point, 1e-9, &report) == IPID_OK);
  CHECK(report.fully_consistent == 1);
  CHECK(report.physical == 1);
  CHECK(report.mass_ok == 1);
  CHECK(report.tolerance == 1e-9);

  // Triangle violation: physical but not fully consistent.
  double needle[10] = {1.0, 0, 0, 0, 1.0, 0, 0, 1.0, 0, 3.0};
  REQUIRE(ipid_check_full_physical(needle, 1e-9, &report) == IPID_OK);
  CHECK(report.fully_consistent == 0);
  CHECK(report.triangle_ok == 0);
  REQUIRE(ipid_check_physical(needle, 1e-9, &report) == IPID_OK);
  CHECK(report.physical == 1);

  // Text renderings: both shapes, and a too-small buffer fails.
  char buf[2048];
  REQUIRE(ipid_consistency_format(&report, 0, buf, sizeof buf) == IPID_OK);
  CHECK(std::strstr(buf, "mass") != nullptr);
  REQUIRE(ipid_consistency_format(&report, 1, buf, sizeof buf) == IPID_OK);
  CHECK(std::strstr(buf, "fully_consistent") != nullptr);
  CHECK(ipid_consistency_format(&report, 1, buf, 4) == IPID_ERR_OUT_OF_RANGE);
}

TEST_CASE("dataset lifecycle and identification") {
  const ipid_theta theta = demo_theta();
  double pi_true[10];
  REQUIRE(ipid_params_from_theta(&theta, pi_true) == IPID_OK);

  ipid_trajectory_config traj;
  ipid_trajectory_config_init(&traj);
  CHECK(traj.waypoint_count == 13);
  CHECK(traj.sample_rate == 100.0);
  traj.waypoint_count = 11;
  traj.segment_duration = 0.5;
  traj.seed = 7;
  ipid_noise_config noise;
  ipid_noise_config_init(&noise);
  CHECK(noise.force_std == 0.0);

  ipid_dataset* data = nullptr;
  REQUIRE(ipid_dataset_generate(pi_true, &traj, &noise, &data) == IPID_OK);
  REQUIRE(data != nullptr);
  CHECK(ipid_dataset_sample_count(data) == 500);

  // CSV out and back in.
  const std::string path = tmp_file("ipid_capi_data.csv");
  REQUIRE(ipid_dataset_write_csv(data, path.c_str()) == IPID_OK);
  ipid_dataset* loaded = nullptr;
  REQUIRE(ipid_dataset_read_csv(path.c_str(), &loaded) == IPID_OK);
  CHECK(ipid_dataset_sample_count(loaded) == 500);

  // Linear identification nails the noiseless truth.
  double est[10];
  ipid_linear_info info{};
  REQUIRE(ipid_identify_linear(loaded, est, &info) == IPID_OK);
  CHECK(info.rank == 10);
  for (int i = 0; i < 10; ++i) CHECK(rel_err(est[i], pi_true[i]) < 1e-6);

  // Manifold identification does too, and the result is consistent.
  ipid_solver_config config;
  ipid_solver_config_init(&config);
  CHECK(config.max_iters == 500);
  ipid_solve_report report{};
  ipid_theta theta_est{};
  REQUIRE(ipid_identify_manifold(loaded, &config, est, &theta_est, &report) ==
          IPID_OK);
  CHECK(report.converged == 1);
  CHECK(report.wall_time_s > 0.0);
  for (int i = 0; i < 10; ++i) CHECK(rel_err(est[i], pi_true[i]) < 1e-6);
  ipid_consistency verdict{};
  REQUIRE(ipid_check_full_physical(est, 1e-9, &verdict) == IPID_OK);
  CHECK(verdict.fully_consistent == 1);

  // Result document roundtrip.
  const std::string result = tmp_file("ipid_capi_result.txt");
  REQUIRE(ipid_result_write(result.c_str(), est, "manifold", &report, nullptr,
                            &verdict) == IPID_OK);
  double est_back[10];
  REQUIRE(ipid_result_read_params(result.c_str(), est_back) == IPID_OK);
  for (int i = 0; i < 10; ++i) CHECK(est_back[i] == est[i]);

  ipid_dataset_free(loaded);
  ipid_dataset_free(data);
  std::filesystem::remove(path);
  std::filesystem::remove(result);

  // Identifying an empty dataset reports the empty set.
  const std::string empty_path = tmp_file("ipid_capi_empty.csv");
  {
    ipid_dataset* fresh = nullptr;
    ipid_trajectory_config tiny = traj;
    REQUIRE(ipid_dataset_generate(pi_true, &tiny, &noise, &fresh) == IPID_OK);
    REQUIRE(ipid_dataset_write_csv(fresh, empty_path.c_str()) == IPID_OK);
    ipid_dataset_free(fresh);
  }
  // Strip data rows, keep the header.
  {
    std::string header;
    {
      std::ifstream in(empty_path);
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
          header = line;
          break;
        }
      }
    }
    std::ofstream out(empty_path, std::ios::trunc);
    out << header << "\n";
  }
  ipid_dataset* empty = nullptr;
  REQUIRE(ipid_dataset_read_csv(empty_path.c_str(), &empty) == IPID_OK);
  CHECK(ipid_dataset_sample_count(empty) == 0);
  CHECK(ipid_identify_linear(empty, est, nullptr) == IPID_ERR_EMPTY_SET);
  ipid_dataset_free(empty);
  std::filesystem::remove(empty_path);

  // Missing files surface as IO errors.
  ipid_dataset* nothing = nullptr;
  CHECK(ipid_dataset_read_csv(tmp_file("ipid_no_such.csv").c_str(),
                              &nothing) == IPID_ERR_IO);
}

TEST_CASE("solver config file loading") {
  const std::string path = tmp_file("ipid_capi_solver.cfg");
  {
    std::ofstream out(path);
    out << "max_iters = 123\n";
    out << "grad_tol = 1e-9\n";
  }
  ipid_solver_config config;
  REQUIRE(ipid_solver_config_load(path.c_str(), &config) == IPID_OK);
  CHECK(config.max_iters == 123);
  CHECK(config.grad_tol == 1e-9);
  CHECK(config.step_tol == 1e-12);
  {
    std::ofstream out(path);
    out << "bogus = 1\n";
  }
  CHECK(ipid_solver_config_load(path.c_str(), &config) == IPID_ERR_PARSE);
  std::filesystem::remove(path);
}

TEST_CASE("reference grid through the C API") {
  REQUIRE(ipid_table1_count() == 10);
  int flagged = 0;
  for (int i = 0; i < 10; ++i) {
    ipid_table1_verdict v{};
    REQUIRE(ipid_table1_verdict_get(i, &v) == IPID_OK);
    CHECK(v.matches_reference == 1);
    CHECK(v.consistent == v.reference_consistent);
    if (!v.consistent) {
      ++flagged;
      CHECK(std::strcmp(v.method, "linear") == 0);
    }
  }
  CHECK(flagged == 2);

  ipid_table1_verdict oob{};
  CHECK(ipid_table1_verdict_get(99, &oob) == IPID_ERR_OUT_OF_RANGE);

  char buf[8192];
  REQUIRE(ipid_table1_text(buf, sizeof buf) == IPID_OK);
  CHECK(std::strstr(buf, "manifold") != nullptr);
}
