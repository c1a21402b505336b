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

#include "ipid/ipid.h"

#include "consistency.hpp"
#include "io.hpp"
#include "params.hpp"
#include "solver.hpp"
#include "spatial.hpp"
#include "table1.hpp"
#include "trajectory.hpp"

#include <cstdio>
#include <cstring>
#include <exception>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

struct ipid_dataset {
  ipid::Dataset data;
};

namespace {

thread_local std::string t_last_error;

ipid_status status_of(ipid::ErrorCode code) {
  switch (code) {
    case ipid::ErrorCode::invalid_argument:
      return IPID_ERR_INVALID_ARGUMENT;
    case ipid::ErrorCode::angle_near_pi:
      return IPID_ERR_ANGLE_NEAR_PI;
    case ipid::ErrorCode::not_symmetric:
      return IPID_ERR_NOT_SYMMETRIC;
    case ipid::ErrorCode::zero_mass:
      return IPID_ERR_ZERO_MASS;
    case ipid::ErrorCode::not_consistent:
      return IPID_ERR_NOT_CONSISTENT;
    case ipid::ErrorCode::empty_set:
      return IPID_ERR_EMPTY_SET;
    case ipid::ErrorCode::out_of_range:
      return IPID_ERR_OUT_OF_RANGE;
    case ipid::ErrorCode::io:
      return IPID_ERR_IO;
    case ipid::ErrorCode::parse:
      return IPID_ERR_PARSE;
    case ipid::ErrorCode::missing_header:
      return IPID_ERR_MISSING_HEADER;
    case ipid::ErrorCode::malformed_row:
      return IPID_ERR_MALFORMED_ROW;
  }
  return IPID_ERR_INTERNAL;
}

ipid_status fail(ipid_status status, const char* message) {
  t_last_error = message;
  return status;
}

// Clears the thread's error slot, runs the body, converts exceptions.
template <typename F>
ipid_status guarded(F&& body) {
  t_last_error.clear();
  try {
    return body();
  } catch (const ipid::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return IPID_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown failure";
    return IPID_ERR_INTERNAL;
  }
}

void matrix_to_c(const ipid::Mat3& m, double out[9]) {
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out[3 * r + c] = m(r, c);
    }
  }
}

ipid::Mat3 matrix_from_c(const double in[9]) {
  ipid::Mat3 m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      m(r, c) = in[3 * r + c];
    }
  }
  return m;
}

ipid::ThetaParams theta_from_c(const ipid_theta& t) {
  ipid::ThetaParams theta;
  theta.mass = t.mass;
  theta.com = ipid::Vec3(t.com[0], t.com[1], t.com[2]);
  theta.orientation = ipid::Rotation::from_matrix(matrix_from_c(t.orientation));
  theta.second_moments =
      ipid::Vec3(t.second_moments[0], t.second_moments[1],
                 t.second_moments[2]);
  theta.validate();
  return theta;
}

void theta_to_c(const ipid::ThetaParams& theta, ipid_theta* out) {
  out->mass = theta.mass;
  for (int i = 0; i < 3; ++i) {
    out->com[i] = theta.com(i);
    out->second_moments[i] = theta.second_moments(i);
  }
  matrix_to_c(theta.orientation.matrix(), out->orientation);
}

ipid::InertialParams params_from_c(const double pi[10]) {
  return ipid::InertialParams::from_vector(
      Eigen::Map<const ipid::Vec10>(pi));
}

void params_to_c(const ipid::InertialParams& params, double out[10]) {
  Eigen::Map<ipid::Vec10>{out} = params.to_vector();
}

void consistency_to_c(const ipid::ConsistencyReport& report,
                      ipid_consistency* out) {
  out->mass_ok = report.mass_ok ? 1 : 0;
  out->com_inertia_psd_ok = report.com_inertia_psd_ok ? 1 : 0;
  out->triangle_ok = report.triangle_ok ? 1 : 0;
  out->physical = report.physical() ? 1 : 0;
  out->fully_consistent = report.fully_consistent() ? 1 : 0;
  out->mass = report.mass;
  for (int i = 0; i < 3; ++i) {
    out->principal_moments[i] = report.principal_moments(i);
    out->second_moments[i] = report.second_moments(i);
  }
  out->min_eigenvalue = report.min_eigenvalue;
  out->worst_triangle_slack = report.worst_triangle_slack;
  out->tolerance = report.tolerance;
}

ipid::ConsistencyReport consistency_from_c(const ipid_consistency& in) {
  ipid::ConsistencyReport report;
  report.mass_ok = in.mass_ok != 0;
  report.com_inertia_psd_ok = in.com_inertia_psd_ok != 0;
  report.triangle_ok = in.triangle_ok != 0;
  report.mass = in.mass;
  report.principal_moments = ipid::Vec3(
      in.principal_moments[0], in.principal_moments[1],
      in.principal_moments[2]);
  report.second_moments = ipid::Vec3(
      in.second_moments[0], in.second_moments[1], in.second_moments[2]);
  report.min_eigenvalue = in.min_eigenvalue;
  report.worst_triangle_slack = in.worst_triangle_slack;
  report.tolerance = in.tolerance;
  return report;
}

ipid::SolverConfig solver_config_from_c(const ipid_solver_config* config) {
  ipid::SolverConfig out;
  if (config == nullptr) {
    return out;
  }
  out.max_iters = config->max_iters;
  out.grad_tol = config->grad_tol;
  out.step_tol = config->step_tol;
  out.damping0 = config->damping0;
  out.mass_floor = config->mass_floor;
  out.moment_floor = config->moment_floor;
  out.seed = config->seed;
  return out;
}

void solver_config_to_c(const ipid::SolverConfig& config,
                        ipid_solver_config* out) {
  out->max_iters = config.max_iters;
  out->grad_tol = config.grad_tol;
  out->step_tol = config.step_tol;
  out->damping0 = config.damping0;
  out->mass_floor = config.mass_floor;
  out->moment_floor = config.moment_floor;
  out->seed = config.seed;
}

ipid_status copy_text(const std::string& text, char* buf, size_t cap) {
  if (cap < text.size() + 1) {
    return fail(IPID_ERR_OUT_OF_RANGE, "buffer too small");
  }
  std::memcpy(buf, text.c_str(), text.size() + 1);
  return IPID_OK;
}

}  // namespace

extern "C" {

const char* ipid_version(void) { return "0.1.0"; }

const char* ipid_last_error(void) { return t_last_error.c_str(); }

void ipid_trajectory_config_init(ipid_trajectory_config* config) {
  if (config == nullptr) {
    return;
  }
  const ipid::TrajectoryConfig defaults;
  config->waypoint_count = defaults.waypoint_count;
  config->segment_duration = defaults.segment_duration;
  config->sample_rate = defaults.sample_rate;
  config->orientation_spread = defaults.orientation_spread;
  config->position_spread = defaults.position_spread;
  for (int i = 0; i < 3; ++i) {
    config->gravity[i] = defaults.gravity(i);
  }
  config->seed = defaults.seed;
}

void ipid_noise_config_init(ipid_noise_config* config) {
  if (config == nullptr) {
    return;
  }
  const ipid::NoiseConfig defaults;
  config->force_std = defaults.force_std;
  config->moment_std = defaults.moment_std;
  config->seed = defaults.seed;
}

void ipid_solver_config_init(ipid_solver_config* config) {
  if (config == nullptr) {
    return;
  }
  solver_config_to_c(ipid::SolverConfig{}, config);
}

ipid_status ipid_solver_config_load(const char* path,
                                    ipid_solver_config* out) {
  if (path == nullptr || out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    solver_config_to_c(ipid::read_solver_config(path), out);
    return IPID_OK;
  });
}

ipid_status ipid_so3_exp(const double omega[3], double out_matrix[9]) {
  if (omega == nullptr || out_matrix == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const ipid::Vec3 w(omega[0], omega[1], omega[2]);
    if (!w.allFinite()) {
      throw ipid::Error(ipid::ErrorCode::invalid_argument,
                        "rotation vector has non-finite entries");
    }
    matrix_to_c(ipid::so3_exp(w).matrix(), out_matrix);
    return IPID_OK;
  });
}

ipid_status ipid_params_from_theta(const ipid_theta* theta,
                                   double out_pi[10]) {
  if (theta == nullptr || out_pi == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    params_to_c(ipid::params_from_theta(theta_from_c(*theta)), out_pi);
    return IPID_OK;
  });
}

ipid_status ipid_theta_from_params(const double pi[10], double tol,
                                   ipid_theta* out) {
  if (pi == nullptr || out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    theta_to_c(ipid::theta_from_params(params_from_c(pi), tol), out);
    return IPID_OK;
  });
}

ipid_status ipid_check_physical(const double pi[10], double tol,
                                ipid_consistency* out) {
  if (pi == nullptr || out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    consistency_to_c(ipid::check_physical(params_from_c(pi), tol).second,
                     out);
    return IPID_OK;
  });
}

ipid_status ipid_check_full_physical(const double pi[10], double tol,
                                     ipid_consistency* out) {
  if (pi == nullptr || out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    consistency_to_c(
        ipid::check_full_physical(params_from_c(pi), tol).second, out);
    return IPID_OK;
  });
}

ipid_status ipid_consistency_format(const ipid_consistency* report,
                                    int as_key_values, char* buf,
                                    size_t cap) {
  if (report == nullptr || buf == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const ipid::ConsistencyReport core = consistency_from_c(*report);
    const std::string text =
        as_key_values != 0 ? ipid::to_key_values(core) : ipid::to_text(core);
    return copy_text(text, buf, cap);
  });
}

ipid_status ipid_dataset_generate(const double pi_true[10],
                                  const ipid_trajectory_config* trajectory,
                                  const ipid_noise_config* noise,
                                  ipid_dataset** out) {
  if (pi_true == nullptr || trajectory == nullptr || noise == nullptr ||
      out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    ipid::TrajectoryConfig traj;
    traj.waypoint_count = trajectory->waypoint_count;
    traj.segment_duration = trajectory->segment_duration;
    traj.sample_rate = trajectory->sample_rate;
    traj.orientation_spread = trajectory->orientation_spread;
    traj.position_spread = trajectory->position_spread;
    traj.gravity = ipid::Vec3(trajectory->gravity[0], trajectory->gravity[1],
                              trajectory->gravity[2]);
    traj.seed = trajectory->seed;
    ipid::NoiseConfig noise_cfg;
    noise_cfg.force_std = noise->force_std;
    noise_cfg.moment_std = noise->moment_std;
    noise_cfg.seed = noise->seed;
    auto handle = std::make_unique<ipid_dataset>();
    handle->data = ipid::gen_dataset(params_from_c(pi_true), traj, noise_cfg);
    *out = handle.release();
    return IPID_OK;
  });
}

ipid_status ipid_dataset_read_csv(const char* path, ipid_dataset** out) {
  if (path == nullptr || out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    auto handle = std::make_unique<ipid_dataset>();
    handle->data = ipid::read_csv(path);
    *out = handle.release();
    return IPID_OK;
  });
}

ipid_status ipid_dataset_write_csv(const ipid_dataset* dataset,
                                   const char* path) {
  if (dataset == nullptr || path == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    ipid::write_csv(dataset->data, path);
    return IPID_OK;
  });
}

long long ipid_dataset_sample_count(const ipid_dataset* dataset) {
  if (dataset == nullptr) {
    return -1;
  }
  return static_cast<long long>(dataset->data.samples.size());
}

void ipid_dataset_free(ipid_dataset* dataset) { delete dataset; }

ipid_status ipid_identify_linear(const ipid_dataset* dataset,
                                 double out_pi[10], ipid_linear_info* info) {
  if (dataset == nullptr || out_pi == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const ipid::StackedSystem system = ipid::stack(dataset->data.samples);
    ipid::LinearSolveInfo core_info;
    const ipid::InertialParams pi = ipid::solve_linear(system, &core_info);
    params_to_c(pi, out_pi);
    if (info != nullptr) {
      info->rank = core_info.rank;
      info->cond = core_info.cond;
      for (int i = 0; i < 10; ++i) {
        info->singular_values[i] = core_info.singular_values(i);
      }
    }
    return IPID_OK;
  });
}

ipid_status ipid_identify_manifold(const ipid_dataset* dataset,
                                   const ipid_solver_config* config,
                                   double out_pi[10], ipid_theta* out_theta,
                                   ipid_solve_report* report) {
  if (dataset == nullptr || out_pi == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const ipid::StackedSystem system = ipid::stack(dataset->data.samples);
    const ipid::SolverConfig cfg = solver_config_from_c(config);
    const ipid::ThetaParams theta0 =
        ipid::initial_guess(system, cfg.mass_floor, cfg.moment_floor);
    const auto [theta, core_report] =
        ipid::solve_manifold(system, theta0, cfg);
    params_to_c(ipid::params_from_theta(theta), out_pi);
    if (out_theta != nullptr) {
      theta_to_c(theta, out_theta);
    }
    if (report != nullptr) {
      report->iterations = core_report.iterations;
      report->objective = core_report.objective;
      report->optimality = core_report.optimality;
      report->converged = core_report.converged ? 1 : 0;
      report->wall_time_s = core_report.wall_time_s;
    }
    return IPID_OK;
  });
}

ipid_status ipid_result_write(const char* path, const double pi[10],
                              const char* method,
                              const ipid_solve_report* report,
                              const ipid_linear_info* info,
                              const ipid_consistency* consistency) {
  if (path == nullptr || pi == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    std::vector<std::pair<std::string, std::string>> pairs =
        ipid::params_to_key_values(params_from_c(pi));
    if (method != nullptr) {
      pairs.emplace_back("method", method);
    }
    if (report != nullptr) {
      pairs.emplace_back("iterations", std::to_string(report->iterations));
      pairs.emplace_back("objective", ipid::format_double(report->objective));
      pairs.emplace_back("optimality",
                         ipid::format_double(report->optimality));
      pairs.emplace_back("converged", report->converged ? "1" : "0");
      pairs.emplace_back("wall_time_s",
                         ipid::format_double(report->wall_time_s));
    }
    if (info != nullptr) {
      pairs.emplace_back("rank", std::to_string(info->rank));
      pairs.emplace_back("cond", ipid::format_double(info->cond));
      std::string values;
      for (int i = 0; i < 10; ++i) {
        if (i > 0) {
          values += ' ';
        }
        values += ipid::format_double(info->singular_values[i]);
      }
      pairs.emplace_back("singular_values", values);
    }
    if (consistency != nullptr) {
      for (auto& [key, value] : [&] {
             std::vector<std::pair<std::string, std::string>> kv;
             std::istringstream lines(
                 ipid::to_key_values(consistency_from_c(*consistency)));
             std::string line;
             while (std::getline(lines, line)) {
               const size_t eq = line.find('=');
               if (eq != std::string::npos) {
                 kv.emplace_back(line.substr(0, eq - 1),
                                 line.substr(eq + 2));
               }
             }
             return kv;
           }()) {
        pairs.emplace_back(std::move(key), std::move(value));
      }
    }
    ipid::write_key_values(pairs, path);
    return IPID_OK;
  });
}

ipid_status ipid_result_read_params(const char* path, double out_pi[10]) {
  if (path == nullptr || out_pi == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    params_to_c(ipid::params_from_key_values(ipid::read_key_values(path)),
                out_pi);
    return IPID_OK;
  });
}

int ipid_table1_count(void) {
  return static_cast<int>(ipid::table1_rows().size());
}

ipid_status ipid_table1_verdict_get(int index, ipid_table1_verdict* out) {
  if (out == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  if (index < 0 || index >= ipid_table1_count()) {
    return fail(IPID_ERR_OUT_OF_RANGE, "fixture index out of range");
  }
  return guarded([&] {
    const std::vector<ipid::Table1Verdict> verdicts = ipid::run_table1();
    const ipid::Table1Verdict& v = verdicts[static_cast<size_t>(index)];
    std::snprintf(out->segment, sizeof(out->segment), "%s", v.row.segment);
    std::snprintf(out->method, sizeof(out->method), "%s", v.row.method);
    Eigen::Map<ipid::Vec10>{out->values} = v.row.values;
    out->reference_consistent = v.row.reference_consistent ? 1 : 0;
    out->consistent = v.consistent ? 1 : 0;
    out->strict_consistent = v.strict_consistent ? 1 : 0;
    out->matches_reference = v.matches_reference ? 1 : 0;
    out->violation = v.violation;
    return IPID_OK;
  });
}

ipid_status ipid_table1_text(char* buf, size_t cap) {
  if (buf == nullptr) {
    return fail(IPID_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded(
      [&] { return copy_text(ipid::table1_to_text(ipid::run_table1()), buf,
                             cap); });
}

}  // extern "C"
