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

// Command line front end; links the shared C API only.

#include <ipid/ipid.h>

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

namespace {

// Prints the library's error message; returns the CLI failure exit code.
int report_failure() {
  std::fprintf(stderr, "error: %s\n", ipid_last_error());
  return 1;
}

struct SimulateArgs {
  double mass = 0.0;
  std::vector<double> com;
  std::vector<double> inertia;
  std::vector<double> theta;
  double segment_time = 0.5;
  double duration = 60.0;
  double rate = 100.0;
  double orientation_spread = -1.0;  // <0 keeps the library default
  double position_spread = -1.0;
  std::vector<double> gravity;
  double noise_f = 0.0;
  double noise_mu = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t noise_seed = 0;
  bool noise_seed_set = false;
  std::string out;
};

int run_simulate(const SimulateArgs& args, bool theta_given) {
  double pi[10] = {};
  if (theta_given) {
    if (args.theta.size() != 10) {
      std::fprintf(stderr,
                   "error: --theta needs 10 values "
                   "m,cx,cy,cz,rx,ry,rz,lx,ly,lz\n");
      return 1;
    }
    ipid_theta theta{};
    theta.mass = args.theta[0];
    for (int i = 0; i < 3; ++i) {
      theta.com[i] = args.theta[1 + static_cast<size_t>(i)];
      theta.second_moments[i] = args.theta[7 + static_cast<size_t>(i)];
    }
    const double rotvec[3] = {args.theta[4], args.theta[5], args.theta[6]};
    if (ipid_so3_exp(rotvec, theta.orientation) != IPID_OK) {
      return report_failure();
    }
    if (ipid_params_from_theta(&theta, pi) != IPID_OK) {
      return report_failure();
    }
  } else {
    if (args.com.size() != 3 || args.inertia.size() != 6) {
      std::fprintf(stderr,
                   "error: --com needs 3 values and --inertia needs 6\n");
      return 1;
    }
    pi[0] = args.mass;
    for (size_t i = 0; i < 3; ++i) {
      pi[1 + i] = args.mass * args.com[i];
    }
    for (size_t i = 0; i < 6; ++i) {
      pi[4 + i] = args.inertia[i];
    }
  }

  ipid_trajectory_config traj;
  ipid_trajectory_config_init(&traj);
  const double segments = args.duration / args.segment_time;
  traj.waypoint_count = static_cast<int>(segments + 0.5) + 1;
  traj.segment_duration = args.segment_time;
  traj.sample_rate = args.rate;
  if (args.orientation_spread >= 0.0) {
    traj.orientation_spread = args.orientation_spread;
  }
  if (args.position_spread >= 0.0) {
    traj.position_spread = args.position_spread;
  }
  if (!args.gravity.empty()) {
    if (args.gravity.size() != 3) {
      std::fprintf(stderr, "error: --gravity needs 3 values\n");
      return 1;
    }
    for (size_t i = 0; i < 3; ++i) {
      traj.gravity[i] = args.gravity[i];
    }
  }
  traj.seed = args.seed;

  ipid_noise_config noise;
  ipid_noise_config_init(&noise);
  noise.force_std = args.noise_f;
  noise.moment_std = args.noise_mu;
  noise.seed = args.noise_seed_set ? args.noise_seed : args.seed + 1;

  ipid_dataset* dataset = nullptr;
  if (ipid_dataset_generate(pi, &traj, &noise, &dataset) != IPID_OK) {
    return report_failure();
  }
  const long long count = ipid_dataset_sample_count(dataset);
  const ipid_status write_status = ipid_dataset_write_csv(dataset, args.out.c_str());
  ipid_dataset_free(dataset);
  if (write_status != IPID_OK) {
    return report_failure();
  }
  const std::string truth_path = args.out + ".truth";
  if (ipid_result_write(truth_path.c_str(), pi, "ground_truth", nullptr,
                        nullptr, nullptr) != IPID_OK) {
    return report_failure();
  }
  std::printf("wrote %lld samples to %s (ground truth: %s)\n", count,
              args.out.c_str(), truth_path.c_str());
  return 0;
}

struct IdentifyArgs {
  std::string in;
  std::string method;
  std::string config;
  std::string out;
  double tol = 1e-9;
};

int run_identify(const IdentifyArgs& args) {
  ipid_dataset* dataset = nullptr;
  if (ipid_dataset_read_csv(args.in.c_str(), &dataset) != IPID_OK) {
    return report_failure();
  }

  double pi[10] = {};
  ipid_solve_report report{};
  ipid_linear_info info{};
  ipid_status status = IPID_OK;
  if (args.method == "linear") {
    status = ipid_identify_linear(dataset, pi, &info);
  } else {
    ipid_solver_config config;
    ipid_solver_config_init(&config);
    if (!args.config.empty() &&
        ipid_solver_config_load(args.config.c_str(), &config) != IPID_OK) {
      ipid_dataset_free(dataset);
      return report_failure();
    }
    status = ipid_identify_manifold(dataset, &config, pi, nullptr, &report);
  }
  ipid_dataset_free(dataset);
  if (status != IPID_OK) {
    return report_failure();
  }

  ipid_consistency consistency{};
  if (ipid_check_full_physical(pi, args.tol, &consistency) != IPID_OK) {
    return report_failure();
  }
  if (ipid_result_write(args.out.c_str(), pi, args.method.c_str(),
                        args.method == "manifold" ? &report : nullptr,
                        args.method == "linear" ? &info : nullptr,
                        &consistency) != IPID_OK) {
    return report_failure();
  }
  if (args.method == "manifold") {
    std::printf(
        "wrote %s (iterations %d, objective %.6g, wall time %.3f s, fully "
        "consistent: %s)\n",
        args.out.c_str(), report.iterations, report.objective,
        report.wall_time_s, consistency.fully_consistent ? "yes" : "NO");
  } else {
    std::printf("wrote %s (rank %d, cond %.6g, fully consistent: %s)\n",
                args.out.c_str(), info.rank, info.cond,
                consistency.fully_consistent ? "yes" : "NO");
  }
  return 0;
}

struct CheckArgs {
  std::string params;
  std::vector<double> values;
  double tol = 1e-9;
};

int run_check(const CheckArgs& args) {
  double pi[10] = {};
  if (!args.params.empty()) {
    if (ipid_result_read_params(args.params.c_str(), pi) != IPID_OK) {
      return report_failure();
    }
  } else {
    if (args.values.size() != 10) {
      std::fprintf(stderr,
                   "error: --values needs 10 values "
                   "m,mcx,mcy,mcz,ixx,ixy,ixz,iyy,iyz,izz\n");
      return 1;
    }
    for (size_t i = 0; i < 10; ++i) {
      pi[i] = args.values[i];
    }
  }
  ipid_consistency report{};
  if (ipid_check_full_physical(pi, args.tol, &report) != IPID_OK) {
    return report_failure();
  }
  char text[4096];
  if (ipid_consistency_format(&report, 0, text, sizeof(text)) != IPID_OK) {
    return report_failure();
  }
  std::fputs(text, stdout);
  return report.fully_consistent ? 0 : 2;
}

int run_table1() {
  char text[8192];
  if (ipid_table1_text(text, sizeof(text)) != IPID_OK) {
    return report_failure();
  }
  std::fputs(text, stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rigid-body inertial parameter identification"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "generate a synthetic wrench/motion dataset");
  CLI::Option* opt_mass =
      simulate->add_option("--mass", sim.mass, "body mass (kg)");
  CLI::Option* opt_com =
      simulate->add_option("--com", sim.com, "center of mass x,y,z (m)")
          ->delimiter(',');
  CLI::Option* opt_inertia =
      simulate
          ->add_option("--inertia", sim.inertia,
                       "body inertia ixx,ixy,ixz,iyy,iyz,izz (kg*m^2)")
          ->delimiter(',');
  CLI::Option* opt_theta =
      simulate
          ->add_option("--theta", sim.theta,
                       "manifold point m,cx,cy,cz,rx,ry,rz,lx,ly,lz "
                       "(rotation vector rx,ry,rz)")
          ->delimiter(',');
  opt_theta->excludes(opt_mass)->excludes(opt_com)->excludes(opt_inertia);
  opt_mass->needs(opt_com)->needs(opt_inertia);
  simulate->add_option("--segment-time", sim.segment_time,
                       "waypoint-to-waypoint duration (s)");
  simulate->add_option("--duration", sim.duration, "total duration (s)");
  simulate->add_option("--rate", sim.rate, "sample rate (Hz)");
  simulate->add_option("--orientation-spread", sim.orientation_spread,
                       "per-axis orientation step between waypoints (rad)");
  simulate->add_option("--position-spread", sim.position_spread,
                       "waypoint position box half-width (m)");
  simulate->add_option("--gravity", sim.gravity, "gravity gx,gy,gz (m/s^2)")
      ->delimiter(',');
  simulate->add_option("--noise-f", sim.noise_f, "force noise std (N)");
  simulate->add_option("--noise-mu", sim.noise_mu, "moment noise std (N*m)");
  simulate->add_option("--seed", sim.seed, "trajectory seed");
  CLI::Option* opt_noise_seed = simulate->add_option(
      "--noise-seed", sim.noise_seed, "wrench noise seed (default: seed+1)");
  simulate->add_option("--out", sim.out, "output CSV path")->required();

  IdentifyArgs ident;
  CLI::App* identify = app.add_subcommand(
      "identify", "estimate the 10 inertial parameters from a dataset");
  identify->add_option("--in", ident.in, "input CSV path")->required();
  identify
      ->add_option("--method", ident.method,
                   "linear (unconstrained) or manifold (fully consistent)")
      ->required()
      ->check(CLI::IsMember({"linear", "manifold"}));
  identify->add_option("--config", ident.config,
                       "solver settings key-value file");
  identify->add_option("--tol", ident.tol,
                       "consistency tolerance for the written report");
  identify->add_option("--out", ident.out, "result document path")
      ->required();

  CheckArgs chk;
  CLI::App* check = app.add_subcommand(
      "check", "report physical consistency of a parameter set");
  CLI::Option* opt_params = check->add_option(
      "--params", chk.params, "result document to read parameters from");
  CLI::Option* opt_values =
      check
          ->add_option("--values", chk.values,
                       "m,mcx,mcy,mcz,ixx,ixy,ixz,iyy,iyz,izz")
          ->delimiter(',');
  opt_params->excludes(opt_values);
  check->add_option("--tol", chk.tol, "consistency tolerance");

  std::string fixtures = "builtin";
  CLI::App* table1 = app.add_subcommand(
      "table1", "run the consistency checker over the built-in reference "
                "grid");
  table1->add_option("--fixtures", fixtures, "fixture set to run")
      ->check(CLI::IsMember({"builtin"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (simulate->parsed()) {
    const bool theta_given = opt_theta->count() > 0;
    if (!theta_given && opt_mass->count() == 0) {
      std::fprintf(stderr,
                   "error: simulate needs --mass/--com/--inertia or "
                   "--theta\n");
      return 1;
    }
    sim.noise_seed_set = opt_noise_seed->count() > 0;
    return run_simulate(sim, theta_given);
  }
  if (identify->parsed()) {
    return run_identify(ident);
  }
  if (check->parsed()) {
    if (opt_params->count() == 0 && opt_values->count() == 0) {
      std::fprintf(stderr, "error: check needs --params or --values\n");
      return 1;
    }
    return run_check(chk);
  }
  if (table1->parsed()) {
    return run_table1();
  }
  return 1;
}
