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

#include "io.hpp"
#include "solver.hpp"
#include "support.hpp"
#include "trajectory.hpp"

#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace ipid;

namespace {

constexpr const char* kHeaderLine =
    "t,v_lin_x,v_lin_y,v_lin_z,v_ang_x,v_ang_y,v_ang_z,"
    "ag_lin_x,ag_lin_y,ag_lin_z,ag_ang_x,ag_ang_y,ag_ang_z,"
    "f_x,f_y,f_z,mu_x,mu_y,mu_z";

std::filesystem::path tmp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

InertialParams bench_params() {
  ThetaParams theta;
  theta.mass = 1.5;
  theta.com = Vec3(0.04, -0.02, 0.08);
  theta.orientation = so3_exp(Vec3(0.2, 0.4, -0.3));
  theta.second_moments = Vec3(0.03, 0.02, 0.04);
  return params_from_theta(theta);
}

}  // namespace

TEST_CASE("timing profile") {
  const MinJerk at_start = min_jerk_scalar(0.0, 2.0);
  CHECK(at_start.s == 0.0);
  CHECK(at_start.ds == 0.0);
  CHECK(at_start.dds == 0.0);

  const MinJerk at_end = min_jerk_scalar(2.0, 2.0);
  CHECK(at_end.s == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(at_end.ds) < 1e-15);
  CHECK(std::abs(at_end.dds) < 1e-14);

  const MinJerk mid = min_jerk_scalar(1.0, 2.0);
  CHECK(mid.s == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS((void)min_jerk_scalar(-0.1, 2.0), Error);
  CHECK_THROWS_AS((void)min_jerk_scalar(2.1, 2.0), Error);
  CHECK_THROWS_AS((void)min_jerk_scalar(0.0, 0.0), Error);

  // ds is the derivative of s: its midpoint-rule integral recovers s(T).
  const double total = 2.0;
  const int n = 100000;
  double integral = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * total / n;
    integral += min_jerk_scalar(t, total).ds * total / n;
  }
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-8));

  // Same for dds against ds at an interior point pair.
  double dint = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = (i + 0.5) * total / n;
    dint += min_jerk_scalar(t, total).dds * total / n;
  }
  CHECK(std::abs(dint) < 1e-8);
}

TEST_CASE("zero spread means a static dataset") {
  const InertialParams pi = bench_params();
  TrajectoryConfig traj;
  traj.waypoint_count = 3;
  traj.segment_duration = 1.0;
  traj.sample_rate = 50.0;
  traj.orientation_spread = 0.0;
  traj.position_spread = 0.0;
  traj.seed = 3;
  const Dataset data = gen_dataset(pi, traj, NoiseConfig{});
  REQUIRE(!data.samples.empty());

  // The body rests in the world frame; the wrench is the weight reaction.
  ProperAcc grav;
  grav.linear = -traj.gravity;  // identity orientation throughout
  const Wrench expect = newton_euler_wrench(pi, grav, Twist{});
  for (const Sample& s : data.samples) {
    CHECK(s.v.to_vector().norm() == 0.0);
    CHECK(s.a.angular.norm() == 0.0);
    CHECK((s.a.linear - grav.linear).norm() < 1e-12);
    CHECK((s.f.to_vector() - expect.to_vector()).lpNorm<Eigen::Infinity>() <
          1e-12);
  }

  CHECK(data.ground_truth.has_value());
  CHECK((data.ground_truth->to_vector() - pi.to_vector()).norm() == 0.0);
  CHECK(!data.provenance.empty());
}

TEST_CASE("sample count and timing grid") {
  TrajectoryConfig traj;
  traj.waypoint_count = 5;
  traj.segment_duration = 0.5;
  traj.sample_rate = 100.0;
  traj.seed = 4;
  const Dataset data = gen_dataset(bench_params(), traj, NoiseConfig{});
  // Four segments of 0.5 s at 100 Hz.
  REQUIRE(data.samples.size() == 200);
  CHECK(data.samples.front().t == 0.0);
  CHECK(data.samples[1].t == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(data.samples.back().t == doctest::Approx(1.99).epsilon(1e-12));
}

TEST_CASE("generation is deterministic") {
  const InertialParams pi = bench_params();
  TrajectoryConfig traj;
  traj.waypoint_count = 4;
  traj.segment_duration = 0.5;
  traj.sample_rate = 100.0;
  traj.seed = 42;
  NoiseConfig noise;
  noise.force_std = 0.05;
  noise.moment_std = 0.005;
  noise.seed = 43;

  const Dataset a = gen_dataset(pi, traj, noise);
  const Dataset b = gen_dataset(pi, traj, noise);
  REQUIRE(a.samples.size() == b.samples.size());

  const auto pa = tmp_path("ipid_det_a.csv");
  const auto pb = tmp_path("ipid_det_b.csv");
  write_csv(a, pa.string());
  write_csv(b, pb.string());
  std::ifstream fa(pa, std::ios::binary), fb(pb, std::ios::binary);
  const std::string ca((std::istreambuf_iterator<char>(fa)),
                       std::istreambuf_iterator<char>());
  const std::string cb((std::istreambuf_iterator<char>(fb)),
                       std::istreambuf_iterator<char>());
  CHECK(ca == cb);
  CHECK(!ca.empty());
  std::filesystem::remove(pa);
  std::filesystem::remove(pb);

  // A different noise seed changes the wrench but not the motion.
  NoiseConfig other = noise;
  other.seed = 99;
  const Dataset c = gen_dataset(pi, traj, other);
  REQUIRE(c.samples.size() == a.samples.size());
  bool wrench_differs = false;
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK((a.samples[i].v.to_vector() - c.samples[i].v.to_vector()).norm() ==
          0.0);
    CHECK((a.samples[i].a.to_vector() - c.samples[i].a.to_vector()).norm() ==
          0.0);
    if ((a.samples[i].f.to_vector() - c.samples[i].f.to_vector()).norm() >
        0.0) {
      wrench_differs = true;
    }
  }
  CHECK(wrench_differs);
}

TEST_CASE("sampled kinematics are self consistent") {
  // With zero gravity the proper acceleration is the time derivative of
  // the body twist, so central differences of v must reproduce a.
  const InertialParams pi = bench_params();
  TrajectoryConfig traj;
  traj.waypoint_count = 5;
  traj.segment_duration = 1.0;
  traj.sample_rate = 400.0;
  traj.gravity = Vec3::Zero();
  traj.seed = 6;
  const Dataset data = gen_dataset(pi, traj, NoiseConfig{});
  const auto& s = data.samples;
  REQUIRE(s.size() > 10);

  double max_a = 1.0;
  for (const Sample& smp : s) {
    max_a = std::max(max_a, smp.a.to_vector().lpNorm<Eigen::Infinity>());
  }

  const double h = 1.0 / traj.sample_rate;
  const double total = traj.segment_duration;
  int checked = 0;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    // Skip the stencil across segment boundaries where jerk jumps.
    const int seg_lo = static_cast<int>((i - 1) * h / total);
    const int seg_hi = static_cast<int>((i + 1) * h / total);
    if (seg_lo != seg_hi) continue;
    const Vec6 fd =
        (s[i + 1].v.to_vector() - s[i - 1].v.to_vector()) / (2.0 * h);
    const double err =
        (fd - s[i].a.to_vector()).lpNorm<Eigen::Infinity>() / max_a;
    CHECK(err < 1e-4);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("wrench power integrates to kinetic energy") {
  // Gravity-free, noise-free: f' v dt accumulated over a segment equals
  // the change in (1/2) v' M v within 0.1% of the segment's peak energy.
  const InertialParams pi = bench_params();
  const Mat6 m = spatial_inertia_from_params(pi).matrix();
  TrajectoryConfig traj;
  traj.waypoint_count = 4;
  traj.segment_duration = 1.0;
  traj.sample_rate = 200.0;
  traj.gravity = Vec3::Zero();
  traj.seed = 8;
  const Dataset data = gen_dataset(pi, traj, NoiseConfig{});
  const auto& s = data.samples;
  const int per_segment =
      static_cast<int>(traj.segment_duration * traj.sample_rate);
  const double h = 1.0 / traj.sample_rate;

  for (int seg = 0; seg < traj.waypoint_count - 1; ++seg) {
    const int begin = seg * per_segment;
    const int end = std::min<int>(begin + per_segment,
                                  static_cast<int>(s.size()) - 1);
    auto energy = [&](int i) {
      const Vec6 v = s[i].v.to_vector();
      return 0.5 * v.dot(m * v);
    };
    auto power = [&](int i) {
      return s[i].f.to_vector().dot(s[i].v.to_vector());
    };
    double peak = 0.0;
    for (int i = begin; i <= end; ++i) peak = std::max(peak, energy(i));
    REQUIRE(peak > 0.0);

    double work = 0.0;
    for (int i = begin; i < end; ++i) {
      work += 0.5 * (power(i) + power(i + 1)) * h;
      const double delta = energy(i + 1) - energy(begin);
      CHECK(std::abs(work - delta) < 1e-3 * peak);
    }
  }
}

TEST_CASE("slow segments degrade the conditioning") {
  const InertialParams pi = bench_params();
  TrajectoryConfig fast;
  fast.waypoint_count = 7;
  fast.segment_duration = 0.5;
  fast.sample_rate = 50.0;
  fast.seed = 17;
  TrajectoryConfig slow = fast;
  slow.segment_duration = 10.0;

  LinearSolveInfo fast_info, slow_info;
  (void)solve_linear(stack(gen_dataset(pi, fast, NoiseConfig{}).samples),
                     &fast_info);
  (void)solve_linear(stack(gen_dataset(pi, slow, NoiseConfig{}).samples),
                     &slow_info);
  CHECK(fast_info.rank == 10);
  // Condition number of the normal equations grows at least a hundredfold,
  // i.e. tenfold on the stacked matrix itself.
  CHECK(slow_info.cond > 10.0 * fast_info.cond);
}

TEST_CASE("trajectory config validation") {
  TrajectoryConfig bad;
  bad.waypoint_count = 1;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = TrajectoryConfig{};
  bad.segment_duration = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = TrajectoryConfig{};
  bad.sample_rate = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = TrajectoryConfig{};
  bad.orientation_spread = 10.0;  // beyond the log injectivity cap
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = TrajectoryConfig{};
  bad.position_spread = -0.1;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_NOTHROW(TrajectoryConfig{}.validate());

  // Negative noise deviations are rejected at generation time.
  NoiseConfig noise;
  noise.force_std = -1.0;
  CHECK_THROWS_AS((void)gen_dataset(bench_params(), TrajectoryConfig{}, noise),
                  Error);
}

TEST_CASE("csv roundtrip is bitwise") {
  const InertialParams pi = bench_params();
  TrajectoryConfig traj;
  traj.waypoint_count = 3;
  traj.segment_duration = 0.5;
  traj.sample_rate = 100.0;
  traj.seed = 20;
  NoiseConfig noise;
  noise.force_std = 0.05;
  noise.moment_std = 0.005;
  noise.seed = 21;
  const Dataset data = gen_dataset(pi, traj, noise);

  const auto path = tmp_path("ipid_roundtrip.csv");
  write_csv(data, path.string());
  const Dataset back = read_csv(path.string());
  std::filesystem::remove(path);

  REQUIRE(back.samples.size() == data.samples.size());
  for (std::size_t i = 0; i < data.samples.size(); ++i) {
    CHECK(back.samples[i].t == data.samples[i].t);
    CHECK((data.samples[i].v.to_vector() - back.samples[i].v.to_vector())
              .norm() == 0.0);
    CHECK((data.samples[i].a.to_vector() - back.samples[i].a.to_vector())
              .norm() == 0.0);
    CHECK((data.samples[i].f.to_vector() - back.samples[i].f.to_vector())
              .norm() == 0.0);
  }
  // The CSV carries samples only.
  CHECK(!back.ground_truth.has_value());
}

TEST_CASE("csv error reporting") {
  const auto path = tmp_path("ipid_bad.csv");

  {
    std::ofstream out(path);
    out << "time,stuff\n";
  }
  bool threw = false;
  try {
    (void)read_csv(path.string());
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::missing_header);
  }
  CHECK(threw);

  {
    std::ofstream out(path);
    out << kHeaderLine << "\n";
    out << "0";
    for (int i = 0; i < 18; ++i) out << ",0";
    out << "\n";
    // Line 3: one field short.
    out << "0.01";
    for (int i = 0; i < 17; ++i) out << ",0";
    out << "\n";
  }
  threw = false;
  try {
    (void)read_csv(path.string());
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::malformed_row);
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  CHECK(threw);

  {
    std::ofstream out(path);
    out << "# comment first\n";
    out << kHeaderLine << "\n";
  }
  const Dataset empty = read_csv(path.string());
  CHECK(empty.samples.empty());
  CHECK_THROWS_AS((void)stack(empty.samples), Error);

  std::filesystem::remove(path);
  CHECK_THROWS_AS((void)read_csv(path.string()), Error);
}

TEST_CASE("key value documents") {
  const auto path = tmp_path("ipid_kv.txt");
  const InertialParams pi = bench_params();
  write_key_values(params_to_key_values(pi), path.string());
  const InertialParams back = params_from_key_values(
      read_key_values(path.string()));
  CHECK((back.to_vector() - pi.to_vector()).norm() == 0.0);

  // Extra keys are fine; missing ones are not.
  auto pairs = params_to_key_values(pi);
  pairs.emplace_back("note", "hello");
  CHECK_NOTHROW((void)params_from_key_values(pairs));
  pairs.erase(pairs.begin());  // drop "m"
  CHECK_THROWS_AS((void)params_from_key_values(pairs), Error);

  std::filesystem::remove(path);
}

TEST_CASE("solver config file") {
  const auto path = tmp_path("ipid_solver.cfg");
  {
    std::ofstream out(path);
    out << "# tuned for the bench rig\n";
    out << "max_iters = 250\n";
    out << "grad_tol = 1e-8\n";
    out << "damping0 = 1e-5\n";
    out << "seed = 7\n";
  }
  const SolverConfig config = read_solver_config(path.string());
  CHECK(config.max_iters == 250);
  CHECK(config.grad_tol == 1e-8);
  CHECK(config.damping0 == 1e-5);
  CHECK(config.seed == 7);
  // Unset keys keep their defaults.
  CHECK(config.step_tol == 1e-12);
  CHECK(config.mass_floor == 1e-9);

  {
    std::ofstream out(path);
    out << "max_iter = 250\n";  // typo
  }
  bool threw = false;
  try {
    (void)read_solver_config(path.string());
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == ErrorCode::parse);
  }
  CHECK(threw);

  {
    std::ofstream out(path);
    out << "max_iters = 0\n";
  }
  CHECK_THROWS_AS((void)read_solver_config(path.string()), Error);

  {
    std::ofstream out(path);
    out << "grad_tol = banana\n";
  }
  CHECK_THROWS_AS((void)read_solver_config(path.string()), Error);

  std::filesystem::remove(path);
}

TEST_CASE("number formatting roundtrips") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 200; ++i) {
    const double x = test::urand(rng, -1e3, 1e3) *
                     std::pow(10.0, std::floor(test::urand(rng, -6, 6)));
    const std::string text = format_double(x);
    CHECK(std::stod(text) == x);
  }
  CHECK(std::stod(format_double(0.1)) == 0.1);
  CHECK(std::stod(format_double(9.81)) == 9.81);
}
