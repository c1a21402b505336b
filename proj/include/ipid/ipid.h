/*
 * Copyright 2026 The ipid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the rigid-body inertial parameter identification library.
 *
 * Conventions:
 *  - Every fallible call returns ipid_status; IPID_OK is 0. On failure a
 *    human-readable message is stored per thread and can be fetched with
 *    ipid_last_error() until the next call on the same thread.
 *  - A parameter vector pi is 10 doubles: mass (kg), first moment of mass
 *    m*c (kg*m, 3), unique body-frame inertia entries in the order
 *    ixx, ixy, ixz, iyy, iyz, izz (kg*m^2).
 *  - Rotation matrices are 9 doubles, row-major.
 *  - Out-parameters are written only on IPID_OK unless stated otherwise.
 */

#ifndef IPID_IPID_H_
#define IPID_IPID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(IPID_BUILD)
#define IPID_API __declspec(dllexport)
#else
#define IPID_API __declspec(dllimport)
#endif
#else
#define IPID_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ipid_status {
  IPID_OK = 0,
  IPID_ERR_INVALID_ARGUMENT = 1,
  IPID_ERR_ANGLE_NEAR_PI = 2,
  IPID_ERR_NOT_SYMMETRIC = 3,
  IPID_ERR_ZERO_MASS = 4,
  IPID_ERR_NOT_CONSISTENT = 5,
  IPID_ERR_EMPTY_SET = 6,
  IPID_ERR_OUT_OF_RANGE = 7,
  IPID_ERR_IO = 8,
  IPID_ERR_PARSE = 9,
  IPID_ERR_MISSING_HEADER = 10,
  IPID_ERR_MALFORMED_ROW = 11,
  IPID_ERR_INTERNAL = 12
} ipid_status;

/* Library version, "major.minor.patch". */
IPID_API const char* ipid_version(void);

/* Message of the current thread's most recent failure; "" after success. */
IPID_API const char* ipid_last_error(void);

/*
 * Point on the consistency manifold: mass, center of mass (m), principal
 * axes as a rotation matrix, nonnegative principal second moments of mass
 * (kg*m^2). Every such point maps to fully consistent parameters.
 */
typedef struct ipid_theta {
  double mass;
  double com[3];
  double orientation[9]; /* row-major rotation matrix */
  double second_moments[3];
} ipid_theta;

typedef struct ipid_trajectory_config {
  int waypoint_count;         /* >= 2; segments = waypoint_count - 1 */
  double segment_duration;    /* s */
  double sample_rate;         /* Hz */
  double orientation_spread;  /* rad, per-axis waypoint step */
  double position_spread;     /* m, half-width of the waypoint box */
  double gravity[3];          /* m/s^2, world frame */
  uint64_t seed;
} ipid_trajectory_config;

typedef struct ipid_noise_config {
  double force_std;  /* N */
  double moment_std; /* N*m */
  uint64_t seed;
} ipid_noise_config;

typedef struct ipid_solver_config {
  int max_iters;
  double grad_tol;
  double step_tol;
  double damping0;
  double mass_floor;   /* kg */
  double moment_floor; /* kg*m^2 */
  uint64_t seed;
} ipid_solver_config;

typedef struct ipid_solve_report {
  int iterations;
  double objective;  /* sum of squared wrench residuals */
  double optimality; /* projected gradient infinity norm */
  int converged;
  double wall_time_s;
} ipid_solve_report;

typedef struct ipid_linear_info {
  int rank;
  double cond; /* largest / smallest retained singular value */
  double singular_values[10];
} ipid_linear_info;

typedef struct ipid_consistency {
  int mass_ok;
  int com_inertia_psd_ok;
  int triangle_ok;
  int physical;
  int fully_consistent;
  double mass;
  double principal_moments[3];
  double second_moments[3];
  double min_eigenvalue;
  double worst_triangle_slack;
  double tolerance;
} ipid_consistency;

/* Fill a config with the library defaults. */
IPID_API void ipid_trajectory_config_init(ipid_trajectory_config* config);
IPID_API void ipid_noise_config_init(ipid_noise_config* config);
IPID_API void ipid_solver_config_init(ipid_solver_config* config);

/* Load solver settings from a flat key-value file; unknown keys fail. */
IPID_API ipid_status ipid_solver_config_load(const char* path,
                                             ipid_solver_config* out);

/* Rodrigues exponential: rotation matrix of a rotation vector. */
IPID_API ipid_status ipid_so3_exp(const double omega[3],
                                  double out_matrix[9]);

/* Parameters generated by a manifold point; always fully consistent. */
IPID_API ipid_status ipid_params_from_theta(const ipid_theta* theta,
                                            double out_pi[10]);

/*
 * Inverse of the parameter map for parameters consistent within tol
 * (negative eigenvalues and second moments up to tol are clamped to zero).
 * Fails with IPID_ERR_NOT_CONSISTENT beyond that.
 */
IPID_API ipid_status ipid_theta_from_params(const double pi[10], double tol,
                                            ipid_theta* out);

/* Nonnegative mass and COM inertia PSD within tol. */
IPID_API ipid_status ipid_check_physical(const double pi[10], double tol,
                                         ipid_consistency* out);

/* As ipid_check_physical plus nonnegative second moments within tol. */
IPID_API ipid_status ipid_check_full_physical(const double pi[10], double tol,
                                              ipid_consistency* out);

/*
 * Renders a verdict as text: a human-readable block when as_key_values is
 * 0, "key = value" lines otherwise. Fails with IPID_ERR_OUT_OF_RANGE when
 * cap is too small.
 */
IPID_API ipid_status ipid_consistency_format(const ipid_consistency* report,
                                             int as_key_values, char* buf,
                                             size_t cap);

/* Opaque sample set handle. */
typedef struct ipid_dataset ipid_dataset;

/*
 * Synthesizes a wrench/motion recording of a body with parameters pi_true
 * driven between seeded random pose waypoints under a min-jerk profile,
 * with optional Gaussian wrench noise. Deterministic given the seeds.
 */
IPID_API ipid_status ipid_dataset_generate(
    const double pi_true[10], const ipid_trajectory_config* trajectory,
    const ipid_noise_config* noise, ipid_dataset** out);

IPID_API ipid_status ipid_dataset_read_csv(const char* path,
                                           ipid_dataset** out);
IPID_API ipid_status ipid_dataset_write_csv(const ipid_dataset* dataset,
                                            const char* path);
IPID_API long long ipid_dataset_sample_count(const ipid_dataset* dataset);
IPID_API void ipid_dataset_free(ipid_dataset* dataset);

/*
 * Unconstrained linear least squares over the 10 parameters; minimum-norm
 * solution for rank-deficient systems. info may be NULL.
 */
IPID_API ipid_status ipid_identify_linear(const ipid_dataset* dataset,
                                          double out_pi[10],
                                          ipid_linear_info* info);

/*
 * Damped Gauss-Newton on the consistency manifold starting from the
 * clamped linear solution. config, out_theta and report may be NULL; the
 * returned parameters always pass the full consistency check.
 */
IPID_API ipid_status ipid_identify_manifold(const ipid_dataset* dataset,
                                            const ipid_solver_config* config,
                                            double out_pi[10],
                                            ipid_theta* out_theta,
                                            ipid_solve_report* report);

/*
 * Writes a flat key-value result document: the 10 parameter keys m, mcx,
 * mcy, mcz, ixx, ixy, ixz, iyy, iyz, izz plus whatever metadata blocks are
 * non-NULL. method may be NULL.
 */
IPID_API ipid_status ipid_result_write(const char* path, const double pi[10],
                                       const char* method,
                                       const ipid_solve_report* report,
                                       const ipid_linear_info* info,
                                       const ipid_consistency* consistency);

/* Reads the 10 parameter keys back from a result document. */
IPID_API ipid_status ipid_result_read_params(const char* path,
                                             double out_pi[10]);

/*
 * Built-in reference grid: published identification results (rounded to
 * three decimals) for five segment durations times two methods, with the
 * published consistency classification.
 */
typedef struct ipid_table1_verdict {
  char segment[8];
  char method[12];
  double values[10];
  int reference_consistent; /* classification shipped with the grid */
  int consistent;           /* this checker, rounding-aware tolerance */
  int strict_consistent;    /* this checker, tol 1e-6 */
  int matches_reference;
  double violation; /* kg*m^2, worst amount at strict tolerance */
} ipid_table1_verdict;

IPID_API int ipid_table1_count(void);
IPID_API ipid_status ipid_table1_verdict_get(int index,
                                             ipid_table1_verdict* out);
IPID_API ipid_status ipid_table1_text(char* buf, size_t cap);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* IPID_IPID_H_ */
