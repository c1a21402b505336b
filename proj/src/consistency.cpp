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

#include "consistency.hpp"

#include "params.hpp"

#include <cstdio>
#include <sstream>

namespace ipid {

namespace {

constexpr double kMassEps = 1e-12;

// Shared evaluation; the two public checks differ only in which flag
// combination they report as their verdict.
ConsistencyReport evaluate(const InertialParams& pi, double tol) {
  ConsistencyReport report;
  report.mass = pi.mass;
  report.tolerance = tol;
  report.mass_ok = pi.mass >= -tol;

  if (pi.mass <= kMassEps) {
    // Zero density is the only one of (near) zero mass: every remaining
    // parameter must vanish. The principal moments of the raw rotational
    // block still fill the diagnostics.
    const Mat3 body = unvech(pi.inertia);
    report.com_inertia_psd_ok =
        body.cwiseAbs().maxCoeff() <= tol;
    report.triangle_ok = report.com_inertia_psd_ok &&
                         pi.first_moment.cwiseAbs().maxCoeff() <= tol;
    const PrincipalDecomposition pd = principal_decomposition(body);
    report.principal_moments = pd.principal_moments;
    report.second_moments =
        second_moments_from_principal(pd.principal_moments);
    report.min_eigenvalue = pd.principal_moments.minCoeff();
    report.worst_triangle_slack =
        triangle_residuals(pd.principal_moments).minCoeff();
    return report;
  }

  const Mat3 about_com = com_inertia(pi);
  const PrincipalDecomposition pd = principal_decomposition(about_com);
  report.principal_moments = pd.principal_moments;
  report.second_moments = second_moments_from_principal(pd.principal_moments);
  report.min_eigenvalue = pd.principal_moments.minCoeff();
  report.worst_triangle_slack =
      triangle_residuals(pd.principal_moments).minCoeff();
  report.com_inertia_psd_ok = report.min_eigenvalue >= -tol;
  report.triangle_ok = report.second_moments.minCoeff() >= -tol;
  return report;
}

}  // namespace

std::pair<bool, ConsistencyReport> check_physical(const InertialParams& pi,
                                                  double tol) {
  ConsistencyReport report = evaluate(pi, tol);
  return {report.physical(), report};
}

std::pair<bool, ConsistencyReport> check_full_physical(
    const InertialParams& pi, double tol) {
  ConsistencyReport report = evaluate(pi, tol);
  return {report.fully_consistent(), report};
}

Vec3 triangle_residuals(const Vec3& principal_moments) {
  const Vec3& j = principal_moments;
  return Vec3(j.y() + j.z() - j.x(), j.x() + j.z() - j.y(),
              j.x() + j.y() - j.z());
}

std::string to_text(const ConsistencyReport& report) {
  std::ostringstream out;
  auto line = [&out](const char* label, bool ok) {
    out << label << (ok ? "yes" : "NO") << "\n";
  };
  char buf[256];
  std::snprintf(buf, sizeof(buf), "mass                 %.12g kg\n",
                report.mass);
  out << buf;
  line("mass nonnegative     ", report.mass_ok);
  line("inertia PSD at COM   ", report.com_inertia_psd_ok);
  line("triangle inequalities", report.triangle_ok);
  std::snprintf(buf, sizeof(buf),
                "principal moments    %.12g %.12g %.12g kg*m^2\n",
                report.principal_moments.x(), report.principal_moments.y(),
                report.principal_moments.z());
  out << buf;
  std::snprintf(buf, sizeof(buf),
                "second moments       %.12g %.12g %.12g kg*m^2\n",
                report.second_moments.x(), report.second_moments.y(),
                report.second_moments.z());
  out << buf;
  std::snprintf(buf, sizeof(buf), "min eigenvalue       %.12g kg*m^2\n",
                report.min_eigenvalue);
  out << buf;
  std::snprintf(buf, sizeof(buf), "min triangle slack   %.12g kg*m^2\n",
                report.worst_triangle_slack);
  out << buf;
  std::snprintf(buf, sizeof(buf), "tolerance            %.12g\n",
                report.tolerance);
  out << buf;
  out << "physical             " << (report.physical() ? "yes" : "NO") << "\n";
  out << "fully consistent     " << (report.fully_consistent() ? "yes" : "NO")
      << "\n";
  return out.str();
}

std::string to_key_values(const ConsistencyReport& report) {
  std::ostringstream out;
  auto flag = [&out](const char* key, bool value) {
    out << key << " = " << (value ? 1 : 0) << "\n";
  };
  auto real = [&out](const char* key, double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    out << key << " = " << buf << "\n";
  };
  flag("mass_ok", report.mass_ok);
  flag("com_inertia_psd_ok", report.com_inertia_psd_ok);
  flag("triangle_ok", report.triangle_ok);
  flag("physical", report.physical());
  flag("fully_consistent", report.fully_consistent());
  real("mass", report.mass);
  real("jx", report.principal_moments.x());
  real("jy", report.principal_moments.y());
  real("jz", report.principal_moments.z());
  real("lx", report.second_moments.x());
  real("ly", report.second_moments.y());
  real("lz", report.second_moments.z());
  real("min_eigenvalue", report.min_eigenvalue);
  real("worst_triangle_slack", report.worst_triangle_slack);
  real("tolerance", report.tolerance);
  return out.str();
}

}  // namespace ipid
