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

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace ipid {

namespace {

const char kCsvHeader[] =
    "t,v_lin_x,v_lin_y,v_lin_z,v_ang_x,v_ang_y,v_ang_z,"
    "ag_lin_x,ag_lin_y,ag_lin_z,ag_ang_x,ag_ang_y,ag_ang_z,"
    "f_x,f_y,f_z,mu_x,mu_y,mu_z";
const char kCsvUnits[] =
    "# units: t s; v_lin m/s; v_ang rad/s; ag_lin m/s^2; ag_ang rad/s^2; "
    "f N; mu N*m";
const char* const kParamKeys[10] = {"m",   "mcx", "mcy", "mcz", "ixx",
                                    "ixy", "ixz", "iyy", "iyz", "izz"};

std::string rstrip(std::string line) {
  while (!line.empty() &&
         (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  return line;
}

std::string strip(std::string text) {
  text = rstrip(std::move(text));
  size_t first = 0;
  while (first < text.size() && (text[first] == ' ' || text[first] == '\t')) {
    ++first;
  }
  return text.substr(first);
}

double parse_double(const std::string& field, long line_number) {
  const char* begin = field.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  while (end != nullptr && (*end == ' ' || *end == '\t')) {
    ++end;
  }
  if (end == begin || end == nullptr || *end != '\0') {
    std::ostringstream msg;
    msg << "malformed row at line " << line_number << ": bad number '"
        << field << "'";
    throw Error(ErrorCode::malformed_row, msg.str());
  }
  return value;
}

double parse_double_value(const std::string& key, const std::string& text) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(begin, &end);
  if (end == begin || end == nullptr || *end != '\0') {
    throw Error(ErrorCode::parse, "key '" + key + "': bad number '" + text + "'");
  }
  return value;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

void write_csv(const Dataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  }
  out << kCsvUnits << "\n";
  if (!dataset.provenance.empty()) {
    out << "# " << dataset.provenance << "\n";
  }
  out << kCsvHeader << "\n";
  char buf[64];
  for (const Sample& s : dataset.samples) {
    const double row[19] = {
        s.t,           s.v.linear.x(),  s.v.linear.y(),  s.v.linear.z(),
        s.v.angular.x(), s.v.angular.y(), s.v.angular.z(),
        s.a.linear.x(),  s.a.linear.y(),  s.a.linear.z(),
        s.a.angular.x(), s.a.angular.y(), s.a.angular.z(),
        s.f.force.x(),   s.f.force.y(),   s.f.force.z(),
        s.f.moment.x(),  s.f.moment.y(),  s.f.moment.z()};
    for (int i = 0; i < 19; ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      out << buf << (i + 1 < 19 ? "," : "\n");
    }
  }
  if (!out) {
    throw Error(ErrorCode::io, "write failed for '" + path + "'");
  }
}

Dataset read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open '" + path + "' for reading");
  }
  Dataset dataset;
  dataset.provenance = "csv:" + path;

  std::string line;
  long line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    line = rstrip(std::move(line));
    if (line.empty() || line[0] == '#') {
      continue;
    }
    if (!header_seen) {
      if (line != kCsvHeader) {
        std::ostringstream msg;
        msg << "line " << line_number
            << ": expected header '" << kCsvHeader << "'";
        throw Error(ErrorCode::missing_header, msg.str());
      }
      header_seen = true;
      continue;
    }
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 19) {
      std::ostringstream msg;
      msg << "malformed row at line " << line_number << ": expected 19 "
          << "fields, got " << fields.size();
      throw Error(ErrorCode::malformed_row, msg.str());
    }
    double value[19];
    for (size_t i = 0; i < 19; ++i) {
      value[i] = parse_double(fields[i], line_number);
    }
    Sample s;
    s.t = value[0];
    s.v.linear = Vec3(value[1], value[2], value[3]);
    s.v.angular = Vec3(value[4], value[5], value[6]);
    s.a.linear = Vec3(value[7], value[8], value[9]);
    s.a.angular = Vec3(value[10], value[11], value[12]);
    s.f.force = Vec3(value[13], value[14], value[15]);
    s.f.moment = Vec3(value[16], value[17], value[18]);
    dataset.samples.push_back(s);
  }
  if (!header_seen) {
    throw Error(ErrorCode::missing_header, "no header row in '" + path + "'");
  }
  return dataset;
}

void write_key_values(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  }
  for (const auto& [key, value] : pairs) {
    out << key << " = " << value << "\n";
  }
  if (!out) {
    throw Error(ErrorCode::io, "write failed for '" + path + "'");
  }
}

std::vector<std::pair<std::string, std::string>> read_key_values(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open '" + path + "' for reading");
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = strip(std::move(line));
    if (line.empty() || line[0] == '#') {
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      std::ostringstream msg;
      msg << "malformed row at line " << line_number << ": expected key = "
          << "value";
      throw Error(ErrorCode::malformed_row, msg.str());
    }
    pairs.emplace_back(strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return pairs;
}

InertialParams params_from_key_values(
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  Vec10 values = Vec10::Zero();
  bool seen[10] = {};
  for (const auto& [key, text] : pairs) {
    for (int i = 0; i < 10; ++i) {
      if (key == kParamKeys[i]) {
        values(i) = parse_double_value(key, text);
        seen[i] = true;
        break;
      }
    }
  }
  for (int i = 0; i < 10; ++i) {
    if (!seen[i]) {
      throw Error(ErrorCode::parse,
                  std::string("missing key '") + kParamKeys[i] + "'");
    }
  }
  return InertialParams::from_vector(values);
}

std::vector<std::pair<std::string, std::string>> params_to_key_values(
    const InertialParams& pi) {
  const Vec10 values = pi.to_vector();
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(10);
  for (int i = 0; i < 10; ++i) {
    pairs.emplace_back(kParamKeys[i], format_double(values(i)));
  }
  return pairs;
}

SolverConfig read_solver_config(const std::string& path) {
  SolverConfig config;
  for (const auto& [key, text] : read_key_values(path)) {
    if (key == "max_iters") {
      config.max_iters = static_cast<int>(parse_double_value(key, text));
    } else if (key == "grad_tol") {
      config.grad_tol = parse_double_value(key, text);
    } else if (key == "step_tol") {
      config.step_tol = parse_double_value(key, text);
    } else if (key == "damping0") {
      config.damping0 = parse_double_value(key, text);
    } else if (key == "mass_floor") {
      config.mass_floor = parse_double_value(key, text);
    } else if (key == "moment_floor") {
      config.moment_floor = parse_double_value(key, text);
    } else if (key == "seed") {
      config.seed =
          static_cast<std::uint64_t>(parse_double_value(key, text));
    } else {
      throw Error(ErrorCode::parse, "unknown solver config key '" + key + "'");
    }
  }
  if (config.max_iters < 1 || !(config.grad_tol > 0.0) ||
      !(config.step_tol > 0.0) || !(config.damping0 > 0.0) ||
      !(config.mass_floor > 0.0) || !(config.moment_floor > 0.0)) {
    throw Error(ErrorCode::parse, "solver config values out of range");
  }
  return config;
}

}  // namespace ipid
