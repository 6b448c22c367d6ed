// Copyright 2026 The apdhg Authors
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

// Instance files: an n x n CSV of costs (one row per line, comma separated,
// no header) and a JSON sidecar {"n": ..., "seed": ...} next to it.

#ifndef APDHG_ASSIGNMENT_IO_H_
#define APDHG_ASSIGNMENT_IO_H_

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "apdhg/assignment.h"
#include "json.hpp"

namespace apdhg {

// Shortest decimal text that parses back to the same double.
inline std::string FormatDouble(double v) {
  char buf[32];
  for (int precision = 15; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

inline std::filesystem::path SidecarPath(const std::filesystem::path& csv) {
  std::filesystem::path p = csv;
  p.replace_extension(".json");
  return p;
}

inline void WriteInstance(const AssignmentInstance& instance,
                          const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "cannot write " + csv_path.string());
  }
  const int n = instance.n_jobs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j > 0) out << ',';
      out << FormatDouble(instance.Cost(i, j));
    }
    out << '\n';
  }
  std::ofstream side(SidecarPath(csv_path));
  side << nlohmann::json{{"n", n}, {"seed", instance.seed}}.dump(2) << '\n';
  if (!out || !side) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "write failed for " + csv_path.string());
  }
}

// Reads the CSV; the sidecar, when present, supplies the seed and must
// agree on n.
inline AssignmentInstance ReadInstance(const std::filesystem::path& csv_path) {
  std::ifstream in(csv_path);
  if (!in) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "cannot read " + csv_path.string());
  }
  AssignmentInstance inst;
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    std::stringstream ss(line);
    std::string cell;
    int cols = 0;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || !std::isfinite(v)) {
        throw SolverError(ErrorCode::kInvalidArgument,
                          "bad cost '" + cell + "' on row " +
                              std::to_string(rows + 1));
      }
      inst.cost.push_back(v);
      ++cols;
    }
    if (rows == 0) inst.n_jobs = cols;
    if (cols != inst.n_jobs) {
      throw SolverError(ErrorCode::kInvalidArgument,
                        "ragged cost matrix at row " + std::to_string(rows + 1));
    }
    ++rows;
  }
  if (rows == 0 || rows != inst.n_jobs) {
    throw SolverError(ErrorCode::kInvalidArgument,
                      "cost matrix must be square and non-empty");
  }
  const auto side_path = SidecarPath(csv_path);
  if (std::filesystem::exists(side_path)) {
    std::ifstream side(side_path);
    const nlohmann::json meta = nlohmann::json::parse(side);
    if (meta.value("n", inst.n_jobs) != inst.n_jobs) {
      throw SolverError(ErrorCode::kInvalidArgument,
                        "sidecar n disagrees with the CSV");
    }
    inst.seed = meta.value("seed", std::uint64_t{0});
  }
  return inst;
}

}  // namespace apdhg

#endif  // APDHG_ASSIGNMENT_IO_H_
