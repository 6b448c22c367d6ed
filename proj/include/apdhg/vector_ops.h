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

// Dense vector kernels. Every reduction runs in index order on a single
// thread so that two runs with identical inputs produce identical bits.

#ifndef APDHG_VECTOR_OPS_H_
#define APDHG_VECTOR_OPS_H_

#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace apdhg {

using Vector = std::vector<double>;

inline double Dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

inline double SquaredNorm(std::span<const double> a) { return Dot(a, a); }

inline double Norm(std::span<const double> a) {
  return std::sqrt(SquaredNorm(a));
}

// a - b
inline Vector Subtract(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// y += alpha * x
inline void Axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline Vector Scaled(double alpha, std::span<const double> x) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = alpha * x[i];
  return out;
}

inline bool AllFinite(std::span<const double> a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

inline bool IsZero(std::span<const double> a) {
  for (double v : a) {
    if (v != 0.0) return false;
  }
  return true;
}

}  // namespace apdhg

#endif  // APDHG_VECTOR_OPS_H_
