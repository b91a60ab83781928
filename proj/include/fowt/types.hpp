// Copyright 2026 The fowt-ccd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

namespace fowt {

using Real = double;

template <typename T, int N>
using Vec = Eigen::Matrix<T, N, 1>;
template <typename T, int R, int C>
using Mat = Eigen::Matrix<T, R, C>;

template <typename T>
using VecX = Eigen::Matrix<T, Eigen::Dynamic, 1>;
template <typename T>
using MatX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXd = Eigen::VectorXd;
using MatrixXd = Eigen::MatrixXd;

template <typename T>
using Vec2 = Vec<T, 2>;
template <typename T>
using Vec4 = Vec<T, 4>;
template <typename T>
using Mat4 = Mat<T, 4, 4>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kBetzLimit = 16.0 / 27.0;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Numeric value of a scalar; overloaded for AD types in dual.hpp.
inline double val(double x) { return x; }

/// Error with a short machine-readable code plus a human message.
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

/// Multiply a constant double matrix by a vector of (possibly AD) scalars.
/// Avoids mixed-scalar expression templates.
template <typename T, int R, int C>
Vec<T, R> apply(const Mat<double, R, C>& m, const Vec<T, C>& v) {
  Vec<T, R> out;
  for (int i = 0; i < R; ++i) {
    T acc = T(0.0);
    for (int j = 0; j < C; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

}  // namespace fowt
