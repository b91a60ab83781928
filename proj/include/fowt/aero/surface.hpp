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

#include <atomic>
#include <vector>

#include "fowt/aero/bem.hpp"
#include "fowt/types.hpp"

namespace fowt::aero {

struct SurfaceGrid {
  double lambda_lo = 1.0;
  double lambda_step = 0.25;
  int lambda_count = 57;  // 1..15
  double theta_lo = 0.0;  // blade pitch [deg]
  double theta_step = 1.0;
  int theta_count = 41;  // 0..40

  double lambda_hi() const { return lambda_lo + lambda_step * (lambda_count - 1); }
  double theta_hi() const { return theta_lo + theta_step * (theta_count - 1); }
};

/// Tabulated Cp / Ct over (tip speed ratio, blade pitch) with a C1 bicubic
/// (Catmull-Rom) interpolant. Out-of-hull queries are clamped to the hull
/// and counted; residual evaluations inside the optimizer must stay total.
class CoefficientSurface {
 public:
  CoefficientSurface() = default;
  CoefficientSurface(SurfaceGrid grid, MatrixXd cp, MatrixXd ct);
  CoefficientSurface(const CoefficientSurface& o) { *this = o; }
  CoefficientSurface& operator=(const CoefficientSurface& o) {
    if (this != &o) {
      grid_ = o.grid_;
      cp_ = o.cp_;
      ct_ = o.ct_;
      cp_cells_ = o.cp_cells_;
      ct_cells_ = o.ct_cells_;
      clamp_queries_.store(o.clamp_queries_.load());
    }
    return *this;
  }

  const SurfaceGrid& grid() const { return grid_; }
  const MatrixXd& cp_table() const { return cp_; }
  const MatrixXd& ct_table() const { return ct_; }
  long clamp_queries() const { return clamp_queries_.load(); }

  template <typename T>
  void eval(const T& tsr, const T& pitch_deg, T* cp, T* ct) const {
    T x = tsr, y = pitch_deg;
    bool clamped = false;
    clamp_coord(&x, grid_.lambda_lo, grid_.lambda_hi(), &clamped);
    clamp_coord(&y, grid_.theta_lo, grid_.theta_hi(), &clamped);
    if (clamped) clamp_queries_.fetch_add(1, std::memory_order_relaxed);

    const double sx = (val(x) - grid_.lambda_lo) / grid_.lambda_step;
    const double sy = (val(y) - grid_.theta_lo) / grid_.theta_step;
    const int i = std::min(static_cast<int>(sx), grid_.lambda_count - 2);
    const int j = std::min(static_cast<int>(sy), grid_.theta_count - 2);
    const T u = (x - (grid_.lambda_lo + i * grid_.lambda_step)) / grid_.lambda_step;
    const T v = (y - (grid_.theta_lo + j * grid_.theta_step)) / grid_.theta_step;
    const std::size_t cell = static_cast<std::size_t>(i * (grid_.theta_count - 1) + j);
    *cp = eval_patch(cp_cells_[cell], u, v);
    *ct = eval_patch(ct_cells_[cell], u, v);
  }

  /// True when the query lies inside the tabulated hull.
  bool in_hull(double tsr, double pitch_deg) const {
    return tsr >= grid_.lambda_lo && tsr <= grid_.lambda_hi() && pitch_deg >= grid_.theta_lo &&
           pitch_deg <= grid_.theta_hi();
  }

 private:
  template <typename T>
  static void clamp_coord(T* x, double lo, double hi, bool* clamped) {
    if (val(*x) < lo) {
      *x = T(lo);
      *clamped = true;
    } else if (val(*x) > hi) {
      *x = T(hi);
      *clamped = true;
    }
  }

  template <typename T>
  static T eval_patch(const Mat<double, 4, 4>& c, const T& u, const T& v) {
    // Horner in v then u for sum c(i,j) u^i v^j.
    T acc = T(0.0);
    for (int i = 3; i >= 0; --i) {
      T row = T(0.0);
      for (int j = 3; j >= 0; --j) row = row * v + c(i, j);
      acc = acc * u + row;
    }
    return acc;
  }

  SurfaceGrid grid_;
  MatrixXd cp_;
  MatrixXd ct_;
  std::vector<Mat<double, 4, 4>> cp_cells_;
  std::vector<Mat<double, 4, 4>> ct_cells_;
  mutable std::atomic<long> clamp_queries_{0};
};

struct SurfaceBuildReport {
  long cp_clamped = 0;  // table entries clipped into [0, Betz)
  long ct_clamped = 0;
  long unconverged_elements = 0;
};

/// Cp/Ct tables from BEM at every grid point, clamped to physical ranges.
CoefficientSurface build_coefficient_surface(const BemSolver& bem,
                                             const BladeStations::NodalSchedule& schedule,
                                             const SurfaceGrid& grid,
                                             SurfaceBuildReport* report = nullptr);

/// Peak-Cp tip speed ratio along theta = theta_lo (the fine-pitch ridge).
double cp_max_tsr(const CoefficientSurface& surface);

}  // namespace fowt::aero
