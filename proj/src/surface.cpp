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

#include "fowt/aero/surface.hpp"

namespace fowt::aero {
namespace {

// Catmull-Rom basis in matrix form: cubic coefficients from a 4-point
// stencil, tangents by central differences (one-sided at the edges via
// index clamping).
Mat<double, 4, 4> catmull_rom_matrix() {
  Mat<double, 4, 4> m;
  m << 0.0, 1.0, 0.0, 0.0,
      -0.5, 0.0, 0.5, 0.0,
       1.0, -2.5, 2.0, -0.5,
      -0.5, 1.5, -1.5, 0.5;
  return m;
}

}  // namespace

CoefficientSurface::CoefficientSurface(SurfaceGrid grid, MatrixXd cp, MatrixXd ct)
    : grid_(grid), cp_(std::move(cp)), ct_(std::move(ct)) {
  if (grid_.lambda_count < 2 || grid_.theta_count < 2)
    throw ModelError("invalid-argument", "surface grid needs at least 2x2 points");
  if (cp_.rows() != grid_.lambda_count || cp_.cols() != grid_.theta_count ||
      ct_.rows() != grid_.lambda_count || ct_.cols() != grid_.theta_count)
    throw ModelError("invalid-argument", "surface table shape mismatch");

  const Mat<double, 4, 4> m = catmull_rom_matrix();
  const auto build_cells = [&](const MatrixXd& tab, std::vector<Mat<double, 4, 4>>* cells) {
    cells->resize(static_cast<std::size_t>((grid_.lambda_count - 1) * (grid_.theta_count - 1)));
    for (int i = 0; i + 1 < grid_.lambda_count; ++i) {
      for (int j = 0; j + 1 < grid_.theta_count; ++j) {
        Mat<double, 4, 4> stencil;
        for (int a = 0; a < 4; ++a) {
          const int ia = std::clamp(i - 1 + a, 0, grid_.lambda_count - 1);
          for (int b = 0; b < 4; ++b) {
            const int jb = std::clamp(j - 1 + b, 0, grid_.theta_count - 1);
            stencil(a, b) = tab(ia, jb);
          }
        }
        (*cells)[static_cast<std::size_t>(i * (grid_.theta_count - 1) + j)] =
            m * stencil * m.transpose();
      }
    }
  };
  build_cells(cp_, &cp_cells_);
  build_cells(ct_, &ct_cells_);
}

CoefficientSurface build_coefficient_surface(const BemSolver& bem,
                                             const BladeStations::NodalSchedule& schedule,
                                             const SurfaceGrid& grid, SurfaceBuildReport* report) {
  MatrixXd cp(grid.lambda_count, grid.theta_count);
  MatrixXd ct(grid.lambda_count, grid.theta_count);
  SurfaceBuildReport local;
  constexpr double kCpCeiling = kBetzLimit - 1e-9;
  for (int i = 0; i < grid.lambda_count; ++i) {
    const double tsr = grid.lambda_lo + i * grid.lambda_step;
    for (int j = 0; j < grid.theta_count; ++j) {
      const double pitch = grid.theta_lo + j * grid.theta_step;
      const BemPoint p = bem.solve(tsr, pitch, schedule);
      local.unconverged_elements += p.unconverged_elements;
      double cp_ij = p.cp;
      double ct_ij = p.ct;
      if (cp_ij < 0.0 || cp_ij > kCpCeiling) {
        cp_ij = std::clamp(cp_ij, 0.0, kCpCeiling);
        ++local.cp_clamped;
      }
      if (ct_ij < 0.0) {
        ct_ij = 0.0;
        ++local.ct_clamped;
      }
      cp(i, j) = cp_ij;
      ct(i, j) = ct_ij;
    }
  }
  if (report) *report = local;
  return CoefficientSurface(grid, std::move(cp), std::move(ct));
}

double cp_max_tsr(const CoefficientSurface& surface) {
  const SurfaceGrid& g = surface.grid();
  // Coarse scan on the table followed by a golden-section refinement on the
  // interpolant along theta = theta_lo.
  int best_i = 0;
  for (int i = 1; i < g.lambda_count; ++i)
    if (surface.cp_table()(i, 0) > surface.cp_table()(best_i, 0)) best_i = i;
  double lo = g.lambda_lo + g.lambda_step * std::max(best_i - 1, 0);
  double hi = g.lambda_lo + g.lambda_step * std::min(best_i + 1, g.lambda_count - 1);
  auto cp_at = [&](double tsr) {
    double cp = 0.0, ct = 0.0;
    surface.eval(tsr, g.theta_lo, &cp, &ct);
    return cp;
  };
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = cp_at(x1), f2 = cp_at(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = cp_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = cp_at(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace fowt::aero
