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

#include "fowt/aero/bem.hpp"

#include <algorithm>
#include <cmath>

namespace fowt::aero {
namespace {

// Momentum-theory thrust coefficient of one annulus: classical 4a(1-a)F up
// to a = 0.4, Buhl's empirical continuation above.
double momentum_ct(double a, double f_loss) {
  if (a <= 0.4) return 4.0 * a * (1.0 - a) * f_loss;
  return 8.0 / 9.0 + (4.0 * f_loss - 40.0 / 9.0) * a + (50.0 / 9.0 - 4.0 * f_loss) * a * a;
}

double solve_axial_induction(double ct_be_at_zero, double f_loss) {
  // Balance momentum_ct(a) = ct_be_at_zero * (1-a)^2; the left side is
  // increasing and the right side decreasing over the bracket, so
  // bisection is safe.
  double lo = -0.9, hi = 0.99;
  auto g = [&](double a) {
    return momentum_ct(a, f_loss) - ct_be_at_zero * (1.0 - a) * (1.0 - a);
  };
  if (g(lo) > 0.0) return lo;
  if (g(hi) < 0.0) return hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) <= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

BemPoint BemSolver::solve(double tip_speed_ratio, double pitch_deg,
                          const BladeStations::NodalSchedule& schedule) const {
  if (!(tip_speed_ratio > 0.0))
    throw ModelError("invalid-argument", "tip speed ratio must be positive");
  const double radius = stations_->rotor_radius();
  const double hub = stations_->hub_radius();
  const double omega = tip_speed_ratio / radius;  // with unit wind speed
  const int n_b = n_blades_;

  double thrust = 0.0, torque = 0.0;
  BemPoint out;
  for (int e = 0; e < kBladeNodes; ++e) {
    const std::size_t ei = static_cast<std::size_t>(e);
    const double r = stations_->radii()[ei];
    const double dr = stations_->widths()[ei];
    const double chord = schedule.chord_m[ei];
    const double twist = schedule.twist_deg[ei];
    const Polar& polar = (*polars_)[stations_->airfoil()[ei]];
    const double lambda_r = omega * r;
    const double solidity = n_b * chord / (2.0 * kPi * r);

    double a = 0.3, ap = 0.0;
    double best_a = a, best_ap = ap, best_delta = 1e30;
    double cn = 0.0, ctan = 0.0, phi = 0.1;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      phi = std::atan2(1.0 - a, lambda_r * (1.0 + ap));
      const double sin_phi = std::max(std::abs(std::sin(phi)), 1e-4) * (phi >= 0 ? 1.0 : -1.0);
      const double cos_phi = std::cos(phi);
      const double alpha = rad2deg(phi) - (twist + pitch_deg);
      double cl = 0.0, cd = 0.0;
      polar.lookup(alpha, &cl, &cd);
      cn = cl * cos_phi + cd * sin_phi;
      ctan = cl * sin_phi - cd * cos_phi;

      const double abs_sin = std::abs(sin_phi);
      const double f_tip =
          2.0 / kPi * std::acos(std::min(std::exp(-0.5 * n_b * (radius - r) / (r * abs_sin)), 1.0));
      const double f_hub =
          2.0 / kPi * std::acos(std::min(std::exp(-0.5 * n_b * (r - hub) / (r * abs_sin)), 1.0));
      const double f_loss = std::max(f_tip * f_hub, 1e-3);

      const double ct_be0 = solidity * cn / (sin_phi * sin_phi);
      const double a_new = solve_axial_induction(ct_be0, f_loss);
      double kp = solidity * ctan / (4.0 * f_loss * sin_phi * cos_phi);
      kp = std::clamp(kp, -10.0, 0.9);
      const double ap_new = std::clamp(kp / (1.0 - kp), -0.5, 10.0);

      const double delta = std::abs(a_new - a) + std::abs(ap_new - ap);
      if (delta < best_delta) {
        best_delta = delta;
        best_a = a_new;
        best_ap = ap_new;
      }
      a += 0.5 * (a_new - a);
      ap += 0.5 * (ap_new - ap);
      if (delta < 1e-10) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      ++out.unconverged_elements;
      a = std::clamp(best_a, -0.9, 0.99);
      ap = std::clamp(best_ap, -0.5, 10.0);
      phi = std::atan2(1.0 - a, lambda_r * (1.0 + ap));
      const double sin_phi = std::max(std::abs(std::sin(phi)), 1e-4) * (phi >= 0 ? 1.0 : -1.0);
      const double cos_phi = std::cos(phi);
      const double alpha = rad2deg(phi) - (twist + pitch_deg);
      double cl = 0.0, cd = 0.0;
      polar.lookup(alpha, &cl, &cd);
      cn = cl * cos_phi + cd * sin_phi;
      ctan = cl * sin_phi - cos_phi * cd;
    }

    const double tangential = lambda_r * (1.0 + ap);
    const double axial = 1.0 - a;
    const double w2 = axial * axial + tangential * tangential;
    thrust += n_b * 0.5 * w2 * chord * cn * dr;
    torque += n_b * 0.5 * w2 * chord * ctan * r * dr;
  }

  const double q_area = 0.5 * kPi * radius * radius;  // 1/2 rho U^2 A with rho = U = 1
  out.ct = thrust / q_area;
  out.cp = torque * omega / q_area;
  return out;
}

}  // namespace fowt::aero
