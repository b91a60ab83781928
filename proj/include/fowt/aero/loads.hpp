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

#include "fowt/aero/surface.hpp"
#include "fowt/types.hpp"

namespace fowt::aero {

struct AeroGeometry {
  double rotor_radius = 63.0;
  double rho_air = 1.225;
  double z_hub = 179.92;       // hub height above the platform COG [m]
  double omega_floor = 0.05;   // regularized divisor for torque [rad/s]
};

template <typename T>
struct AeroLoads {
  T thrust = T(0.0);     // along the shaft (body x) [N]
  T torque = T(0.0);     // aerodynamic torque about the shaft [N m]
  T power = T(0.0);      // P_a = torque * Omega [W]
  T u_rel = T(0.0);      // rotor-normal relative wind [m/s]
  T tsr = T(0.0);
};

/// Rotor loads from the relative wind: the fore-aft hub velocity (platform
/// surge, pitch rate arm and pitch attitude) is subtracted from the
/// absolute wind before forming the tip speed ratio. Power is defined as
/// torque times rotor speed so the pair stays consistent under the
/// regularized low-speed divisor.
template <typename T>
AeroLoads<T> aero_loads(double u_abs, const T& v_x, const T& v_z, const T& omega_y,
                        const T& pitch, const T& rotor_speed, const T& blade_pitch_rad,
                        const CoefficientSurface& surface, const AeroGeometry& geom) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  AeroLoads<T> out;
  const T hub_vx_body = v_x + omega_y * geom.z_hub;
  const T v_hub = cos(pitch) * hub_vx_body + sin(pitch) * v_z;  // earth fore-aft
  out.u_rel = u_abs - v_hub;
  if (val(out.u_rel) <= 1e-9) {
    out.u_rel = T(0.0);
    return out;  // rotor sees no inflow
  }

  // Smooth floor keeps the torque division differentiable at low speed.
  const T d = rotor_speed - geom.omega_floor;
  const T omega_reg = 0.5 * (rotor_speed + geom.omega_floor + sqrt(d * d + 1e-6));

  out.tsr = rotor_speed * geom.rotor_radius / out.u_rel;
  T cp = T(0.0), ct = T(0.0);
  surface.eval(out.tsr, blade_pitch_rad * (180.0 / kPi), &cp, &ct);

  const double q_area = 0.5 * geom.rho_air * kPi * geom.rotor_radius * geom.rotor_radius;
  out.thrust = q_area * ct * out.u_rel * out.u_rel;
  const T p_raw = q_area * cp * out.u_rel * out.u_rel * out.u_rel;
  out.torque = p_raw / omega_reg;
  out.power = out.torque * rotor_speed;
  return out;
}

}  // namespace fowt::aero
