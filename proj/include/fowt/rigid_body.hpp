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

// Rigid-body and hydrodynamic coefficient assembly for the planar 4-DOF
// system (surge, heave, pitch, rotor spin) written in platform
// quasi-coordinates about the platform COG.

#pragma once

#include "fowt/types.hpp"

namespace fowt {

/// Component masses, inertias, and lever arms about the platform COG.
/// D_* are vertical distances from the platform COG, d_* horizontal
/// distances from the tower centerline (rotor upwind, nacelle downwind).
struct RigidBodyInventory {
  double m_platform = 0.0;
  double m_tower = 0.0;
  double m_nacelle = 0.0;
  double m_rotor = 0.0;
  double I_platform_y = 0.0;  // about its own COG
  double I_tower_y = 0.0;
  double I_nacelle_y = 0.0;
  double I_rotor_y = 0.0;
  double I_rotor_x = 0.0;  // spin inertia (4th DOF)
  double d_rotor = 0.0;    // rotor COG to tower centerline [m]
  double d_nacelle = 0.0;  // nacelle COG to tower centerline [m]
  double D_tower = 0.0;    // tower COG above platform COG [m]
  double D_rotor = 0.0;    // hub above platform COG [m]

  double total_mass() const { return m_platform + m_tower + m_nacelle + m_rotor; }

  void validate() const {
    for (double m : {m_platform, m_tower, m_nacelle, m_rotor})
      if (m < 0.0) throw ModelError("invalid-inventory", "negative mass");
    for (double I : {I_platform_y, I_tower_y, I_nacelle_y, I_rotor_y, I_rotor_x})
      if (I < 0.0) throw ModelError("invalid-inventory", "negative inertia");
    for (double d : {d_rotor, d_nacelle, D_tower, D_rotor})
      if (!std::isfinite(d)) throw ModelError("invalid-inventory", "non-finite offset");
  }
};

struct HydroParams {
  double c_added_mass = 0.969954;  // hydrodynamic added mass coefficient [-]
  double rho_water = 1025.0;       // [kg/m^3]
  double displaced_volume = 0.0;   // V_d at design draught [m^3]
  double base_diameter = 9.4;      // platform base diameter d_1 [m]
  double a_cv = 0.0;               // platform base to submerged-volume center [m]
  double a_pf = 0.0;               // platform COG to platform base [m]
  double I_displaced = 0.0;        // displaced-volume inertia about COG [kg m^2]
  double gravity = 9.81;           // [m/s^2]

  void validate() const {
    if (!(rho_water > 0.0) || !(displaced_volume > 0.0) || !(c_added_mass >= 0.0))
      throw ModelError("invalid-hydro", "hydro parameter out of range");
  }
};

/// System mass matrix. Symmetric by construction; rotor spin decouples.
inline Mat4<double> assemble_mass_matrix(const RigidBodyInventory& inv) {
  inv.validate();
  const double m_T = inv.total_mass();
  const double M13 = inv.D_rotor * (inv.m_rotor + inv.m_nacelle) + inv.m_tower * inv.D_tower;
  const double M26 = inv.d_nacelle * inv.m_nacelle - inv.d_rotor * inv.m_rotor;
  const double I_Ty = inv.I_platform_y + inv.I_tower_y + inv.I_nacelle_y + inv.I_rotor_y;
  const double M55 = I_Ty +
                     inv.m_rotor * (inv.D_rotor * inv.D_rotor + inv.d_rotor * inv.d_rotor) +
                     inv.m_nacelle * (inv.D_rotor * inv.D_rotor + inv.d_nacelle * inv.d_nacelle) +
                     inv.D_tower * inv.D_tower * inv.m_tower;
  Mat4<double> m;
  m << m_T, 0.0, M13, 0.0,
       0.0, m_T, -M26, 0.0,
       M13, -M26, M55, 0.0,
       0.0, 0.0, 0.0, inv.I_rotor_x;
  return m;
}

/// Hydrodynamic added mass. Row/column 4 are zero: the rotor DOF carries no
/// added mass.
inline Mat4<double> assemble_added_mass(const HydroParams& h) {
  h.validate();
  const double A11 = h.c_added_mass * h.rho_water * h.displaced_volume;
  const double A22 = h.c_added_mass * (h.rho_water * kPi * std::pow(h.base_diameter, 3) / 12.0);
  const double A13 = A11 * (h.a_cv - h.a_pf);
  const double A33 = h.c_added_mass * h.I_displaced;
  Mat4<double> a;
  a << A11, 0.0, A13, 0.0,
       0.0, A22, 0.0, 0.0,
       A13, 0.0, A33, 0.0,
       0.0, 0.0, 0.0, 0.0;
  return a;
}

/// Quadratic-velocity loads (S~ M_sys + C_A) * v for body velocities
/// v = [v_x, v_z, omega_y, Omega]. Returned with the sign they carry on the
/// left-hand side of the equations of motion.
template <typename T>
Vec4<T> coriolis_loads(const Vec4<T>& vel, const Mat4<double>& m_sys,
                       const HydroParams& h) {
  const T& v_x = vel[0];
  const T& v_z = vel[1];
  const T& w_y = vel[2];

  const Vec4<T> p = apply(m_sys, vel);  // momentum
  Vec4<T> out;
  out[0] = w_y * p[1];
  out[1] = -w_y * p[0];
  out[2] = v_z * p[0] - v_x * p[1];
  out[3] = T(0.0);

  const double A11 = h.c_added_mass * h.rho_water * h.displaced_volume;
  out[0] += A11 * v_z * w_y;
  out[1] += -(A11 * v_x * w_y);
  out[2] += -(A11 * v_z * v_x) + A11 * v_x * v_z;  // zero: kept for structural clarity
  return out;
}

/// Gravity force and moment in the body frame, Eq. right-hand side block
/// [F^m; M^m; 0].
template <typename T>
Vec4<T> gravity_loads(const T& pitch, const RigidBodyInventory& inv, double gravity) {
  using std::cos;
  using std::sin;
  const double m_T = inv.total_mass();
  const T sin_p = sin(pitch);
  const T cos_p = cos(pitch);
  Vec4<T> out;
  out[0] = m_T * gravity * sin_p;
  out[1] = -(m_T * gravity) * cos_p;
  out[2] = gravity * sin_p * (inv.D_rotor * (inv.m_nacelle + inv.m_rotor) + inv.D_tower * inv.m_tower) +
           gravity * cos_p * (inv.d_nacelle * inv.m_nacelle - inv.d_rotor * inv.m_rotor);
  out[3] = T(0.0);
  return out;
}

}  // namespace fowt
