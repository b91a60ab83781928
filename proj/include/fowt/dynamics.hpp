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

// State derivative of the planar reduced-order system. The state stacks the
// platform pose, the four quasi-velocities, and the two actuator states
// whose rates are the controls.

#pragma once

#include <functional>

#include "fowt/env/waves.hpp"
#include "fowt/env/wind.hpp"
#include "fowt/plant.hpp"

namespace fowt {

inline constexpr int kStateDim = 9;
inline constexpr int kControlDim = 2;

enum StateIndex {
  kIdxXp = 0,     // platform surge position [m]
  kIdxZp = 1,     // platform heave position [m]
  kIdxThetaP = 2, // platform pitch [rad]
  kIdxVx = 3,     // body surge velocity [m/s]
  kIdxVz = 4,     // body heave velocity [m/s]
  kIdxOmegaY = 5, // pitch rate [rad/s]
  kIdxOmega = 6,  // rotor speed [rad/s]
  kIdxThetaB = 7, // blade pitch [rad]
  kIdxTauG = 8,   // generator torque [N m]
};

template <typename T>
using StateVec = Vec<T, kStateDim>;
template <typename T>
using ControlVec = Vec<T, kControlDim>;

struct Environment {
  env::WindProfile wind;
  env::WaveField waves;
};

/// Tagged force decomposition: the total right-hand side load equals the
/// sum of the parts by construction; tests assert the additivity.
template <typename T>
struct LoadDecomposition {
  Vec4<T> gravity = Vec4<T>::Zero();
  Vec4<T> hydrostatic = Vec4<T>::Zero();
  Vec4<T> aerodynamic = Vec4<T>::Zero();
  Vec4<T> mooring = Vec4<T>::Zero();
  Vec4<T> hydrodynamic = Vec4<T>::Zero();
  aero::AeroLoads<T> rotor;

  Vec4<T> total() const {
    return gravity + hydrostatic + aerodynamic + mooring + hydrodynamic;
  }
};

template <typename T>
LoadDecomposition<T> compute_loads(const PlantContext& ctx, const Environment& env, double t,
                                   const StateVec<T>& x) {
  const PlantParams& p = ctx.params;
  LoadDecomposition<T> out;

  out.gravity = gravity_loads(x[kIdxThetaP], ctx.inventory, p.gravity);

  Vec2<T> f_hs;
  T m_hs;
  hydrostatic_loads(x[kIdxZp], x[kIdxThetaP], ctx.hydrostatics, p.z_platform_cog, p.rho_water,
                    p.gravity, &f_hs, &m_hs);
  out.hydrostatic[0] = f_hs[0];
  out.hydrostatic[1] = f_hs[1];
  out.hydrostatic[2] = m_hs;

  out.rotor = aero::aero_loads(env.wind(t), x[kIdxVx], x[kIdxVz], x[kIdxOmegaY], x[kIdxThetaP],
                               x[kIdxOmega], x[kIdxThetaB], ctx.surface, ctx.aero_geom);
  out.aerodynamic[0] = out.rotor.thrust;
  out.aerodynamic[2] = out.rotor.thrust * ctx.aero_geom.z_hub;
  out.aerodynamic[3] = out.rotor.torque;

  const auto moor = mooring::mooring_loads(x[kIdxXp], x[kIdxZp], x[kIdxThetaP], p.layout,
                                           *ctx.surrogate, /*clamp_domain=*/true);
  out.mooring[0] = moor.force[0];
  out.mooring[1] = moor.force[1];
  out.mooring[2] = moor.moment;

  const env::WaveKinematics kin = env.waves.active() ? env.waves.at(t) : env::WaveKinematics{};
  Vec2<T> f_hd;
  T m_hd;
  env::wave_loads(x[kIdxVx], x[kIdxVz], x[kIdxOmegaY], x[kIdxThetaP], kin, ctx.morison, &f_hd,
                  &m_hd);
  out.hydrodynamic[0] = f_hd[0];
  out.hydrodynamic[1] = f_hd[1];
  out.hydrodynamic[2] = m_hd;
  return out;
}

/// Time derivative of the full state. Pure in all inputs; AD scalars
/// propagate through every load path.
template <typename T>
StateVec<T> state_derivative(const PlantContext& ctx, const Environment& env, double t,
                             const StateVec<T>& x, const ControlVec<T>& u,
                             LoadDecomposition<T>* loads_out = nullptr) {
  using std::cos;
  using std::sin;
  const LoadDecomposition<T> loads = compute_loads(ctx, env, t, x);

  Vec4<T> rhs = loads.total();
  rhs[3] -= x[kIdxTauG];  // generator reaction on the rotor DOF

  Vec4<T> vel;
  vel << x[kIdxVx], x[kIdxVz], x[kIdxOmegaY], x[kIdxOmega];
  rhs -= coriolis_loads(vel, ctx.m_sys, ctx.hydro);
  const Vec4<T> acc = apply(ctx.mass_inverse, rhs);

  const T c = cos(x[kIdxThetaP]);
  const T s = sin(x[kIdxThetaP]);
  StateVec<T> dx;
  dx[kIdxXp] = c * x[kIdxVx] + s * x[kIdxVz];
  dx[kIdxZp] = -s * x[kIdxVx] + c * x[kIdxVz];
  dx[kIdxThetaP] = x[kIdxOmegaY];
  dx[kIdxVx] = acc[0];
  dx[kIdxVz] = acc[1];
  dx[kIdxOmegaY] = acc[2];
  dx[kIdxOmega] = acc[3];
  dx[kIdxThetaB] = u[0];
  dx[kIdxTauG] = u[1];
  if (loads_out) *loads_out = loads;
  return dx;
}

/// Mechanical energy of the free platform (no wind, no mooring, no drag):
/// kinetic plus the exact potential of gravity and the hydrostatic loads.
/// Conserved by the derivative field; used by the conservation tests.
inline double mechanical_energy(const PlantContext& ctx, const StateVec<double>& x) {
  Vec4<double> vel;
  vel << x[kIdxVx], x[kIdxVz], x[kIdxOmegaY], x[kIdxOmega];
  const double kinetic = 0.5 * vel.dot((ctx.m_sys + ctx.added_mass) * vel);

  const PlantParams& p = ctx.params;
  const double m_T = ctx.inventory.total_mass();
  const double z_cg = (ctx.inventory.D_rotor * (ctx.inventory.m_rotor + ctx.inventory.m_nacelle) +
                       ctx.inventory.m_tower * ctx.inventory.D_tower) /
                      m_T;
  const double x_cg = (ctx.inventory.d_nacelle * ctx.inventory.m_nacelle -
                       ctx.inventory.d_rotor * ctx.inventory.m_rotor) /
                      m_T;
  const double th = x[kIdxThetaP];
  const double u_grav =
      m_T * p.gravity * (x[kIdxZp] + std::cos(th) * z_cg - std::sin(th) * x_cg);

  const Hydrostatics& hs = ctx.hydrostatics;
  const double rho_g = p.rho_water * p.gravity;
  const double u_heave =
      -rho_g * (hs.displaced_volume * x[kIdxZp] - 0.5 * hs.waterplane_area * x[kIdxZp] * x[kIdxZp]);
  const double cb_arm = hs.z_buoyancy - p.z_platform_cog;
  const double u_pitch =
      -(rho_g * hs.displaced_volume * cb_arm + rho_g * hs.waterplane_inertia) * std::cos(th);
  return kinetic + u_grav + u_heave + u_pitch;
}

/// Static pose equilibrium (surge, heave, pitch) under the full load model
/// at rest, solved by a damped Newton iteration with AD Jacobian.
Vec<double, 3> solve_static_equilibrium(const PlantContext& ctx, const Environment& env,
                                        double rotor_speed = 0.0, double blade_pitch = 0.0,
                                        double gen_torque = 0.0);

/// Generator power at the rotor side, unit efficiency.
template <typename T>
T generator_power(const StateVec<T>& x) {
  return x[kIdxTauG] * x[kIdxOmega];
}

}  // namespace fowt
