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

#include "fowt/dynamics.hpp"

#include "fowt/dual.hpp"

namespace fowt {

Vec<double, 3> solve_static_equilibrium(const PlantContext& ctx, const Environment& env,
                                        double rotor_speed, double blade_pitch,
                                        double gen_torque) {
  using D = Dual<3>;
  Vec<double, 3> pose = Vec<double, 3>::Zero();
  const double force_scale = ctx.inventory.total_mass() * ctx.params.gravity;

  auto residual = [&](const Vec<double, 3>& q, Vec<double, 3>* r, Mat<double, 3, 3>* jac) {
    StateVec<D> x;
    for (int i = 0; i < kStateDim; ++i) x[i] = D(0.0);
    x[kIdxXp] = D::seed(q[0], 0);
    x[kIdxZp] = D::seed(q[1], 1);
    x[kIdxThetaP] = D::seed(q[2], 2);
    x[kIdxOmega] = D(rotor_speed);
    x[kIdxThetaB] = D(blade_pitch);
    x[kIdxTauG] = D(gen_torque);
    const auto loads = compute_loads(ctx, env, 0.0, x);
    const Vec4<D> total = loads.total();
    for (int i = 0; i < 3; ++i) {
      (*r)[i] = total[i].v;
      for (int j = 0; j < 3; ++j) (*jac)(i, j) = total[i].d[j];
    }
  };

  Vec<double, 3> r;
  Mat<double, 3, 3> jac;
  residual(pose, &r, &jac);
  for (int it = 0; it < 60; ++it) {
    if (r.norm() < 1e-9 * force_scale) break;
    const Vec<double, 3> step = jac.partialPivLu().solve(-r);
    double alpha = 1.0;
    for (int ls = 0; ls < 30; ++ls) {
      Vec<double, 3> trial = pose + alpha * step;
      trial[1] = std::clamp(trial[1], ctx.hydrostatics.heave_min + 0.2,
                            ctx.hydrostatics.heave_max - 0.2);
      trial[2] = std::clamp(trial[2], -0.35, 0.35);
      Vec<double, 3> r_trial;
      Mat<double, 3, 3> jac_trial;
      residual(trial, &r_trial, &jac_trial);
      if (r_trial.norm() < r.norm() || alpha < 1e-6) {
        pose = trial;
        r = r_trial;
        jac = jac_trial;
        break;
      }
      alpha *= 0.5;
    }
  }
  if (!(r.norm() < 1e-6 * force_scale))
    throw ModelError("root-find", "static equilibrium iteration did not converge");
  return pose;
}

}  // namespace fowt
