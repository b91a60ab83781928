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

#include <functional>

#include "fowt/dynamics.hpp"
#include "fowt/integrate.hpp"

namespace fowt {

/// Control-rate trajectories (blade pitch rate, torque rate) as functions
/// of time; the transcription supplies its own interpolated representation.
using ControlRates = std::function<ControlVec<double>(double)>;

struct SimulationOutput {
  std::vector<double> times;
  std::vector<StateVec<double>> states;
  std::vector<double> generator_power;  // P_u at the samples [W]
  std::vector<double> tower_stress;     // sigma at the samples [Pa]
  long accepted_steps = 0;
  long rejected_steps = 0;
};

/// Adaptive forward integration of the plant under given control rates,
/// with dense output at the requested sample times.
inline SimulationOutput simulate_forward(const PlantContext& ctx, const Environment& env,
                                         const ControlRates& rates,
                                         const StateVec<double>& x0, double t0, double t1,
                                         const std::vector<double>& sample_times,
                                         const IntegrateOptions& opts = {}) {
  auto rhs = [&](double t, const StateVec<double>& x) {
    return state_derivative(ctx, env, t, x, rates(t));
  };
  const auto ode = integrate_dopri5<kStateDim>(rhs, t0, t1, x0, sample_times, opts);

  SimulationOutput out;
  out.times = ode.times;
  out.states = ode.states;
  out.accepted_steps = ode.accepted;
  out.rejected_steps = ode.rejected;
  out.generator_power.reserve(out.times.size());
  out.tower_stress.reserve(out.times.size());
  for (std::size_t i = 0; i < out.times.size(); ++i) {
    const auto loads = compute_loads(ctx, env, out.times[i], out.states[i]);
    out.generator_power.push_back(generator_power(out.states[i]));
    out.tower_stress.push_back(tower_stress(val(loads.rotor.thrust), ctx.tower.length,
                                            ctx.tower_props.section_modulus));
  }
  return out;
}

}  // namespace fowt
