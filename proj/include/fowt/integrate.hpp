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

// Dormand-Prince 5(4) embedded Runge-Kutta with PI step control and the
// standard quartic dense-output interpolant.

#pragma once

#include <string>
#include <vector>

#include "fowt/types.hpp"

namespace fowt {

struct IntegrateOptions {
  double rel_tol = 1e-7;
  double abs_tol = 1e-9;
  double initial_step = 1e-2;
  double max_step = 5.0;
  long max_steps = 5000000;
};

template <int N>
struct OdeSolution {
  std::vector<double> times;
  std::vector<Vec<double, N>> states;  // at the requested sample times
  Vec<double, N> final_state = Vec<double, N>::Zero();
  long accepted = 0;
  long rejected = 0;
};

/// Integrates dy/dt = rhs(t, y) over [t0, t1], producing dense output at
/// the given sample times (must be ascending within [t0, t1]). Throws a
/// stiffness error with the failing time in the message if the step size
/// underflows.
template <int N, typename Rhs>
OdeSolution<N> integrate_dopri5(Rhs&& rhs, double t0, double t1, const Vec<double, N>& y0,
                                const std::vector<double>& sample_times,
                                const IntegrateOptions& opts = {}) {
  using V = Vec<double, N>;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                          a64 = 49.0 / 176, a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                          b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;
  // Dense-output weights (Hairer, Norsett, Wanner DOPRI5 rcont5).
  static constexpr double d1 = -12715105075.0 / 11282082432.0;
  static constexpr double d3 = 87487479700.0 / 32700410799.0;
  static constexpr double d4 = -10690763975.0 / 1880347072.0;
  static constexpr double d5 = 701980252875.0 / 199316789632.0;
  static constexpr double d6 = -1453857185.0 / 822651844.0;
  static constexpr double d7 = 69997945.0 / 29380423.0;

  if (!(t1 > t0)) throw ModelError("invalid-argument", "integration span must be positive");

  OdeSolution<N> out;
  out.times = sample_times;
  out.states.resize(sample_times.size());
  std::size_t next_sample = 0;
  auto emit_exact = [&](double t, const V& y) {
    while (next_sample < sample_times.size() && sample_times[next_sample] <= t + 1e-12) {
      out.states[next_sample] = y;
      ++next_sample;
    }
  };

  double t = t0;
  V y = y0;
  V k1 = rhs(t, y);
  emit_exact(t0, y);
  double h = std::min(opts.initial_step, t1 - t0);

  for (long step = 0; step < opts.max_steps && t < t1 - 1e-12; ++step) {
    h = std::min(h, t1 - t);
    const V k2 = rhs(t + h / 5, (y + h * (a21 * k1)).eval());
    const V k3 = rhs(t + 3 * h / 10, (y + h * (a31 * k1 + a32 * k2)).eval());
    const V k4 = rhs(t + 4 * h / 5, (y + h * (a41 * k1 + a42 * k2 + a43 * k3)).eval());
    const V k5 =
        rhs(t + 8 * h / 9, (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4)).eval());
    const V k6 = rhs(t + h, (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5)).eval());
    const V y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const V k7 = rhs(t + h, y_new);
    const V err_vec = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    double err = 0.0;
    for (int i = 0; i < N; ++i) {
      const double scale =
          opts.abs_tol + opts.rel_tol * std::max(std::abs(y[i]), std::abs(y_new[i]));
      const double r = err_vec[i] / scale;
      err += r * r;
    }
    err = std::sqrt(err / N);

    if (err <= 1.0) {
      // Dense output over [t, t+h] for samples inside the step.
      const V ydiff = y_new - y;
      const V rcont3 = h * k1 - ydiff;
      const V rcont4 = ydiff - h * k7 - rcont3;
      const V rcont5 =
          h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
      while (next_sample < sample_times.size() && sample_times[next_sample] <= t + h + 1e-12) {
        const double theta = std::clamp((sample_times[next_sample] - t) / h, 0.0, 1.0);
        out.states[next_sample] =
            y + theta * (ydiff + (1 - theta) * (rcont3 + theta * (rcont4 + (1 - theta) * rcont5)));
        ++next_sample;
      }
      t += h;
      y = y_new;
      k1 = k7;  // FSAL
      ++out.accepted;
    } else {
      ++out.rejected;
    }
    const double factor = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
    h *= factor;
    h = std::min(h, opts.max_step);
    if (h < 1e-12 * std::max(std::abs(t), 1.0))
      throw ModelError("stiffness", "step size underflow at t = " + std::to_string(t));
  }
  if (t < t1 - 1e-9)
    throw ModelError("stiffness", "step budget exhausted at t = " + std::to_string(t));
  emit_exact(t1, y);
  out.final_state = y;
  return out;
}

}  // namespace fowt
