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

#include <vector>

#include "fowt/rng.hpp"
#include "fowt/types.hpp"

namespace fowt::env {

struct WindBinSet {
  std::vector<double> centers;        // nominal free wind speeds [m/s]
  std::vector<double> probabilities;  // renormalized to unit sum
  double shape = 2.0;
  double scale = 13.44;
};

inline double weibull_pdf(double k, double c, double u) {
  return k / c * std::pow(u / c, k - 1.0) * std::exp(-std::pow(u / c, k));
}

/// Weibull occurrence probabilities at 1 m/s-spaced bin centers,
/// renormalized to sum to one over the cut-in..cut-out range.
WindBinSet weibull_bins(double shape, double scale, double lo = 3.0, double hi = 25.0,
                        double step = 1.0);

/// Power-law shear from the nominal hub height to the hub height implied by
/// the tower length.
inline double shear_adjust(double u_nominal, double tower_length, double z_base = 12.4,
                           double l_baseline = 76.0) {
  if (!(tower_length > 0.0))
    throw ModelError("invalid-argument", "tower length must be positive");
  return u_nominal * std::pow((tower_length + z_base) / (l_baseline + z_base), 0.2);
}

struct WindTemplateParams {
  int components = 4;
  double base_frequency = 0.04;   // [Hz]
  double frequency_ratio = 1.37;  // geometric spacing, incommensurate-ish
  double amplitude_fraction = 0.08;
  std::uint64_t seed = 42;
};

/// Deterministic fluctuation template around a mean speed:
/// u(t) = u_mean * (1 + frac * s(t)) with s a seeded sum of sinusoids whose
/// exact average over [0, duration] is subtracted, so the time average of
/// u equals u_mean by construction. Smooth in t for collocation use.
class WindProfile {
 public:
  WindProfile() = default;  // steady at zero

  WindProfile(double u_mean, double duration, const WindTemplateParams& params)
      : u_mean_(u_mean), fraction_(params.amplitude_fraction) {
    Rng rng(params.seed);
    double norm = 0.0;
    for (int i = 0; i < params.components; ++i) norm += 1.0 / (1.0 + i);
    for (int i = 0; i < params.components; ++i) {
      const double amp = (1.0 / (1.0 + i)) / norm;
      const double omega =
          2.0 * kPi * params.base_frequency * std::pow(params.frequency_ratio, i);
      const double phase = rng.uniform(0.0, 2.0 * kPi);
      amplitude_.push_back(amp);
      omega_.push_back(omega);
      phase_.push_back(phase);
      // Analytic average of sin(omega t + phase) over [0, duration].
      mean_offset_ += amp * (std::cos(phase) - std::cos(omega * duration + phase)) /
                      (omega * duration);
    }
  }

  static WindProfile steady(double u_mean) {
    WindProfile p;
    p.u_mean_ = u_mean;
    return p;
  }

  double operator()(double t) const {
    double s = -mean_offset_;
    for (std::size_t i = 0; i < amplitude_.size(); ++i)
      s += amplitude_[i] * std::sin(omega_[i] * t + phase_[i]);
    return u_mean_ * (1.0 + fraction_ * s);
  }

  double mean_speed() const { return u_mean_; }

 private:
  double u_mean_ = 0.0;
  double fraction_ = 0.0;
  double mean_offset_ = 0.0;
  std::vector<double> amplitude_;
  std::vector<double> omega_;
  std::vector<double> phase_;
};

}  // namespace fowt::env
