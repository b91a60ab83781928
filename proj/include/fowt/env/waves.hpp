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

#include "fowt/platform.hpp"
#include "fowt/rigid_body.hpp"
#include "fowt/rng.hpp"
#include "fowt/types.hpp"

namespace fowt::env {

struct WaveSpec {
  double significant_height = 0.0;  // H_s [m]; 0 turns wave forcing off
  double peak_period = 10.0;        // T_p [s]
  int components = 50;
  std::uint64_t seed = 7;

  void validate() const {
    if (significant_height < 0.0 || !(peak_period > 0.0))
      throw ModelError("invalid-argument", "wave spec out of range");
  }
};

struct WaveKinematics {
  double elevation = 0.0;
  double vel_x = 0.0;
  double vel_z = 0.0;
  double acc_x = 0.0;
  double acc_z = 0.0;
};

/// Linear irregular sea: Pierson-Moskowitz-type spectrum parameterized by
/// (H_s, T_p), random phases from the seed, deep-water Airy kinematics
/// evaluated at a single representative depth.
class WaveField {
 public:
  WaveField() = default;  // calm water

  WaveField(const WaveSpec& spec, double z_reference, double gravity = 9.81)
      : z_ref_(z_reference) {
    spec.validate();
    if (spec.significant_height == 0.0) return;
    Rng rng(spec.seed);
    const double fp = 1.0 / spec.peak_period;
    const double f_lo = 0.5 * fp, f_hi = 4.0 * fp;
    const double df = (f_hi - f_lo) / spec.components;
    const double hs = spec.significant_height;
    for (int i = 0; i < spec.components; ++i) {
      const double f = f_lo + (i + 0.5) * df;
      const double s = 5.0 / 16.0 * hs * hs * std::pow(fp, 4) / std::pow(f, 5) *
                       std::exp(-1.25 * std::pow(fp / f, 4));
      const double omega = 2.0 * kPi * f;
      amplitude_.push_back(std::sqrt(2.0 * s * df));
      omega_.push_back(omega);
      wavenumber_.push_back(omega * omega / gravity);
      phase_.push_back(rng.uniform(0.0, 2.0 * kPi));
    }
  }

  bool active() const { return !amplitude_.empty(); }
  double reference_depth() const { return z_ref_; }

  /// Amplitude variance identity: sum a_i^2 / 2 equals the integrated
  /// spectrum over the synthesis band.
  double elevation_variance() const {
    double v = 0.0;
    for (double a : amplitude_) v += 0.5 * a * a;
    return v;
  }

  WaveKinematics at(double t) const {
    WaveKinematics k;
    for (std::size_t i = 0; i < amplitude_.size(); ++i) {
      const double a = amplitude_[i];
      const double w = omega_[i];
      const double decay = std::exp(wavenumber_[i] * z_ref_);
      const double arg = -w * t + phase_[i];
      const double c = std::cos(arg), s = std::sin(arg);
      k.elevation += a * c;
      k.vel_x += a * w * decay * c;
      k.vel_z += a * w * decay * s;
      k.acc_x += a * w * w * decay * s;
      k.acc_z -= a * w * w * decay * c;
    }
    return k;
  }

 private:
  double z_ref_ = 0.0;
  std::vector<double> amplitude_;
  std::vector<double> omega_;
  std::vector<double> wavenumber_;
  std::vector<double> phase_;
};

/// Strip model for Morison drag plus lumped inertia forcing on the spar.
struct MorisonModel {
  struct Strip {
    double z_body;    // strip center above the platform COG [m]
    double diameter;  // [m]
    double dz;        // [m]
  };
  std::vector<Strip> strips;
  double rho_water = 1025.0;
  double drag_coeff = 0.6;
  double axial_drag_coeff = 1.2;
  double inertia_coeff_x = 0.0;  // rho V_d + A11
  double inertia_coeff_z = 0.0;  // rho V_d + A22
  double z_cb_body = 0.0;        // lumped-force arm above the COG [m]
  double base_area = 0.0;
  double enabled = 1.0;  // 0 disables viscous drag (test configurations)
};

MorisonModel make_morison(const SparGeometry& geom, const Hydrostatics& hs,
                          const HydroParams& hydro, double z_platform_cog, int strips = 24);

/// Morison loads from the relative fluid-body velocity: per-strip quadratic
/// drag (summed into surge force and pitch moment), axial drag on the base,
/// and the lumped inertia force from fluid acceleration applied at the
/// added-mass center. With calm water this reduces to viscous damping on
/// the moving hull.
template <typename T>
void wave_loads(const T& v_x, const T& v_z, const T& omega_y, const T& pitch,
                const WaveKinematics& kin, const MorisonModel& model, Vec2<T>* force,
                T* moment) {
  using std::abs;
  using std::cos;
  using std::sin;
  const T c = cos(pitch);
  const T s = sin(pitch);
  // Earth-frame fluid kinematics rotated into the body frame.
  const T uf_x = c * kin.vel_x - s * kin.vel_z;
  const T uf_z = s * kin.vel_x + c * kin.vel_z;
  const T af_x = c * kin.acc_x - s * kin.acc_z;
  const T af_z = s * kin.acc_x + c * kin.acc_z;

  T f_x = model.inertia_coeff_x * af_x;
  T f_z = model.inertia_coeff_z * af_z;
  T m_y = model.z_cb_body * (model.inertia_coeff_x * af_x);

  for (const auto& strip : model.strips) {
    const T u_rel = uf_x - (v_x + omega_y * strip.z_body);
    const T df = (0.5 * model.rho_water * model.drag_coeff * strip.diameter * strip.dz *
                  model.enabled) *
                 abs(u_rel) * u_rel;
    f_x += df;
    m_y += strip.z_body * df;
  }
  const T w_rel = uf_z - v_z;
  f_z += (0.5 * model.rho_water * model.axial_drag_coeff * model.base_area * model.enabled) *
         abs(w_rel) * w_rel;

  (*force)[0] = f_x;
  (*force)[1] = f_z;
  *moment = m_y;
}

}  // namespace fowt::env
