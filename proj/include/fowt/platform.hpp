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

#include "fowt/types.hpp"

namespace fowt {

/// Axisymmetric hull made of stacked conical frusta. Elevations are earth
/// z at the design draught (z = 0 at the still water line, up positive).
struct SparSection {
  double z_bottom = 0.0;
  double z_top = 0.0;
  double d_bottom = 0.0;  // outer diameter at z_bottom [m]
  double d_top = 0.0;     // outer diameter at z_top [m]
};

struct SparGeometry {
  std::vector<SparSection> sections;

  double diameter_at(double z) const {
    for (const auto& s : sections) {
      if (z >= s.z_bottom - 1e-12 && z <= s.z_top + 1e-12) {
        const double f = (z - s.z_bottom) / (s.z_top - s.z_bottom);
        return s.d_bottom + f * (s.d_top - s.d_bottom);
      }
    }
    throw ModelError("invalid-hydro", "elevation outside hull definition");
  }

  double z_base() const { return sections.front().z_bottom; }
  double z_deck() const { return sections.back().z_top; }
};

/// OC3-Hywind-style spar: 9.4 m base column, taper between -12 and -4 m,
/// 6.5 m upper column, 120 m draught, 10 m freeboard.
inline SparGeometry oc3_spar() {
  SparGeometry g;
  g.sections = {{-120.0, -12.0, 9.4, 9.4}, {-12.0, -4.0, 9.4, 6.5}, {-4.0, 10.0, 6.5, 6.5}};
  return g;
}

/// Design-draught hydrostatic properties from strip integration of the
/// submerged hull (z < 0).
struct Hydrostatics {
  double displaced_volume = 0.0;   // V_d at design draught [m^3]
  double z_buoyancy = 0.0;         // center of buoyancy, earth z [m]
  double waterplane_area = 0.0;    // A_wp [m^2]
  double waterplane_inertia = 0.0; // I_wp [m^4]
  double I_displaced = 0.0;        // rho * second moment of V_d about the platform COG [kg m^2]
  double heave_min = 0.0;          // model envelope on platform heave [m]
  double heave_max = 0.0;
};

inline Hydrostatics spar_hydrostatics(const SparGeometry& geom, double z_platform_cog,
                                      double rho_water, int strips_per_section = 400) {
  Hydrostatics h;
  double v = 0.0, vz = 0.0, izz = 0.0;
  for (const auto& sec : geom.sections) {
    const double z_hi = std::min(sec.z_top, 0.0);
    if (z_hi <= sec.z_bottom) continue;
    const double dz = (z_hi - sec.z_bottom) / strips_per_section;
    for (int i = 0; i < strips_per_section; ++i) {
      const double z = sec.z_bottom + (i + 0.5) * dz;
      const double f = (z - sec.z_bottom) / (sec.z_top - sec.z_bottom);
      const double d = sec.d_bottom + f * (sec.d_top - sec.d_bottom);
      const double a = kPi / 4.0 * d * d;
      v += a * dz;
      vz += a * z * dz;
      const double arm = z - z_platform_cog;
      izz += a * arm * arm * dz;
    }
  }
  h.displaced_volume = v;
  h.z_buoyancy = vz / v;
  const double d_wl = geom.diameter_at(0.0);
  h.waterplane_area = kPi / 4.0 * d_wl * d_wl;
  h.waterplane_inertia = kPi / 64.0 * std::pow(d_wl, 4);
  h.I_displaced = rho_water * izz;

  // The linear-heave model is valid while the waterline stays on the
  // wall-sided column; beyond that the platform is treated as leaving the
  // modeled envelope (toward full submergence / emergence).
  const auto& top = geom.sections.back();
  h.heave_min = -(top.z_top);        // deck reaches the waterline
  h.heave_max = -(top.z_bottom);     // waterline reaches the taper
  return h;
}

/// Body-frame hydrostatic loads about the platform COG.
///
/// Buoyancy magnitude varies linearly with heave through the waterplane
/// area; the restoring moment combines the buoyancy-center offset (at the
/// design buoyancy) with the waterplane inertia term. This load set is the
/// exact gradient of a potential, which the energy-conservation tests rely
/// on.
template <typename T>
void hydrostatic_loads(const T& z_p, const T& pitch, const Hydrostatics& hs,
                       double z_platform_cog, double rho_water, double gravity,
                       Vec2<T>* force, T* moment) {
  using std::cos;
  using std::sin;
  if (val(z_p) < hs.heave_min || val(z_p) > hs.heave_max)
    throw ModelError("out-of-envelope", "platform heave outside hydrostatic model range");
  const double b0 = rho_water * gravity * hs.displaced_volume;
  const T buoy = b0 - rho_water * gravity * hs.waterplane_area * z_p;
  const T sin_p = sin(pitch);
  const T cos_p = cos(pitch);
  (*force)[0] = -buoy * sin_p;
  (*force)[1] = buoy * cos_p;
  const double cb_arm = hs.z_buoyancy - z_platform_cog;
  *moment = -(b0 * cb_arm + rho_water * gravity * hs.waterplane_inertia) * sin_p;
}

}  // namespace fowt
