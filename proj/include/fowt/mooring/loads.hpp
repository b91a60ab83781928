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

#include "fowt/mooring/surrogate.hpp"
#include "fowt/types.hpp"

namespace fowt::mooring {

/// Planar reduction of the three-line OC3-style layout: one upwind line and
/// the two downwind lines kept at their true azimuths, the symmetric pair
/// evaluated once with multiplicity two. Out-of-plane force components
/// cancel by symmetry.
struct MooringLayout {
  double fairlead_radius = 5.2;    // from the platform centerline [m]
  double fairlead_z = -70.0;       // earth z at design pose [m]
  double anchor_radius = 853.87;   // [m]
  double anchor_z = -320.0;        // earth z [m]
  double z_platform_cog = -89.9155;

  struct Line {
    double azimuth;       // [rad], 0 = downwind (+x)
    double multiplicity;  // physical lines represented
  };
  std::vector<Line> lines = {{kPi, 1.0}, {kPi / 3.0, 2.0}};

  double fairlead_z_body() const { return fairlead_z - z_platform_cog; }
};

template <typename T>
struct PlanarLoads {
  Vec2<T> force = Vec2<T>::Zero();  // body-frame surge/heave [N]
  T moment = T(0.0);                // body-frame pitch about the COG [N m]
};

/// Per-line fairlead offsets from the planar pose, forces through the
/// supplied line model, summed into body-frame surge/heave loads and a COG
/// pitch moment.
template <typename T, typename LineForceFn>
PlanarLoads<T> mooring_loads(const T& x_p, const T& z_p, const T& pitch,
                             const MooringLayout& layout, LineForceFn&& line_force) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T c = cos(pitch);
  const T s = sin(pitch);
  PlanarLoads<T> total;
  for (const auto& line : layout.lines) {
    const double ca = std::cos(line.azimuth);
    const double sa = std::sin(line.azimuth);
    const double r_fx = layout.fairlead_radius * ca;  // body frame
    const double r_fy = layout.fairlead_radius * sa;
    const double r_fz = layout.fairlead_z_body();

    const T x_fl = x_p + c * r_fx + s * r_fz;
    const T z_fl = layout.z_platform_cog + z_p - s * r_fx + c * r_fz;
    const double a_x = layout.anchor_radius * ca;
    const double a_y = layout.anchor_radius * sa;

    const T dx = a_x - x_fl;
    const double dy = a_y - r_fy;
    const T span = sqrt(dx * dx + dy * dy);
    const T drop = z_fl - layout.anchor_z;

    T f_h = T(0.0), f_v = T(0.0);
    line_force(span, drop, &f_h, &f_v);

    // Earth-frame components; the horizontal pull points from fairlead to
    // anchor, the vertical pull is downward.
    const T f_ex = f_h * (dx / span);
    const T f_ez = -f_v;
    const T f_bx = c * f_ex - s * f_ez;
    const T f_bz = s * f_ex + c * f_ez;

    total.force[0] += line.multiplicity * f_bx;
    total.force[1] += line.multiplicity * f_bz;
    total.moment += line.multiplicity * (r_fz * f_bx - r_fx * f_bz);
  }
  return total;
}

template <typename T>
PlanarLoads<T> mooring_loads(const T& x_p, const T& z_p, const T& pitch,
                             const MooringLayout& layout, const MooringSurrogate& surrogate,
                             bool clamp_domain = false) {
  return mooring_loads(x_p, z_p, pitch, layout,
                       [&](const T& span, const T& drop, T* f_h, T* f_v) {
                         if (clamp_domain)
                           surrogate.eval_clamped(span, drop, f_h, f_v);
                         else
                           surrogate.eval(span, drop, f_h, f_v);
                       });
}

}  // namespace fowt::mooring
