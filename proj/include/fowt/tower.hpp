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

#include "fowt/types.hpp"

namespace fowt {

/// Tapered hollow tower. Outer diameter runs d_base -> d_tip and wall
/// thickness t_base -> t_tip, both linear in the span coordinate. d_base is
/// a fixed model constant, not a design variable.
struct TowerDesign {
  double t_base = 0.027;  // wall thickness at base [m]
  double t_tip = 0.019;   // wall thickness at tip [m]
  double d_tip = 3.870;   // outer diameter at tip [m]
  double length = 77.600; // tower length [m]
  double d_base = 6.5;    // outer diameter at base [m], fixed

  void validate() const {
    if (!(t_base > 0.0) || !(t_tip > 0.0))
      throw ModelError("invalid-design", "tower wall thickness must be positive");
    if (!(d_tip > 2.0 * t_tip))
      throw ModelError("invalid-design", "tower tip inner diameter <= 0");
    if (!(d_base > 2.0 * t_base))
      throw ModelError("invalid-design", "tower base inner diameter <= 0");
    if (!(length > 0.0))
      throw ModelError("invalid-design", "tower length must be positive");
  }
};

struct TowerProperties {
  double mass = 0.0;            // [kg]
  double inertia_y = 0.0;       // pitch inertia about the tower COG [kg m^2]
  double cog_height = 0.0;      // COG height above the tower base [m]
  double section_modulus = 0.0; // base annulus S = I / (d_base/2) [m^3]
};

/// Mass, pitch inertia, COG, and base section modulus of the tapered hollow
/// frustum by composite-Simpson quadrature over the span (the section area
/// is quadratic in the span coordinate, so Simpson integrates the mass
/// exactly; the inertia integrand is degree-4 and converges immediately at
/// the slice counts used here).
inline TowerProperties tower_properties(const TowerDesign& t, double steel_density,
                                        int slices = 400) {
  t.validate();
  if (slices < 100) slices = 100;
  if (slices % 2 != 0) ++slices;

  const double L = t.length;
  auto outer_d = [&](double s) { return t.d_base + (t.d_tip - t.d_base) * s; };
  auto wall = [&](double s) { return t.t_base + (t.t_tip - t.t_base) * s; };
  auto area = [&](double s) {
    const double d = outer_d(s);
    const double w = wall(s);
    const double di = d - 2.0 * w;
    if (di <= 0.0)
      throw ModelError("invalid-design", "tower inner diameter <= 0 along span");
    return kPi / 4.0 * (d * d - di * di);
  };

  // Simpson weights over s in [0,1].
  double m0 = 0.0, m1 = 0.0, m2 = 0.0;  // mass moments about the base
  const double hs = 1.0 / slices;
  for (int i = 0; i <= slices; ++i) {
    const double s = i * hs;
    const double w = (i == 0 || i == slices) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    const double a = area(s);
    m0 += w * a;
    m1 += w * a * s;
    m2 += w * a * s * s;
  }
  const double scale = steel_density * L * hs / 3.0;
  m0 *= scale;
  m1 *= scale * L;
  m2 *= scale * L * L;

  TowerProperties p;
  p.mass = m0;
  p.cog_height = m1 / m0;
  // Parallel-axis shift of the span second moment to the COG. Radial wall
  // inertia of the thin shell is negligible against the span term and is
  // not included.
  p.inertia_y = m2 - m0 * p.cog_height * p.cog_height;

  const double di = t.d_base - 2.0 * t.t_base;
  const double I_section = kPi / 64.0 * (std::pow(t.d_base, 4) - std::pow(di, 4));
  p.section_modulus = I_section / (t.d_base / 2.0);
  return p;
}

/// Quasi-static fore-aft bending stress at the tower base from hub thrust.
template <typename T>
T tower_stress(const T& thrust, double tower_length, double section_modulus) {
  using std::abs;
  return abs(thrust) * (tower_length / section_modulus);
}

}  // namespace fowt
