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

#include "fowt/env/waves.hpp"
#include "fowt/env/wind.hpp"

namespace fowt::env {

WindBinSet weibull_bins(double shape, double scale, double lo, double hi, double step) {
  if (!(shape > 0.0) || !(scale > 0.0))
    throw ModelError("invalid-argument", "Weibull parameters must be positive");
  if (!(step > 0.0) || hi < lo)
    throw ModelError("invalid-argument", "empty wind bin range");
  WindBinSet set;
  set.shape = shape;
  set.scale = scale;
  double total = 0.0;
  for (double u = lo; u <= hi + 1e-9; u += step) {
    set.centers.push_back(u);
    const double f = weibull_pdf(shape, scale, u);
    set.probabilities.push_back(f);
    total += f;
  }
  if (set.centers.empty()) throw ModelError("invalid-argument", "empty wind bin range");
  for (double& p : set.probabilities) p /= total;
  return set;
}

MorisonModel make_morison(const SparGeometry& geom, const Hydrostatics& hs,
                          const HydroParams& hydro, double z_platform_cog, int strips) {
  MorisonModel m;
  m.rho_water = hydro.rho_water;
  m.inertia_coeff_x =
      hydro.rho_water * hs.displaced_volume + hydro.c_added_mass * hydro.rho_water * hs.displaced_volume;
  m.inertia_coeff_z = hydro.rho_water * hs.displaced_volume +
                      hydro.c_added_mass * hydro.rho_water * kPi *
                          std::pow(hydro.base_diameter, 3) / 12.0;
  m.z_cb_body = hs.z_buoyancy - z_platform_cog;
  m.base_area = kPi / 4.0 * hydro.base_diameter * hydro.base_diameter;

  const double z_bottom = geom.z_base();
  const double dz = (0.0 - z_bottom) / strips;
  for (int i = 0; i < strips; ++i) {
    const double z = z_bottom + (i + 0.5) * dz;
    m.strips.push_back({z - z_platform_cog, geom.diameter_at(z), dz});
  }
  return m;
}

}  // namespace fowt::env
