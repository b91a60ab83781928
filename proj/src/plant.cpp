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

#include "fowt/plant.hpp"

#include <Eigen/LU>

#include "fowt/mooring/catenary.hpp"

namespace fowt {

double ballast_equilibrium(const PlantParams& params, double tower_mass,
                           double* static_mooring_vertical) {
  const Hydrostatics hs =
      spar_hydrostatics(params.spar, params.z_platform_cog, params.rho_water);

  // Static pretension from the exact catenary at the design pose.
  const double span0 = params.layout.anchor_radius - params.layout.fairlead_radius;
  const double drop0 = params.layout.fairlead_z - params.layout.anchor_z;
  double vertical = 0.0;
  for (const auto& line : params.layout.lines)
    vertical += line.multiplicity * mooring::solve_catenary(span0, drop0, params.line).f_vertical;
  if (static_mooring_vertical) *static_mooring_vertical = vertical;

  const double buoyant_mass = params.rho_water * hs.displaced_volume;
  const double structure = params.hull_mass + tower_mass + params.nacelle_mass + params.rotor_mass;
  const double ballast = buoyant_mass - vertical / params.gravity - structure;
  if (ballast < 0.0)
    throw ModelError("infeasible-plant",
                     "tower too heavy: variable ballast would be negative");
  return ballast;
}

PlantContext make_plant(const PlantParams& params, const TowerDesign& tower,
                        aero::CoefficientSurface surface,
                        const mooring::MooringSurrogate* surrogate) {
  PlantContext ctx;
  ctx.params = params;
  ctx.tower = tower;
  ctx.tower_props = tower_properties(tower, params.steel_density);
  ctx.hydrostatics = spar_hydrostatics(params.spar, params.z_platform_cog, params.rho_water);
  ctx.variable_ballast =
      ballast_equilibrium(params, ctx.tower_props.mass, &ctx.static_mooring_vertical);

  const double z_tower_base = params.tower_base_elevation - params.z_platform_cog;
  RigidBodyInventory& inv = ctx.inventory;
  inv.m_platform = params.hull_mass + ctx.variable_ballast;
  inv.m_tower = ctx.tower_props.mass;
  inv.m_nacelle = params.nacelle_mass;
  inv.m_rotor = params.rotor_mass;
  inv.I_platform_y = params.I_platform_y;
  inv.I_tower_y = ctx.tower_props.inertia_y;
  inv.I_nacelle_y = params.I_nacelle_y;
  inv.I_rotor_y = params.I_rotor_y;
  inv.I_rotor_x = params.I_rotor_x;
  inv.d_rotor = params.d_rotor;
  inv.d_nacelle = params.d_nacelle;
  inv.D_tower = z_tower_base + ctx.tower_props.cog_height;
  inv.D_rotor = z_tower_base + tower.length + params.hub_above_tower_top;

  HydroParams& hydro = ctx.hydro;
  hydro.c_added_mass = params.c_added_mass;
  hydro.rho_water = params.rho_water;
  hydro.displaced_volume = ctx.hydrostatics.displaced_volume;
  hydro.base_diameter = params.spar.sections.front().d_bottom;
  hydro.a_pf = params.z_platform_cog - params.spar.z_base();
  hydro.a_cv = ctx.hydrostatics.z_buoyancy - params.spar.z_base();
  hydro.I_displaced = ctx.hydrostatics.I_displaced;
  hydro.gravity = params.gravity;

  ctx.m_sys = assemble_mass_matrix(inv);
  ctx.added_mass = assemble_added_mass(hydro);
  const Mat4<double> total = ctx.m_sys + ctx.added_mass;
  Eigen::FullPivLU<Mat4<double>> lu(total);
  if (!lu.isInvertible())
    throw ModelError("model", "generalized mass matrix is singular");
  ctx.mass_inverse = lu.inverse();

  ctx.morison = env::make_morison(params.spar, ctx.hydrostatics, hydro, params.z_platform_cog);
  ctx.morison.drag_coeff = params.drag_coeff;
  ctx.morison.axial_drag_coeff = params.axial_drag_coeff;

  ctx.aero_geom.rotor_radius = params.rotor_radius;
  ctx.aero_geom.rho_air = params.rho_air;
  ctx.aero_geom.z_hub = inv.D_rotor;
  ctx.surface = std::move(surface);
  ctx.surrogate = surrogate;
  return ctx;
}

}  // namespace fowt
