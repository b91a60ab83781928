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

#include "fowt/aero/loads.hpp"
#include "fowt/aero/surface.hpp"
#include "fowt/env/waves.hpp"
#include "fowt/mooring/loads.hpp"
#include "fowt/platform.hpp"
#include "fowt/rigid_body.hpp"
#include "fowt/tower.hpp"
#include "fowt/types.hpp"

namespace fowt {

/// Scenario-level constants of the reference system (NREL 5 MW turbine on
/// an OC3-Hywind-style spar). Tower and blade designs vary per plant; these
/// do not.
struct PlantParams {
  // Platform mass properties. hull_mass covers structure plus permanent
  // ballast; the variable water ballast is solved from heave equilibrium.
  double hull_mass = 5.76633e6;
  double z_platform_cog = -89.9155;
  double I_platform_y = 4.22923e9;
  SparGeometry spar = oc3_spar();

  // Rotor-nacelle assembly.
  double nacelle_mass = 240000.0;
  double rotor_mass = 110000.0;
  double d_nacelle = 1.9;  // nacelle COG aft of the tower centerline [m]
  double d_rotor = 5.0;    // rotor COG upwind of the tower centerline [m]
  double I_nacelle_y = 2.6e6;
  double I_rotor_y = 1.94e7;
  double I_rotor_x = 3.8759228e7;

  double tower_base_elevation = 10.0;  // earth z at the design draught [m]
  double hub_above_tower_top = 2.4;    // [m]
  double steel_density = 8500.0;       // effective, includes secondary steel

  double gravity = 9.81;
  double rho_air = 1.225;
  double c_added_mass = 0.969954;
  double rho_water = 1025.0;
  double drag_coeff = 0.6;
  double axial_drag_coeff = 1.2;

  mooring::LineProperties line;
  mooring::MooringLayout layout;
  int n_blades = 3;
  double rotor_radius = 63.0;
};

/// Everything the dynamics needs for one candidate plant, assembled once.
struct PlantContext {
  PlantParams params;
  TowerDesign tower;
  TowerProperties tower_props;
  RigidBodyInventory inventory;
  HydroParams hydro;
  Hydrostatics hydrostatics;
  env::MorisonModel morison;
  Mat4<double> m_sys = Mat4<double>::Zero();
  Mat4<double> added_mass = Mat4<double>::Zero();
  Mat4<double> mass_inverse = Mat4<double>::Zero();
  aero::AeroGeometry aero_geom;
  aero::CoefficientSurface surface;
  const mooring::MooringSurrogate* surrogate = nullptr;
  double variable_ballast = 0.0;
  double static_mooring_vertical = 0.0;  // total static pretension [N]
};

/// Variable ballast that balances buoyancy against total weight plus the
/// static vertical mooring pretension at the design draught. Throws
/// infeasible-plant when the structure is too heavy for the hull.
double ballast_equilibrium(const PlantParams& params, double tower_mass,
                           double* static_mooring_vertical = nullptr);

/// Assembles mass/added-mass matrices, ballast, Morison strips and the aero
/// geometry for a tower design and a prebuilt coefficient surface.
PlantContext make_plant(const PlantParams& params, const TowerDesign& tower,
                        aero::CoefficientSurface surface,
                        const mooring::MooringSurrogate* surrogate);

}  // namespace fowt
