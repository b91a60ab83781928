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

#include "fowt/aero/blade.hpp"

namespace fowt::aero {

struct BemPoint {
  double cp = 0.0;
  double ct = 0.0;
  int unconverged_elements = 0;
};

/// Steady blade-element-momentum solution with Prandtl tip/hub losses and
/// the Buhl high-induction correction. Elements that fail to converge fall
/// back to their best bounded iterate and are counted.
class BemSolver {
 public:
  BemSolver(const BladeStations& stations, const PolarSet& polars, int n_blades = 3)
      : stations_(&stations), polars_(&polars), n_blades_(n_blades) {}

  BemPoint solve(double tip_speed_ratio, double pitch_deg,
                 const BladeStations::NodalSchedule& schedule) const;

 private:
  const BladeStations* stations_;
  const PolarSet* polars_;
  int n_blades_;
};

}  // namespace fowt::aero
