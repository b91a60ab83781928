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

#include <array>
#include <string>
#include <vector>

#include "fowt/aero/polar.hpp"
#include "fowt/types.hpp"

namespace fowt::aero {

inline constexpr int kBladeNodes = 17;
inline constexpr std::array<int, 5> kOptimizingNodes = {4, 6, 9, 12, 17};  // 1-based
inline constexpr int kFixedNodes = 3;

/// Twist/chord values at the five optimizing nodes; everything else about
/// the blade (station radii, airfoils, fixed root values) is a shared
/// definition.
struct BladeDesign {
  std::array<double, 5> twist_deg = {13.31, 11.48, 6.54, 1.53, 0.11};
  std::array<double, 5> chord_m = {4.557, 4.007, 3.502, 2.764, 1.419};

  void validate() const {
    for (double t : twist_deg)
      if (t < -0.001 - 1e-12 || t > 15.970 + 1e-12)
        throw ModelError("invalid-design", "blade twist outside bounds");
    for (double c : chord_m)
      if (c < 0.014 - 1e-12 || c > 5.580 + 1e-12)
        throw ModelError("invalid-design", "blade chord outside bounds");
  }
};

/// Station layout: radii, widths and airfoil of each of the 17 nodes, the
/// fixed root twist/chord, and the precomputed Bezier evaluation operator
/// that maps optimizing-node values to the full nodal schedule.
class BladeStations {
 public:
  BladeStations(std::vector<double> radii, std::vector<double> widths,
                std::vector<int> airfoil, std::array<double, 3> fixed_twist,
                std::array<double, 3> fixed_chord, double rotor_radius, double hub_radius);

  /// NREL 5 MW station layout against the given polar set.
  static BladeStations nrel5mw(const PolarSet& polars);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& widths() const { return widths_; }
  const std::vector<int>& airfoil() const { return airfoil_; }
  double rotor_radius() const { return rotor_radius_; }
  double hub_radius() const { return hub_radius_; }

  struct NodalSchedule {
    std::vector<double> twist_deg;
    std::vector<double> chord_m;
  };

  /// Nodes 1-3 keep their fixed values; nodes 4-17 follow a Bezier curve
  /// interpolating the optimizing-node values (reproduced exactly).
  NodalSchedule blade_geometry(const BladeDesign& design) const;

 private:
  std::vector<double> radii_;
  std::vector<double> widths_;
  std::vector<int> airfoil_;
  std::array<double, 3> fixed_twist_;
  std::array<double, 3> fixed_chord_;
  double rotor_radius_;
  double hub_radius_;
  MatrixXd bezier_eval_;  // (14 x 5): optimizing values -> nodes 4..17
};

}  // namespace fowt::aero
