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

#include "fowt/aero/blade.hpp"

namespace fowt::aero {
namespace {

double bernstein(int n, int k, double t) {
  double coeff = 1.0;
  for (int i = 0; i < k; ++i) coeff = coeff * (n - i) / (i + 1);
  return coeff * std::pow(t, k) * std::pow(1.0 - t, n - k);
}

}  // namespace

BladeStations::BladeStations(std::vector<double> radii, std::vector<double> widths,
                             std::vector<int> airfoil, std::array<double, 3> fixed_twist,
                             std::array<double, 3> fixed_chord, double rotor_radius,
                             double hub_radius)
    : radii_(std::move(radii)),
      widths_(std::move(widths)),
      airfoil_(std::move(airfoil)),
      fixed_twist_(fixed_twist),
      fixed_chord_(fixed_chord),
      rotor_radius_(rotor_radius),
      hub_radius_(hub_radius) {
  if (radii_.size() != kBladeNodes || widths_.size() != kBladeNodes ||
      airfoil_.size() != kBladeNodes)
    throw ModelError("invalid-design", "blade station table must have 17 nodes");

  // Degree-4 Bezier over nodes 4..17: control points are solved from the
  // interpolation conditions at the optimizing-node parameters, then the
  // curve is evaluated at every node parameter. Both steps are linear, so
  // the whole map collapses into one matrix applied per design.
  const double r4 = radii_[kFixedNodes];
  const double r17 = radii_[kBladeNodes - 1];
  auto param = [&](int node_1based) {
    return (radii_[static_cast<std::size_t>(node_1based - 1)] - r4) / (r17 - r4);
  };

  MatrixXd collocation(5, 5);
  for (int row = 0; row < 5; ++row) {
    const double t = param(kOptimizingNodes[static_cast<std::size_t>(row)]);
    for (int k = 0; k < 5; ++k) collocation(row, k) = bernstein(4, k, t);
  }
  MatrixXd at_nodes(kBladeNodes - kFixedNodes, 5);
  for (int node = kFixedNodes + 1; node <= kBladeNodes; ++node) {
    const double t = param(node);
    for (int k = 0; k < 5; ++k)
      at_nodes(node - kFixedNodes - 1, k) = bernstein(4, k, t);
  }
  bezier_eval_ = at_nodes * collocation.partialPivLu().inverse();
}

BladeStations::NodalSchedule BladeStations::blade_geometry(const BladeDesign& design) const {
  design.validate();
  NodalSchedule out;
  out.twist_deg.resize(kBladeNodes);
  out.chord_m.resize(kBladeNodes);
  for (int i = 0; i < kFixedNodes; ++i) {
    out.twist_deg[static_cast<std::size_t>(i)] = fixed_twist_[static_cast<std::size_t>(i)];
    out.chord_m[static_cast<std::size_t>(i)] = fixed_chord_[static_cast<std::size_t>(i)];
  }
  Eigen::Map<const Eigen::Matrix<double, 5, 1>> tw(design.twist_deg.data());
  Eigen::Map<const Eigen::Matrix<double, 5, 1>> ch(design.chord_m.data());
  const VectorXd twist_tail = bezier_eval_ * tw;
  const VectorXd chord_tail = bezier_eval_ * ch;
  for (int i = kFixedNodes; i < kBladeNodes; ++i) {
    out.twist_deg[static_cast<std::size_t>(i)] = twist_tail[i - kFixedNodes];
    out.chord_m[static_cast<std::size_t>(i)] = chord_tail[i - kFixedNodes];
  }
  return out;
}

BladeStations BladeStations::nrel5mw(const PolarSet& polars) {
  const std::vector<double> radii = {2.8667, 5.6,    8.3333, 11.75, 15.85, 19.95,
                                     24.05,  28.15,  32.25,  36.35, 40.45, 44.55,
                                     48.65,  52.75,  56.1667, 58.9, 61.6333};
  const std::vector<double> widths = {2.7333, 2.7333, 2.7333, 4.1, 4.1, 4.1,
                                      4.1,    4.1,    4.1,    4.1, 4.1, 4.1,
                                      4.1,    4.1,    2.7333, 2.7333, 2.7333};
  const std::vector<std::string> foils = {
      "Cylinder1", "Cylinder1", "Cylinder2", "DU40_A17", "DU35_A17", "DU35_A17",
      "DU30_A17",  "DU25_A17",  "DU25_A17",  "DU21_A17", "DU21_A17", "NACA64_A17",
      "NACA64_A17", "NACA64_A17", "NACA64_A17", "NACA64_A17", "NACA64_A17"};
  std::vector<int> airfoil;
  airfoil.reserve(foils.size());
  for (const auto& f : foils) airfoil.push_back(polars.index_of(f));
  return BladeStations(radii, widths, airfoil, {13.308, 13.308, 13.308},
                       {3.542, 3.854, 4.167}, 63.0, 1.5);
}

}  // namespace fowt::aero
