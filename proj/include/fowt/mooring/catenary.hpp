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

namespace fowt::mooring {

/// Quasi-static elastic line properties. Weight per length is the wet
/// weight; the line is slack at the design pose.
struct LineProperties {
  double length = 902.2;          // unstretched length [m]
  double weight_per_length = 698.094;  // [N/m] in water
  double axial_stiffness = 3.84243e8;  // EA [N]

  double total_weight() const { return weight_per_length * length; }

  void validate() const {
    if (!(length > 0.0) || !(weight_per_length > 0.0) || !(axial_stiffness > 0.0))
      throw ModelError("invalid-line", "line properties must be positive");
  }
};

enum class LineRegime { kSuspended, kSeabed };

struct CatenaryResult {
  double f_horizontal = 0.0;  // fairlead tension components [N]
  double f_vertical = 0.0;
  LineRegime regime = LineRegime::kSeabed;
  double touchdown_length = 0.0;  // line resting on the seabed [m]
  double residual = 0.0;          // relative residual at the solution
  int iterations = 0;
};

/// Fairlead tensions of an elastic catenary with frictionless seabed
/// contact. `span` and `drop` are the horizontal / vertical distances from
/// anchor to fairlead (fairlead above the anchor). The line is suspended
/// iff the fairlead vertical tension exceeds the total line weight,
/// otherwise part of it rests on the seabed.
CatenaryResult solve_catenary(double span, double drop, const LineProperties& line);

}  // namespace fowt::mooring
