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

#include <string>
#include <vector>

#include "fowt/types.hpp"

namespace fowt::aero {

/// Tabulated airfoil polar (alpha in degrees over [-180, 180]).
struct Polar {
  std::string name;
  std::vector<double> alpha_deg;
  std::vector<double> cl;
  std::vector<double> cd;

  /// Linear interpolation, clamped at the table ends.
  void lookup(double a_deg, double* cl_out, double* cd_out) const;
};

Polar load_polar(const std::string& path);

/// All polars from a directory of .dat files keyed by airfoil name.
class PolarSet {
 public:
  int index_of(const std::string& name) const;
  const Polar& operator[](int idx) const { return polars_[static_cast<std::size_t>(idx)]; }
  void add(Polar p) { polars_.push_back(std::move(p)); }
  std::size_t size() const { return polars_.size(); }

 private:
  std::vector<Polar> polars_;
};

PolarSet load_polar_directory(const std::string& dir);

}  // namespace fowt::aero
