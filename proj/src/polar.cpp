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

#include "fowt/aero/polar.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fowt/io/text.hpp"

namespace fowt::aero {

void Polar::lookup(double a_deg, double* cl_out, double* cd_out) const {
  const auto& a = alpha_deg;
  if (a_deg <= a.front()) {
    *cl_out = cl.front();
    *cd_out = cd.front();
    return;
  }
  if (a_deg >= a.back()) {
    *cl_out = cl.back();
    *cd_out = cd.back();
    return;
  }
  const auto it = std::upper_bound(a.begin(), a.end(), a_deg);
  const std::size_t i = static_cast<std::size_t>(it - a.begin()) - 1;
  const double f = (a_deg - a[i]) / (a[i + 1] - a[i]);
  *cl_out = cl[i] + f * (cl[i + 1] - cl[i]);
  *cd_out = cd[i] + f * (cd[i + 1] - cd[i]);
}

Polar load_polar(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ModelError("io", "cannot read polar file " + path);
  Polar p;
  p.name = std::filesystem::path(path).stem().string();
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string a, c, d;
    if (!(ss >> a >> c >> d)) throw ModelError("parse", "bad polar row in " + path);
    p.alpha_deg.push_back(io::parse_double(a));
    p.cl.push_back(io::parse_double(c));
    p.cd.push_back(io::parse_double(d));
  }
  if (p.alpha_deg.size() < 2) throw ModelError("parse", "polar too short: " + path);
  for (std::size_t i = 1; i < p.alpha_deg.size(); ++i)
    if (p.alpha_deg[i] <= p.alpha_deg[i - 1])
      throw ModelError("parse", "polar alpha not increasing: " + path);
  return p;
}

int PolarSet::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < polars_.size(); ++i)
    if (polars_[i].name == name) return static_cast<int>(i);
  throw ModelError("io", "unknown airfoil '" + name + "'");
}

PolarSet load_polar_directory(const std::string& dir) {
  PolarSet set;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".dat") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) set.add(load_polar(f.string()));
  if (set.size() == 0) throw ModelError("io", "no polar files in " + dir);
  return set;
}

}  // namespace fowt::aero
