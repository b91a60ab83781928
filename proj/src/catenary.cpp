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

#include "fowt/mooring/catenary.hpp"

#include <algorithm>
#include <cmath>

namespace fowt::mooring {
namespace {

struct Profile {
  double x = 0.0;
  double z = 0.0;
  double dx_dh = 0.0;
  double dx_dv = 0.0;
  double dz_dh = 0.0;
  double dz_dv = 0.0;
};

// Fairlead position for a fully suspended elastic catenary anchored at the
// origin, as a function of the fairlead tension components (h, v).
Profile suspended_profile(double h, double v, const LineProperties& line) {
  const double w = line.weight_per_length;
  const double ea = line.axial_stiffness;
  const double L = line.length;
  const double u1 = v / h;
  const double u2 = (v - w * L) / h;
  const double r1 = std::sqrt(1.0 + u1 * u1);
  const double r2 = std::sqrt(1.0 + u2 * u2);

  Profile p;
  p.x = h / w * (std::asinh(u1) - std::asinh(u2)) + h * L / ea;
  p.z = h / w * (r1 - r2) + (v * L - 0.5 * w * L * L) / ea;
  p.dx_dh = (std::asinh(u1) - std::asinh(u2)) / w - (u1 / r1 - u2 / r2) / w + L / ea;
  p.dx_dv = (1.0 / r1 - 1.0 / r2) / w;
  p.dz_dh = p.dx_dv;
  p.dz_dv = (u1 / r1 - u2 / r2) / w + L / ea;
  return p;
}

// Same with the lower part of the line resting on a frictionless seabed;
// touchdown length is L - v / w.
Profile seabed_profile(double h, double v, const LineProperties& line) {
  const double w = line.weight_per_length;
  const double ea = line.axial_stiffness;
  const double L = line.length;
  const double u1 = v / h;
  const double r1 = std::sqrt(1.0 + u1 * u1);
  const double lb = L - v / w;

  Profile p;
  p.x = lb + h / w * std::asinh(u1) + h * L / ea;
  p.z = h / w * (r1 - 1.0) + v * v / (2.0 * ea * w);
  p.dx_dh = std::asinh(u1) / w - u1 / (w * r1) + L / ea;
  p.dx_dv = -1.0 / w + 1.0 / (w * r1);
  p.dz_dh = (1.0 / r1 - 1.0) / w;
  p.dz_dv = u1 / (w * r1) + v / (ea * w);
  return p;
}

struct NewtonOutcome {
  double h = 0.0;
  double v = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <typename ProfileFn>
NewtonOutcome newton(double span, double drop, double h0, double v0,
                     const LineProperties& line, ProfileFn profile) {
  const double x_scale = std::max(span, 1.0);
  const double z_scale = std::max(drop, 1.0);
  const double h_min = 1e-8 * line.total_weight();

  NewtonOutcome out;
  out.h = std::max(h0, h_min);
  out.v = std::max(v0, h_min);

  auto residual_of = [&](double h, double v) {
    const Profile p = profile(h, v, line);
    const double rx = (p.x - span) / x_scale;
    const double rz = (p.z - drop) / z_scale;
    return std::sqrt(rx * rx + rz * rz);
  };

  double res = residual_of(out.h, out.v);
  for (int it = 0; it < 200; ++it) {
    out.iterations = it + 1;
    if (res < 1e-12) break;
    const Profile p = profile(out.h, out.v, line);
    const double rx = p.x - span;
    const double rz = p.z - drop;
    const double det = p.dx_dh * p.dz_dv - p.dx_dv * p.dz_dh;
    if (std::abs(det) < 1e-300) break;
    double dh = -(p.dz_dv * rx - p.dx_dv * rz) / det;
    double dv = -(-p.dz_dh * rx + p.dx_dh * rz) / det;

    // Damped update keeping tensions positive.
    double alpha = 1.0;
    for (int ls = 0; ls < 40; ++ls) {
      const double h_try = std::max(out.h + alpha * dh, h_min);
      const double v_try = std::max(out.v + alpha * dv, h_min);
      const double res_try = residual_of(h_try, v_try);
      if (res_try < res || alpha < 1e-6) {
        out.h = h_try;
        out.v = v_try;
        res = res_try;
        break;
      }
      alpha *= 0.5;
    }
  }
  out.residual = res;
  out.converged = res < 1e-9;
  return out;
}

}  // namespace

CatenaryResult solve_catenary(double span, double drop, const LineProperties& line) {
  line.validate();
  if (!(span >= 0.0) || !(drop >= 0.0))
    throw ModelError("invalid-argument", "fairlead must lie up-and-over from the anchor");

  const double straight = std::hypot(span, drop);
  const double max_strain = 0.1;
  if (straight > line.length * (1.0 + max_strain))
    throw ModelError("out-of-envelope", "line strained beyond elastic model validity");

  const double w = line.weight_per_length;
  const double L = line.length;

  // Starting tension estimate from the inextensible catenary asymptotics.
  double lambda0;
  if (span < 1e-9 * L) {
    lambda0 = 1e6;
  } else if (straight >= L) {
    lambda0 = 0.2;
  } else {
    lambda0 = std::sqrt(std::max(3.0 * ((L * L - drop * drop) / (span * span) - 1.0), 1e-12));
  }
  const double h0 = std::abs(w * span / (2.0 * lambda0));
  const double v0 = 0.5 * w * (drop / std::tanh(lambda0) + L);

  const double wl = line.total_weight();
  CatenaryResult result;

  // Try the regime suggested by the starting vertical tension first, then
  // the other; accept only a self-consistent converged solution.
  const bool try_seabed_first = v0 <= wl;
  for (int attempt = 0; attempt < 2; ++attempt) {
    const bool seabed = try_seabed_first == (attempt == 0);
    const NewtonOutcome n =
        seabed ? newton(span, drop, h0, std::min(v0, wl), line, seabed_profile)
               : newton(span, drop, h0, std::max(v0, wl), line, suspended_profile);
    const bool consistent = seabed ? n.v <= wl * (1.0 + 1e-9) : n.v >= wl * (1.0 - 1e-9);
    if (n.converged && consistent) {
      result.f_horizontal = n.h;
      result.f_vertical = n.v;
      result.regime = seabed ? LineRegime::kSeabed : LineRegime::kSuspended;
      result.touchdown_length = seabed ? std::max(L - n.v / w, 0.0) : 0.0;
      result.residual = n.residual;
      result.iterations = n.iterations;
      return result;
    }
    result.residual = n.residual;
    result.iterations = n.iterations;
  }
  throw ModelError("root-find",
                   "catenary iteration did not converge (residual " +
                       std::to_string(result.residual) + ")");
}

}  // namespace fowt::mooring
