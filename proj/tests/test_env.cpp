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

#include <doctest.h>

#include "fowt/env/waves.hpp"
#include "fowt/env/wind.hpp"
#include "fowt/plant.hpp"

using namespace fowt;
using namespace fowt::env;

TEST_CASE("weibull bins: density value, count, and unit sum") {
  const auto bins = weibull_bins(2.0, 13.44);
  CHECK(bins.centers.size() == 23);
  CHECK(bins.centers.front() == 3.0);
  CHECK(bins.centers.back() == 25.0);

  double sum = 0.0;
  for (double p : bins.probabilities) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) < 1e-12);

  // Raw density at 12 m/s before normalization.
  CHECK(weibull_pdf(2.0, 13.44, 12.0) == doctest::Approx(0.0599).epsilon(2e-3));

  CHECK_THROWS_WITH_AS(weibull_bins(2.0, 13.44, 10.0, 5.0),
                       doctest::Contains("invalid-argument"), ModelError);
  CHECK_THROWS_WITH_AS(weibull_bins(-1.0, 13.44), doctest::Contains("invalid-argument"),
                       ModelError);
}

TEST_CASE("wind shear: baseline identity, published value, monotonicity") {
  CHECK(shear_adjust(9.0, 76.0) == doctest::Approx(9.0).epsilon(1e-12));
  CHECK(shear_adjust(12.0, 83.04) == doctest::Approx(12.185).epsilon(1e-3));
  double prev = 0.0;
  for (double l = 60.0; l <= 100.0; l += 5.0) {
    const double u = shear_adjust(10.0, l);
    CHECK(u > prev);
    prev = u;
  }
  CHECK(shear_adjust(11.0, 80.0) > shear_adjust(10.0, 80.0));
}

TEST_CASE("wind profile: exact mean, bounded amplitude, determinism") {
  WindTemplateParams params;
  const double duration = 100.0;
  WindProfile profile(12.0, duration, params);

  // Trapezoid quadrature of the template over the horizon.
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = duration * i / n;
    const double w = (i == 0 || i == n) ? 0.5 : 1.0;
    sum += w * profile(t);
  }
  const double mean = sum / n;
  CHECK(mean == doctest::Approx(12.0).epsilon(5e-3));

  for (double t = 0.0; t < duration; t += 0.37)
    CHECK(std::abs(profile(t) - 12.0) < 12.0 * params.amplitude_fraction * 1.3);

  WindProfile again(12.0, duration, params);
  WindTemplateParams other = params;
  other.seed = 99;
  WindProfile different(12.0, duration, other);
  bool identical = true, distinct = false;
  for (double t = 0.0; t < duration; t += 1.7) {
    identical = identical && profile(t) == again(t);
    distinct = distinct || std::abs(profile(t) - different(t)) > 1e-9;
  }
  CHECK(identical);
  CHECK(distinct);

  WindTemplateParams steady = params;
  steady.amplitude_fraction = 0.0;
  WindProfile flat(8.0, duration, steady);
  CHECK(flat(0.0) == 8.0);
  CHECK(flat(42.0) == 8.0);
}

TEST_CASE("wave field: calm limit, spectral identity, determinism") {
  WaveSpec off;
  off.significant_height = 0.0;
  const WaveField calm(off, -62.0);
  CHECK(!calm.active());
  const auto k0 = calm.at(13.0);
  CHECK(k0.vel_x == 0.0);
  CHECK(k0.acc_z == 0.0);

  WaveSpec spec;
  spec.significant_height = 6.0;
  spec.peak_period = 10.0;
  const WaveField sea(spec, -62.0);
  REQUIRE(sea.active());

  // Parseval check of the synthesized amplitudes against Hs^2/16.
  CHECK(4.0 * std::sqrt(sea.elevation_variance()) ==
        doctest::Approx(6.0).epsilon(0.02));

  // Long-record sampled standard deviation of the elevation.
  const double duration = 7200.0;
  const int n = 14400;
  double mean = 0.0, m2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double eta = sea.at(duration * i / n).elevation;
    mean += eta;
    m2 += eta * eta;
  }
  mean /= n;
  const double sd = std::sqrt(m2 / n - mean * mean);
  CHECK(4.0 * sd == doctest::Approx(6.0).epsilon(0.05));

  const WaveField sea2(spec, -62.0);
  CHECK(sea2.at(77.7).vel_x == sea.at(77.7).vel_x);
}

TEST_CASE("wave loads: calm-water rest state carries no load") {
  PlantParams params;
  const auto hs = spar_hydrostatics(params.spar, params.z_platform_cog, params.rho_water);
  HydroParams hydro;
  hydro.displaced_volume = hs.displaced_volume;
  hydro.rho_water = params.rho_water;
  const auto model = make_morison(params.spar, hs, hydro, params.z_platform_cog);

  Vec2<double> f;
  double m = 0.0;
  wave_loads(0.0, 0.0, 0.0, 0.0, WaveKinematics{}, model, &f, &m);
  CHECK(f[0] == 0.0);
  CHECK(f[1] == 0.0);
  CHECK(m == 0.0);

  // Still water with a moving body produces opposing drag.
  wave_loads(1.0, 0.0, 0.0, 0.0, WaveKinematics{}, model, &f, &m);
  CHECK(f[0] < 0.0);
}

TEST_CASE("wave loads: inertia term leads a sinusoidal velocity by a quarter period") {
  PlantParams params;
  const auto hs = spar_hydrostatics(params.spar, params.z_platform_cog, params.rho_water);
  HydroParams hydro;
  hydro.displaced_volume = hs.displaced_volume;
  hydro.rho_water = params.rho_water;
  auto model = make_morison(params.spar, hs, hydro, params.z_platform_cog);
  model.enabled = 0.0;  // isolate the inertia contribution

  const double period = 10.0, omega = 2.0 * kPi / period, u0 = 0.8;
  double best_lag = 0.0, best_corr = -1e30;
  for (double lag = 0.0; lag < period; lag += 0.05) {
    double corr = 0.0;
    for (double t = 0.0; t < period; t += 0.1) {
      WaveKinematics kin;
      kin.vel_x = u0 * std::cos(omega * t);
      kin.acc_x = -u0 * omega * std::sin(omega * t);
      Vec2<double> f;
      double m = 0.0;
      wave_loads(0.0, 0.0, 0.0, 0.0, kin, model, &f, &m);
      corr += f[0] * u0 * std::cos(omega * (t + lag));
    }
    if (corr > best_corr) {
      best_corr = corr;
      best_lag = lag;
    }
  }
  CHECK(best_lag == doctest::Approx(period / 4.0).epsilon(0.05));

  // Amplitude equals (rho V + A11) times the acceleration amplitude.
  WaveKinematics kin;
  kin.acc_x = 1.0;
  Vec2<double> f;
  double m = 0.0;
  wave_loads(0.0, 0.0, 0.0, 0.0, kin, model, &f, &m);
  CHECK(f[0] == doctest::Approx(model.inertia_coeff_x).epsilon(1e-12));
  CHECK(m == doctest::Approx(model.inertia_coeff_x * model.z_cb_body).epsilon(1e-12));
}
