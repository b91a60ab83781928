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

#include <Eigen/Eigenvalues>

#include "fowt/dual.hpp"
#include "fowt/platform.hpp"
#include "fowt/rigid_body.hpp"
#include "fowt/rng.hpp"
#include "fowt/tower.hpp"

using namespace fowt;

namespace {

RigidBodyInventory baseline_inventory() {
  RigidBodyInventory inv;
  inv.m_platform = 7.466e6;
  inv.m_tower = 249660.0;
  inv.m_nacelle = 240000.0;
  inv.m_rotor = 110000.0;
  inv.I_platform_y = 4.22923e9;
  inv.I_tower_y = 1.25e8;
  inv.I_nacelle_y = 2.6e6;
  inv.I_rotor_y = 1.94e7;
  inv.I_rotor_x = 3.8759228e7;
  inv.d_rotor = 5.0;
  inv.d_nacelle = 1.9;
  inv.D_tower = 133.3;
  inv.D_rotor = 179.92;
  return inv;
}

}  // namespace

TEST_CASE("dual: first derivatives match finite differences") {
  auto f = [](auto x, auto y) {
    using std::cos;
    using std::exp;
    using std::sin;
    using std::sqrt;
    return sin(x) * exp(0.3 * y) + sqrt(x * x + y * y + 1.0) / (2.0 + cos(y));
  };
  const double x0 = 0.7, y0 = -1.3;
  auto dx = Dual<2>::seed(x0, 0);
  auto dy = Dual<2>::seed(y0, 1);
  const Dual<2> r = f(dx, dy);

  const double h = 1e-6;
  const double gx = (f(x0 + h, y0) - f(x0 - h, y0)) / (2 * h);
  const double gy = (f(x0, y0 + h) - f(x0, y0 - h)) / (2 * h);
  CHECK(r.v == doctest::Approx(f(x0, y0)));
  CHECK(r.d[0] == doctest::Approx(gx).epsilon(1e-7));
  CHECK(r.d[1] == doctest::Approx(gy).epsilon(1e-7));
}

TEST_CASE("dual2: hessian matches analytic values") {
  // f = x^2 y + sin(x) e^y
  const double x0 = 0.4, y0 = 0.9;
  auto x = Dual2<2>::seed(x0, 0);
  auto y = Dual2<2>::seed(y0, 1);
  const Dual2<2> r = x * x * y + sin(x) * exp(y);
  const double ey = std::exp(y0);
  CHECK(r.h(0, 0) == doctest::Approx(2 * y0 - std::sin(x0) * ey));
  CHECK(r.h(0, 1) == doctest::Approx(2 * x0 + std::cos(x0) * ey));
  CHECK(r.h(1, 0) == doctest::Approx(r.h(0, 1)));
  CHECK(r.h(1, 1) == doctest::Approx(std::sin(x0) * ey));
}

TEST_CASE("dual works inside Eigen fixed vectors") {
  Vec4<Dual<3>> v;
  for (int i = 0; i < 4; ++i) v[i] = Dual<3>::seed(i + 1.0, std::min(i, 2));
  const Dual<3> s = v.sum();
  CHECK(s.v == doctest::Approx(10.0));
  CHECK(s.d[2] == doctest::Approx(2.0));  // two entries seeded direction 2
}

TEST_CASE("tower: uniform tube closed form") {
  TowerDesign t;
  t.t_base = t.t_tip = 0.027;
  t.d_base = t.d_tip = 6.5;
  t.length = 77.6;
  const double rho = 8500.0;
  const auto p = tower_properties(t, rho);
  const double closed = rho * kPi * (6.5 - 0.027) * 0.027 * 77.6;
  CHECK(p.mass == doctest::Approx(closed).epsilon(1e-9));
  CHECK(p.cog_height == doctest::Approx(77.6 / 2.0).epsilon(1e-9));
  CHECK(p.inertia_y ==
        doctest::Approx(closed * 77.6 * 77.6 / 12.0).epsilon(1e-6));
}

TEST_CASE("tower: baseline and optimized designs reproduce reported masses") {
  const double rho = 8500.0;
  TowerDesign baseline;  // defaults are the baseline design
  CHECK(tower_properties(baseline, rho).mass / 1000.0 ==
        doctest::Approx(249.6).epsilon(0.005));

  TowerDesign opt;
  opt.t_base = 0.042;
  opt.t_tip = 0.012;
  opt.d_tip = 4.95;
  opt.length = 83.04;
  CHECK(tower_properties(opt, rho).mass / 1000.0 ==
        doctest::Approx(344.4).epsilon(0.02));

  TowerDesign heavy;  // increased-mass comparison case
  heavy.t_base = 0.042;
  heavy.t_tip = 0.028;
  heavy.d_tip = 6.5;
  heavy.length = 83.04;
  CHECK(tower_properties(heavy, rho).mass / 1000.0 ==
        doctest::Approx(505.0).epsilon(0.01));
}

TEST_CASE("tower: degenerate geometry raises invalid-design") {
  TowerDesign t;
  t.t_base = 3.3;  // inner diameter at base would be negative
  CHECK_THROWS_WITH_AS(tower_properties(t, 8500.0), doctest::Contains("invalid-design"),
                       ModelError);
}

TEST_CASE("tower: base stress closed form and linearity") {
  TowerDesign t;
  t.t_base = t.t_tip = 0.027;
  t.d_base = t.d_tip = 6.5;
  t.length = 77.6;
  const auto p = tower_properties(t, 8500.0);
  const double I = kPi / 64.0 * (std::pow(6.5, 4) - std::pow(6.5 - 2 * 0.027, 4));
  const double S = I / 3.25;
  CHECK(p.section_modulus == doctest::Approx(S).epsilon(1e-12));
  const double thrust = 5.0e5;
  CHECK(tower_stress(thrust, t.length, p.section_modulus) ==
        doctest::Approx(thrust * 77.6 / S));
  CHECK(tower_stress(0.0, t.length, p.section_modulus) == 0.0);
  CHECK(tower_stress(2.0 * thrust, t.length, p.section_modulus) ==
        doctest::Approx(2.0 * tower_stress(thrust, t.length, p.section_modulus)));
}

TEST_CASE("mass matrix: point mass limit and M13 reduction") {
  RigidBodyInventory inv;
  inv.m_platform = 1234.0;
  inv.I_platform_y = 77.0;
  inv.I_rotor_x = 5.0;
  const auto m = assemble_mass_matrix(inv);
  CHECK(m(0, 0) == doctest::Approx(1234.0));
  CHECK(m(1, 1) == doctest::Approx(1234.0));
  CHECK(m(2, 2) == doctest::Approx(77.0));
  CHECK(m(3, 3) == doctest::Approx(5.0));
  CHECK(m(0, 2) == doctest::Approx(0.0));
  CHECK(m(1, 2) == doctest::Approx(0.0));

  RigidBodyInventory tower_only;
  tower_only.m_tower = 2.0e5;
  tower_only.D_tower = 130.0;
  const auto m2 = assemble_mass_matrix(tower_only);
  CHECK(m2(0, 2) == doctest::Approx(2.0e5 * 130.0));
}

TEST_CASE("mass matrix: baseline system is symmetric positive definite") {
  const auto inv = baseline_inventory();
  const auto m = assemble_mass_matrix(inv);
  CHECK((m - m.transpose()).norm() == 0.0);

  HydroParams h;
  h.displaced_volume = 8029.21;
  h.a_cv = 57.93;
  h.a_pf = 30.08;
  h.I_displaced = 1.55e10;
  const auto a = assemble_added_mass(h);
  CHECK((a - a.transpose()).norm() == 0.0);

  Eigen::SelfAdjointEigenSolver<Mat4<double>> es(m + a);
  REQUIRE(es.info() == Eigen::Success);
  CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("added mass: zero coefficient, collocated centers, direct product") {
  HydroParams h;
  h.displaced_volume = 8029.0;
  h.a_cv = 57.93;
  h.a_pf = 30.08;
  h.I_displaced = 1.0e10;

  HydroParams zero = h;
  zero.c_added_mass = 0.0;
  CHECK(assemble_added_mass(zero).norm() == 0.0);

  HydroParams collocated = h;
  collocated.a_cv = collocated.a_pf = 40.0;
  CHECK(assemble_added_mass(collocated)(0, 2) == doctest::Approx(0.0));

  HydroParams unit = h;
  unit.c_added_mass = 1.0;
  CHECK(assemble_added_mass(unit)(0, 0) == doctest::Approx(8.23e6).epsilon(1e-3));

  // Rotor row and column carry no added mass.
  const auto a = assemble_added_mass(h);
  CHECK(a.row(3).norm() == 0.0);
  CHECK(a.col(3).norm() == 0.0);
}

TEST_CASE("coriolis loads: rest state and matrix-form oracle") {
  const auto inv = baseline_inventory();
  const auto m = assemble_mass_matrix(inv);
  HydroParams h;
  h.displaced_volume = 8029.21;
  h.a_cv = 57.93;
  h.a_pf = 30.08;
  h.I_displaced = 1.55e10;

  Vec4<double> rest = Vec4<double>::Zero();
  rest[3] = 1.2;  // spinning rotor alone produces no quadratic load
  CHECK(coriolis_loads(rest, m, h).norm() == 0.0);

  // Oracle: build S~ and C_A explicitly and multiply.
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Vec4<double> v;
    for (int i = 0; i < 4; ++i) v[i] = rng.uniform(-2.0, 2.0);
    Mat4<double> s_tilde = Mat4<double>::Zero();
    s_tilde(0, 2) = v[2] * 0.0 + v[2];  // omega in the (0,1) block
    s_tilde.setZero();
    s_tilde(0, 1) = v[2];
    s_tilde(1, 0) = -v[2];
    s_tilde(2, 0) = v[1];
    s_tilde(2, 1) = -v[0];
    const double a11 = h.c_added_mass * h.rho_water * h.displaced_volume;
    Mat4<double> c_a = Mat4<double>::Zero();
    c_a(0, 2) = a11 * v[1];
    c_a(1, 2) = -a11 * v[0];
    c_a(2, 0) = -a11 * v[1];
    c_a(2, 1) = a11 * v[0];
    const Vec4<double> expected = (s_tilde * m + c_a) * v;
    const Vec4<double> got = coriolis_loads(v, m, h);
    CHECK((got - expected).norm() <= 1e-9 * (1.0 + expected.norm()));
    // Power of the quadratic-velocity loads vanishes.
    CHECK(std::abs(v.dot(got)) <= 1e-6 * (1.0 + got.norm()));
  }
}

TEST_CASE("coriolis loads: quadratic homogeneity in velocity") {
  const auto inv = baseline_inventory();
  const auto m = assemble_mass_matrix(inv);
  HydroParams h;
  h.displaced_volume = 8029.21;
  h.a_cv = 57.93;
  h.a_pf = 30.08;
  h.I_displaced = 1.55e10;
  Vec4<double> v;
  v << 0.8, -0.4, 0.05, 1.1;
  const double alpha = 1.7;
  const Vec4<double> base = coriolis_loads(v, m, h);
  const Vec4<double> scaled = coriolis_loads<double>((alpha * v).eval(), m, h);
  CHECK((scaled - alpha * alpha * base).norm() <= 1e-9 * scaled.norm());
}

TEST_CASE("gravity loads: zero pitch forms") {
  auto inv = baseline_inventory();
  const double g = 9.81;
  const auto at_zero = gravity_loads(0.0, inv, g);
  CHECK(at_zero[0] == 0.0);
  CHECK(at_zero[1] == doctest::Approx(-inv.total_mass() * g));
  CHECK(at_zero[2] ==
        doctest::Approx(g * (inv.d_nacelle * inv.m_nacelle - inv.d_rotor * inv.m_rotor)));
  CHECK(at_zero[3] == 0.0);

  // Symmetric nacelle/rotor first moments null the zero-pitch moment.
  inv.d_nacelle = 2.0;
  inv.d_rotor = inv.d_nacelle * inv.m_nacelle / inv.m_rotor;
  CHECK(gravity_loads(0.0, inv, g)[2] == doctest::Approx(0.0));
}

TEST_CASE("gravity loads: direct evaluation at 0.1 rad") {
  const auto inv = baseline_inventory();
  const double g = 9.81, th = 0.1;
  const auto out = gravity_loads(th, inv, g);
  const double m_T = inv.total_mass();
  CHECK(out[0] == doctest::Approx(m_T * g * std::sin(th)));
  CHECK(out[1] == doctest::Approx(-m_T * g * std::cos(th)));
  const double expected_m =
      g * std::sin(th) * (inv.D_rotor * (inv.m_nacelle + inv.m_rotor) + inv.D_tower * inv.m_tower) +
      g * std::cos(th) * (inv.d_nacelle * inv.m_nacelle - inv.d_rotor * inv.m_rotor);
  CHECK(out[2] == doctest::Approx(expected_m));
}

TEST_CASE("spar hydrostatics: strip integration matches published volume") {
  const auto geom = oc3_spar();
  const auto hs = spar_hydrostatics(geom, -89.9155, 1025.0);
  CHECK(hs.displaced_volume == doctest::Approx(8029.21).epsilon(2e-3));
  CHECK(hs.z_buoyancy == doctest::Approx(-62.07).epsilon(5e-3));
  CHECK(hs.waterplane_area == doctest::Approx(kPi / 4.0 * 6.5 * 6.5).epsilon(1e-9));
  CHECK(hs.I_displaced > 0.0);
}

TEST_CASE("hydrostatic loads: waterplane stiffness and restoring moment") {
  const auto geom = oc3_spar();
  const double z_cog = -89.9155, rho = 1025.0, g = 9.81;
  const auto hs = spar_hydrostatics(geom, z_cog, rho);

  Vec2<double> f0, f1;
  double m0 = 0.0, m1 = 0.0;
  hydrostatic_loads(0.0, 0.0, hs, z_cog, rho, g, &f0, &m0);
  CHECK(f0[0] == 0.0);
  CHECK(f0[1] == doctest::Approx(rho * g * hs.displaced_volume));
  CHECK(m0 == 0.0);

  hydrostatic_loads(0.5, 0.0, hs, z_cog, rho, g, &f1, &m1);
  CHECK(f1[1] - f0[1] == doctest::Approx(-rho * g * hs.waterplane_area * 0.5).epsilon(1e-9));

  double m_pitch = 0.0;
  Vec2<double> f_pitch;
  hydrostatic_loads(0.0, 0.05, hs, z_cog, rho, g, &f_pitch, &m_pitch);
  CHECK(m_pitch < 0.0);  // opposes positive pitch

  CHECK_THROWS_WITH_AS(
      hydrostatic_loads(hs.heave_max + 1.0, 0.0, hs, z_cog, rho, g, &f1, &m1),
      doctest::Contains("out-of-envelope"), ModelError);
}
