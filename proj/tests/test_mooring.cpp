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

#include <Eigen/Cholesky>
#include <sstream>

#include "fowt/dual.hpp"
#include "fowt/rng.hpp"
#include "fowt/mooring/catenary.hpp"
#include "fowt/mooring/loads.hpp"
#include "fowt/mooring/surrogate.hpp"

using namespace fowt;
using namespace fowt::mooring;

namespace {

// ---------------------------------------------------------------------------
// Lumped-mass static oracle: nodes joined by linear springs under gravity
// with a stiff one-sided seabed penalty, driven to equilibrium by damped
// Newton on the total potential energy. Independent of the catenary
// closed-form path.
struct LumpedLineForces {
  double f_h = 0.0;
  double f_v = 0.0;
};

LumpedLineForces lumped_mass_forces(double span, double drop, const LineProperties& line,
                                    int n_seg = 200) {
  const int n_free = n_seg - 1;
  const double l0 = line.length / n_seg;
  const double k_seg = line.axial_stiffness / l0;
  const double w_node = line.weight_per_length * l0;
  const double k_pen = 1e8;

  // Initial shape: along the seabed, then a straight climb to the fairlead.
  VectorXd q(2 * n_free);
  for (int i = 1; i < n_seg; ++i) {
    const double s = static_cast<double>(i) / n_seg;
    const double ramp = std::max(0.0, (s - 0.35) / 0.65);
    q[2 * (i - 1)] = span * s;
    q[2 * (i - 1) + 1] = drop * ramp * ramp;
  }

  auto node_pos = [&](const VectorXd& x, int i) -> Eigen::Vector2d {
    if (i == 0) return {0.0, 0.0};
    if (i == n_seg) return {span, drop};
    return {x[2 * (i - 1)], x[2 * (i - 1) + 1]};
  };

  auto energy_grad_hess = [&](const VectorXd& x, VectorXd* grad, MatrixXd* hess) {
    double e = 0.0;
    if (grad) grad->setZero();
    if (hess) hess->setZero();
    for (int s = 0; s < n_seg; ++s) {
      const Eigen::Vector2d a = node_pos(x, s);
      const Eigen::Vector2d b = node_pos(x, s + 1);
      const Eigen::Vector2d d = b - a;
      const double len = d.norm();
      const Eigen::Vector2d u = d / len;
      const double stretch = len - l0;
      e += 0.5 * k_seg * stretch * stretch;
      const Eigen::Vector2d f = k_seg * stretch * u;
      Eigen::Matrix2d kb = k_seg * u * u.transpose() +
                           (k_seg * stretch / len) * (Eigen::Matrix2d::Identity() - u * u.transpose());
      for (int end = 0; end < 2; ++end) {
        const int node = s + end;
        if (node == 0 || node == n_seg) continue;
        const int at = 2 * (node - 1);
        const double sign = end == 0 ? -1.0 : 1.0;
        if (grad) grad->segment<2>(at) += sign * f;
        if (hess) hess->block<2, 2>(at, at) += kb;
      }
      if (hess && s > 0 && s < n_seg) {
        const int ia = 2 * (s - 1);
        // off-diagonal coupling only when both ends are free
        if (s + 1 < n_seg) {
          const int ib = 2 * s;
          hess->block<2, 2>(ia, ib) -= kb;
          hess->block<2, 2>(ib, ia) -= kb;
        }
      }
    }
    for (int i = 1; i < n_seg; ++i) {
      const int at = 2 * (i - 1);
      const double z = x[at + 1];
      e += w_node * z;
      if (grad) (*grad)[at + 1] += w_node;
      if (z < 0.0) {
        e += 0.5 * k_pen * z * z;
        if (grad) (*grad)[at + 1] += k_pen * z;
        if (hess) (*hess)(at + 1, at + 1) += k_pen;
      }
    }
    return e;
  };

  VectorXd grad(2 * n_free);
  MatrixXd hess(2 * n_free, 2 * n_free);
  double mu = 1e-3;
  for (int it = 0; it < 400; ++it) {
    const double e0 = energy_grad_hess(q, &grad, &hess);
    if (grad.lpNorm<Eigen::Infinity>() < 1e-6 * w_node) break;
    for (int bump = 0; bump < 60; ++bump) {
      MatrixXd h = hess;
      h.diagonal().array() += mu * k_seg;
      Eigen::LDLT<MatrixXd> ldlt(h);
      const VectorXd step = ldlt.solve(-grad);
      VectorXd trial = q + step;
      if (ldlt.info() == Eigen::Success &&
          energy_grad_hess(trial, nullptr, nullptr) < e0) {
        q = trial;
        mu = std::max(mu * 0.3, 1e-9);
        break;
      }
      mu *= 10.0;
    }
  }
  REQUIRE(grad.lpNorm<Eigen::Infinity>() < 1e-4 * w_node);

  const Eigen::Vector2d last = node_pos(q, n_seg - 1);
  const Eigen::Vector2d fair(span, drop);
  const Eigen::Vector2d d = fair - last;
  const double len = d.norm();
  const double tension = k_seg * (len - l0);
  const Eigen::Vector2d pull = tension * (-d / len) - Eigen::Vector2d(0.0, 0.5 * w_node);
  LumpedLineForces out;
  out.f_h = -pull.x();
  out.f_v = -pull.y();
  return out;
}

const MooringSurrogate& shared_surrogate() {
  static const MooringSurrogate s = [] {
    LineProperties line;
    SurrogateDomain dom;
    SurrogateTrainConfig cfg;
    cfg.span_samples = 45;
    cfg.drop_samples = 15;
    cfg.train.max_epochs = 9000;
    return train_surrogate(line, dom, cfg);
  }();
  return s;
}

}  // namespace

TEST_CASE("catenary: regimes, residuals, touchdown bookkeeping") {
  LineProperties line;
  const auto taut = solve_catenary(890.0, 250.0, line);
  CHECK(taut.regime == LineRegime::kSuspended);
  CHECK(taut.f_vertical > line.total_weight());
  CHECK(taut.touchdown_length == 0.0);
  CHECK(taut.residual < 1e-8);

  const auto slack = solve_catenary(830.0, 250.0, line);
  CHECK(slack.regime == LineRegime::kSeabed);
  CHECK(slack.f_vertical < line.total_weight());
  CHECK(slack.touchdown_length > 0.0);
  CHECK(slack.residual < 1e-8);
}

TEST_CASE("catenary: horizontal force vanishes toward the zero-offset limit") {
  LineProperties line;
  line.length = 100.0;
  line.weight_per_length = 100.0;
  line.axial_stiffness = 1e7;
  // Minimum reachable span is length - drop = 80 at H -> 0.
  double prev = std::numeric_limits<double>::infinity();
  for (double l : {86.0, 84.0, 82.0, 81.0, 80.3}) {
    const auto r = solve_catenary(l, 20.0, line);
    CHECK(r.regime == LineRegime::kSeabed);
    CHECK(r.f_horizontal < prev);
    prev = r.f_horizontal;
  }
  CHECK(solve_catenary(80.05, 20.0, line).f_horizontal <
        0.002 * solve_catenary(86.0, 20.0, line).f_horizontal);
}

TEST_CASE("catenary: matches the lumped-mass equilibrium oracle") {
  LineProperties line;
  for (double span : {820.0, 848.67, 862.0, 875.0}) {
    for (double drop : {244.0, 252.0}) {
      const auto exact = solve_catenary(span, drop, line);
      const auto lumped = lumped_mass_forces(span, drop, line);
      CHECK(exact.f_horizontal ==
            doctest::Approx(lumped.f_h).epsilon(5e-3));
      CHECK(exact.f_vertical == doctest::Approx(lumped.f_v).epsilon(5e-3));
    }
  }
}

TEST_CASE("catenary: argument and envelope errors") {
  LineProperties line;
  CHECK_THROWS_WITH_AS(solve_catenary(-1.0, 250.0, line),
                       doctest::Contains("invalid-argument"), ModelError);
  CHECK_THROWS_WITH_AS(solve_catenary(995.0, 250.0, line),
                       doctest::Contains("out-of-envelope"), ModelError);
}

TEST_CASE("surrogate: training meets the error budget and reports it") {
  const auto& s = shared_surrogate();
  CHECK(s.max_rel_error_suspended.maxCoeff() < 0.01);
  CHECK(s.max_rel_error_seabed.maxCoeff() < 0.01);
}

TEST_CASE("surrogate: same seed reproduces identical weights") {
  LineProperties line;
  SurrogateDomain dom;
  SurrogateTrainConfig cfg;
  cfg.span_samples = 18;
  cfg.drop_samples = 7;
  cfg.hidden = {8};
  cfg.train.max_epochs = 500;
  cfg.max_rel_error = 1.0;  // quality not under test here
  const auto a = train_surrogate(line, dom, cfg);
  const auto b = train_surrogate(line, dom, cfg);
  REQUIRE(a.net_suspended.weights.size() == b.net_suspended.weights.size());
  for (std::size_t l = 0; l < a.net_suspended.weights.size(); ++l) {
    CHECK(a.net_suspended.weights[l] == b.net_suspended.weights[l]);
    CHECK(a.net_seabed.weights[l] == b.net_seabed.weights[l]);
  }
}

TEST_CASE("mlp: zero-hidden-layer net fits a constant target exactly") {
  Mlp net = make_mlp(2, {}, 2, 3);
  MatrixXd x(2, 64), y(2, 64);
  Rng rng(5);
  for (int i = 0; i < 64; ++i) {
    x(0, i) = rng.uniform(-1.0, 1.0);
    x(1, i) = rng.uniform(-1.0, 1.0);
    y(0, i) = 0.37;
    y(1, i) = -0.8;
  }
  TrainOptions opts;
  opts.max_epochs = 4000;
  opts.learning_rate = 2e-2;
  const auto report = train_mlp(net, x, y, opts);
  CHECK(report.best_validation_mse < 1e-8);
}

TEST_CASE("surrogate: evaluation near training data and regime continuity") {
  const auto& s = shared_surrogate();
  LineProperties line;

  // Training-sample accuracy (range-relative, same metric as the report).
  const double fh_range = s.out_hi_seabed[0] - s.out_lo_seabed[0];
  const auto r = solve_catenary(830.0, 250.0, line);
  double fh = 0.0, fv = 0.0;
  s.eval(830.0, 250.0, &fh, &fv);
  CHECK(std::abs(fh - r.f_horizontal) / fh_range < 0.015);

  // Continuity probe across the stored regime boundary.
  for (double drop : {245.0, 250.0, 253.0}) {
    const double lb = s.boundary_span_at(drop);
    if (lb < s.domain.span_lo + 0.5 || lb > s.domain.span_hi - 0.5) continue;
    double fh_hi, fv_hi, fh_lo, fv_lo;
    s.eval(lb + 1e-6, drop, &fh_hi, &fv_hi);
    s.eval(lb - 1e-6, drop, &fh_lo, &fv_lo);
    const double mag = std::max({std::abs(fh_hi), std::abs(fv_hi)});
    CHECK(std::abs(fh_hi - fh_lo) < 0.02 * mag);
    CHECK(std::abs(fv_hi - fv_lo) < 0.02 * mag);
  }

  // Regime selection agrees with the exact solver on a sample sweep.
  for (double l = 815.0; l <= 875.0; l += 5.0) {
    const auto exact = solve_catenary(l, 250.0, line);
    CHECK(exact.regime == s.regime_at(l, 250.0));
  }
}

TEST_CASE("surrogate: out-of-domain queries raise, clamped variant counts") {
  const auto& s = shared_surrogate();
  double fh = 0.0, fv = 0.0;
  CHECK_THROWS_WITH_AS(s.eval(s.domain.span_hi + 5.0, 250.0, &fh, &fv),
                       doctest::Contains("extrapolation"), ModelError);
  const long before = s.clamp_count.load();
  s.eval_clamped(s.domain.span_hi + 5.0, 250.0, &fh, &fv);
  CHECK(s.clamp_count.load() == before + 1);
}

TEST_CASE("surrogate: serialization round-trips bit-exactly") {
  const auto& s = shared_surrogate();
  std::ostringstream first;
  save_surrogate(s, first);
  std::istringstream in(first.str());
  const MooringSurrogate loaded = load_surrogate(in);
  std::ostringstream second;
  save_surrogate(loaded, second);
  CHECK(first.str() == second.str());
  for (std::size_t l = 0; l < s.net_suspended.weights.size(); ++l)
    CHECK(loaded.net_suspended.weights[l] == s.net_suspended.weights[l]);
  CHECK(loaded.boundary_span == s.boundary_span);
}

TEST_CASE("surrogate: gradients flow through evaluation") {
  const auto& s = shared_surrogate();
  const double l0 = 845.0, h0 = 250.0, step = 1e-4;
  Dual<2> fh, fv;
  s.eval(Dual<2>::seed(l0, 0), Dual<2>::seed(h0, 1), &fh, &fv);
  double p1, p2, q1, q2, dum;
  s.eval(l0 + step, h0, &p1, &dum);
  s.eval(l0 - step, h0, &p2, &dum);
  s.eval(l0, h0 + step, &q1, &dum);
  s.eval(l0, h0 - step, &q2, &dum);
  CHECK(fh.d[0] == doctest::Approx((p1 - p2) / (2 * step)).epsilon(1e-5));
  CHECK(fh.d[1] == doctest::Approx((q1 - q2) / (2 * step)).epsilon(1e-5));
}

TEST_CASE("mooring loads: symmetry, restoring, and exact-path agreement") {
  const auto& s = shared_surrogate();
  MooringLayout layout;
  LineProperties line;

  const auto at_rest = mooring_loads(0.0, 0.0, 0.0, layout, s);
  const double scale = std::abs(val(at_rest.force[1]));
  CHECK(std::abs(at_rest.force[0]) < 2e-3 * scale);
  CHECK(std::abs(at_rest.moment) < 2e-2 * scale);  // [N m] vs [N] scale

  const auto offset = mooring_loads(8.0, 0.0, 0.0, layout, s);
  CHECK(offset.force[0] < 0.0);  // restoring against positive surge

  // Sweep against direct catenary aggregation.
  for (double x = -10.0; x <= 20.0; x += 5.0) {
    const auto via_net = mooring_loads(x, 0.0, 0.0, layout, s);
    const auto via_exact = mooring_loads<double>(
        x, 0.0, 0.0, layout, [&](const double& span, const double& drop, double* fh, double* fv) {
          const auto r = solve_catenary(span, drop, line);
          *fh = r.f_horizontal;
          *fv = r.f_vertical;
        });
    const double mag =
        std::max(std::abs(via_exact.force[0]), std::abs(via_exact.force[1]));
    CHECK(std::abs(via_net.force[0] - via_exact.force[0]) < 0.03 * mag);
    CHECK(std::abs(via_net.force[1] - via_exact.force[1]) < 0.03 * mag);
  }
}

TEST_CASE("mooring loads: surge restoring force is non-increasing") {
  const auto& s = shared_surrogate();
  MooringLayout layout;
  double prev = std::numeric_limits<double>::infinity();
  for (double x = -12.0; x <= 22.0; x += 2.0) {
    const auto loads = mooring_loads(x, 0.0, 0.0, layout, s);
    CHECK(loads.force[0] < prev + 1e-6);
    prev = loads.force[0];
  }
}
