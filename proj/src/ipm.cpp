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

#include "fowt/oloc/ipm.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <vector>

namespace fowt::oloc {
namespace {

constexpr double kInf = 1e19;

struct Problem {
  int n = 0;   // nlp variables
  int m = 0;   // constraint rows
  int ms = 0;  // slacks (inequality rows)
  int nz = 0;  // n + ms
  std::vector<int> slack_of_row;  // -1 for equalities
  VectorXd z_lo, z_hi;            // bounds on (x, s); |b| >= kInf means absent
  VectorXd g_lo, g_hi;            // original row bounds
  double obj_scale = 1.0;
  VectorXd row_scale;
  std::vector<int> jac_rows, jac_cols;
  std::vector<int> hess_rows, hess_cols;
};

struct Iterate {
  VectorXd z;        // (x, s)
  VectorXd y;        // constraint duals (scaled problem)
  VectorXd zl, zu;   // bound duals over z
  // Cached evaluations at x = z.head(n).
  double f = 0.0;           // scaled objective
  VectorXd grad;            // scaled gradient over z (slack part zero)
  VectorXd c;               // scaled equality residuals
  std::vector<double> jac;  // scaled jacobian values (nlp order)
};

class Kkt {
 public:
  void init(const Problem& p) {
    p_ = &p;
    const int dim = p.nz + p.m;
    std::vector<Eigen::Triplet<double>> pattern;
    for (std::size_t k = 0; k < p.hess_rows.size(); ++k)
      pattern.emplace_back(p.hess_rows[k], p.hess_cols[k], 1.0);
    for (int i = 0; i < p.nz; ++i) pattern.emplace_back(i, i, 1.0);
    for (int i = 0; i < p.m; ++i) pattern.emplace_back(p.nz + i, p.nz + i, 1.0);
    for (std::size_t k = 0; k < p.jac_rows.size(); ++k)
      pattern.emplace_back(p.nz + p.jac_rows[k], p.jac_cols[k], 1.0);
    for (int i = 0; i < p.m; ++i)
      if (p.slack_of_row[static_cast<std::size_t>(i)] >= 0)
        pattern.emplace_back(p.nz + i, p.n + p.slack_of_row[static_cast<std::size_t>(i)], 1.0);
    matrix_.resize(dim, dim);
    matrix_.setFromTriplets(pattern.begin(), pattern.end());
    solver_.analyzePattern(matrix_);
  }

  // Assembles the lower-triangular augmented system
  //   [ W + Sigma + dw*I   A^T ]
  //   [ A                 -dc*I ]
  // with W the (scaled) Lagrangian Hessian over x, Sigma the barrier
  // diagonal, and A = [J, -P] the slacked constraint Jacobian.
  bool factorize(const Problem& p, const std::vector<double>& hess_vals,
                 const std::vector<double>& jac_vals, const VectorXd& sigma, double dw,
                 double dc, int* wrong_inertia) {
    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(hess_vals.size() + jac_vals.size() + static_cast<std::size_t>(p.nz + 2 * p.m));
    for (std::size_t k = 0; k < hess_vals.size(); ++k)
      trips.emplace_back(p.hess_rows[k], p.hess_cols[k], hess_vals[k]);
    for (int i = 0; i < p.nz; ++i) trips.emplace_back(i, i, sigma[i] + dw);
    for (int i = 0; i < p.m; ++i) trips.emplace_back(p.nz + i, p.nz + i, -std::max(dc, 1e-12));
    for (std::size_t k = 0; k < jac_vals.size(); ++k)
      trips.emplace_back(p.nz + p.jac_rows[k], p.jac_cols[k], jac_vals[k]);
    for (int i = 0; i < p.m; ++i) {
      const int s = p.slack_of_row[static_cast<std::size_t>(i)];
      if (s >= 0) trips.emplace_back(p.nz + i, p.n + s, -1.0);
    }
    matrix_.setFromTriplets(trips.begin(), trips.end());
    solver_.factorize(matrix_);
    if (solver_.info() != Eigen::Success) {
      *wrong_inertia = 1;
      return false;
    }
    int pos = 0, neg = 0, zero = 0;
    const auto& d = solver_.vectorD();
    for (int i = 0; i < d.size(); ++i) {
      if (!std::isfinite(d[i]) || std::abs(d[i]) < 1e-300)
        ++zero;
      else
        (d[i] > 0 ? pos : neg)++;
    }
    *wrong_inertia = (pos != p.nz || neg != p.m || zero != 0) ? 1 : 0;
    return *wrong_inertia == 0;
  }

  VectorXd solve(const VectorXd& rhs) const { return solver_.solve(rhs); }

 private:
  const Problem* p_ = nullptr;
  Eigen::SparseMatrix<double> matrix_;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Lower> solver_;
};

void eval_at(const Nlp& nlp, const Problem& p, Iterate* it) {
  const VectorXd x = it->z.head(p.n);
  it->f = p.obj_scale * nlp.eval_objective(x);
  VectorXd grad_x(p.n);
  nlp.eval_gradient(x, &grad_x);
  it->grad = VectorXd::Zero(p.nz);
  it->grad.head(p.n) = p.obj_scale * grad_x;
  VectorXd g(p.m);
  nlp.eval_constraints(x, &g);
  it->c.resize(p.m);
  for (int i = 0; i < p.m; ++i) {
    const int s = p.slack_of_row[static_cast<std::size_t>(i)];
    const double target =
        s >= 0 ? it->z[p.n + s] : p.row_scale[i] * p.g_lo[i];
    it->c[i] = p.row_scale[i] * g[i] - target;
  }
  std::vector<double> jraw;
  nlp.eval_jacobian(x, &jraw);
  it->jac.resize(jraw.size());
  for (std::size_t k = 0; k < jraw.size(); ++k)
    it->jac[k] = p.row_scale[p.jac_rows[k]] * jraw[k];
}

double barrier_phi(const Problem& p, const Iterate& it, double mu) {
  double phi = it.f;
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf) phi -= mu * std::log(it.z[i] - p.z_lo[i]);
    if (p.z_hi[i] < kInf) phi -= mu * std::log(p.z_hi[i] - it.z[i]);
  }
  return phi;
}

double theta_of(const Iterate& it) { return it.c.lpNorm<1>(); }

VectorXd barrier_grad(const Problem& p, const Iterate& it, double mu) {
  VectorXd g = it.grad;
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf) g[i] -= mu / (it.z[i] - p.z_lo[i]);
    if (p.z_hi[i] < kInf) g[i] += mu / (p.z_hi[i] - it.z[i]);
  }
  return g;
}

// Scaled KKT error with IPOPT-style dual scaling guards.
double kkt_error(const Problem& p, const Iterate& it, double mu) {
  const double s_max = 100.0;
  double dual_sum = it.y.lpNorm<1>() + it.zl.lpNorm<1>() + it.zu.lpNorm<1>();
  int dual_count = p.m;
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf) ++dual_count;
    if (p.z_hi[i] < kInf) ++dual_count;
  }
  const double sd = std::max(s_max, dual_sum / std::max(1, dual_count)) / s_max;

  VectorXd stat = it.grad;
  for (std::size_t k = 0; k < it.jac.size(); ++k)
    stat[p.jac_cols[k]] += it.jac[k] * it.y[p.jac_rows[k]];
  for (int i = 0; i < p.m; ++i) {
    const int s = p.slack_of_row[static_cast<std::size_t>(i)];
    if (s >= 0) stat[p.n + s] -= it.y[i];
  }
  stat -= it.zl;
  stat += it.zu;

  double comp = 0.0;
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf)
      comp = std::max(comp, std::abs((it.z[i] - p.z_lo[i]) * it.zl[i] - mu));
    if (p.z_hi[i] < kInf)
      comp = std::max(comp, std::abs((p.z_hi[i] - it.z[i]) * it.zu[i] - mu));
  }
  return std::max({stat.lpNorm<Eigen::Infinity>() / sd, it.c.lpNorm<Eigen::Infinity>(),
                   comp / sd});
}

double fraction_to_boundary(const Problem& p, const VectorXd& z, const VectorXd& dz,
                            double tau) {
  double alpha = 1.0;
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf && dz[i] < 0.0)
      alpha = std::min(alpha, -tau * (z[i] - p.z_lo[i]) / dz[i]);
    if (p.z_hi[i] < kInf && dz[i] > 0.0)
      alpha = std::min(alpha, tau * (p.z_hi[i] - z[i]) / dz[i]);
  }
  return alpha;
}

}  // namespace

IpmResult solve_nlp(const Nlp& nlp, const VectorXd& x_guess, const IpmOptions& options) {
  Problem p;
  p.n = nlp.num_vars();
  p.m = nlp.num_cons();
  VectorXd x_lo(p.n), x_hi(p.n);
  p.g_lo.resize(p.m);
  p.g_hi.resize(p.m);
  nlp.bounds(&x_lo, &x_hi, &p.g_lo, &p.g_hi);
  nlp.jacobian_structure(&p.jac_rows, &p.jac_cols);
  nlp.hessian_structure(&p.hess_rows, &p.hess_cols);

  p.slack_of_row.assign(static_cast<std::size_t>(p.m), -1);
  for (int i = 0; i < p.m; ++i)
    if (p.g_hi[i] - p.g_lo[i] > 0.0) p.slack_of_row[static_cast<std::size_t>(i)] = p.ms++;
  p.nz = p.n + p.ms;

  // Gradient-based scaling at the starting point.
  VectorXd x0 = x_guess;
  for (int i = 0; i < p.n; ++i) x0[i] = std::clamp(x0[i], x_lo[i], x_hi[i]);
  {
    VectorXd grad0(p.n);
    nlp.eval_gradient(x0, &grad0);
    const double gmax = grad0.lpNorm<Eigen::Infinity>();
    p.obj_scale = (gmax > 100.0) ? 100.0 / gmax : 1.0;
    std::vector<double> jac0;
    nlp.eval_jacobian(x0, &jac0);
    VectorXd row_max = VectorXd::Zero(p.m);
    for (std::size_t k = 0; k < jac0.size(); ++k)
      row_max[p.jac_rows[k]] = std::max(row_max[p.jac_rows[k]], std::abs(jac0[k]));
    p.row_scale.resize(p.m);
    for (int i = 0; i < p.m; ++i)
      p.row_scale[i] = (row_max[i] > 100.0) ? 100.0 / row_max[i] : 1.0;
  }

  // Bounds over (x, s); slack bounds are the scaled row bounds.
  p.z_lo.resize(p.nz);
  p.z_hi.resize(p.nz);
  for (int i = 0; i < p.n; ++i) {
    p.z_lo[i] = x_lo[i] <= -kInf ? -kInf : x_lo[i];
    p.z_hi[i] = x_hi[i] >= kInf ? kInf : x_hi[i];
  }
  for (int i = 0; i < p.m; ++i) {
    const int s = p.slack_of_row[static_cast<std::size_t>(i)];
    if (s < 0) continue;
    p.z_lo[p.n + s] = p.g_lo[i] <= -kInf ? -kInf : p.row_scale[i] * p.g_lo[i];
    p.z_hi[p.n + s] = p.g_hi[i] >= kInf ? kInf : p.row_scale[i] * p.g_hi[i];
  }

  // Interior starting point.
  Iterate it;
  it.z.resize(p.nz);
  const double kappa = 0.01;
  auto push_interior = [&](double v, double lo, double hi) {
    if (lo > -kInf && hi < kInf) {
      const double pad = std::min(kappa * std::max(1.0, std::abs(lo)), kappa * (hi - lo));
      return std::clamp(v, lo + pad, hi - pad);
    }
    if (lo > -kInf) return std::max(v, lo + kappa * std::max(1.0, std::abs(lo)));
    if (hi < kInf) return std::min(v, hi - kappa * std::max(1.0, std::abs(hi)));
    return v;
  };
  for (int i = 0; i < p.n; ++i) it.z[i] = push_interior(x0[i], p.z_lo[i], p.z_hi[i]);
  {
    VectorXd g0(p.m);
    nlp.eval_constraints(it.z.head(p.n), &g0);
    for (int i = 0; i < p.m; ++i) {
      const int s = p.slack_of_row[static_cast<std::size_t>(i)];
      if (s >= 0)
        it.z[p.n + s] =
            push_interior(p.row_scale[i] * g0[i], p.z_lo[p.n + s], p.z_hi[p.n + s]);
    }
  }

  double mu = options.mu_init;
  it.y = VectorXd::Zero(p.m);
  it.zl = VectorXd::Zero(p.nz);
  it.zu = VectorXd::Zero(p.nz);
  for (int i = 0; i < p.nz; ++i) {
    if (p.z_lo[i] > -kInf) it.zl[i] = std::clamp(mu / (it.z[i] - p.z_lo[i]), 1e-8, 1e8);
    if (p.z_hi[i] < kInf) it.zu[i] = std::clamp(mu / (p.z_hi[i] - it.z[i]), 1e-8, 1e8);
  }
  eval_at(nlp, p, &it);

  Kkt kkt;
  kkt.init(p);

  // Filter state.
  std::vector<std::pair<double, double>> filter;  // (theta, phi)
  const double theta0 = theta_of(it);
  const double theta_max = 1e4 * std::max(1.0, theta0);
  const double theta_min = 1e-4 * std::max(1.0, theta0);
  filter.emplace_back(theta_max, -std::numeric_limits<double>::infinity());

  const double gamma_theta = 1e-5, gamma_phi = 1e-8, s_theta = 1.1, s_phi = 2.3;
  const double eta_phi = 1e-8, kappa_sigma = 1e10;

  IpmResult best;
  best.x = it.z.head(p.n);
  double best_theta = std::numeric_limits<double>::infinity();
  double best_f = std::numeric_limits<double>::infinity();

  std::vector<double> hess_vals;
  double delta_w_last = 0.0;
  int restoration_count = 0;

  IpmResult result;
  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    // Track the best (near-)feasible iterate for non-optimal exits.
    {
      const double th = theta_of(it);
      const double feas_band = 1e-6 * std::max(1.0, theta0);
      const bool candidate = (th <= feas_band && it.f < best_f) ||
                             (best_theta > feas_band && th < best_theta);
      if (candidate) {
        best_theta = th;
        best_f = it.f;
        best.x = it.z.head(p.n);
        best.constraint_duals = it.y;
      }
    }

    const double err0 = kkt_error(p, it, 0.0);
    if (options.log) {
      (*options.log) << "iter " << iter << " mu " << mu << " f " << it.f / p.obj_scale
                     << " theta " << theta_of(it) << " kkt " << err0 << '\n';
    }
    if (err0 <= options.tolerance) {
      result.status = SolveStatus::kOptimal;
      break;
    }
    while (kkt_error(p, it, mu) <= 10.0 * mu && mu > options.tolerance / 20.0) {
      mu = std::max(options.tolerance / 20.0, std::min(0.2 * mu, std::pow(mu, 1.5)));
      filter.clear();
      filter.emplace_back(theta_max, -std::numeric_limits<double>::infinity());
    }

    // Assemble Hessian of the scaled Lagrangian.
    VectorXd lambda_scaled(p.m);
    for (int i = 0; i < p.m; ++i) lambda_scaled[i] = p.row_scale[i] * it.y[i];
    nlp.eval_hessian(it.z.head(p.n), p.obj_scale, lambda_scaled, &hess_vals);

    VectorXd sigma = VectorXd::Zero(p.nz);
    for (int i = 0; i < p.nz; ++i) {
      if (p.z_lo[i] > -kInf) sigma[i] += it.zl[i] / (it.z[i] - p.z_lo[i]);
      if (p.z_hi[i] < kInf) sigma[i] += it.zu[i] / (p.z_hi[i] - it.z[i]);
    }

    // Inertia-corrected factorization.
    double dw = 0.0;
    double dc = 0.0;
    int wrong = 0;
    bool ok = kkt.factorize(p, hess_vals, it.jac, sigma, dw, dc, &wrong);
    if (!ok) {
      dw = (delta_w_last == 0.0) ? 1e-4 : std::max(1e-20, delta_w_last / 3.0);
      for (int tries = 0; tries < 40 && !ok; ++tries) {
        dc = 1e-8 * std::pow(std::max(mu, 1e-10), 0.25);
        ok = kkt.factorize(p, hess_vals, it.jac, sigma, dw, dc, &wrong);
        if (!ok) dw *= 8.0;
      }
      if (!ok) {
        result.status = SolveStatus::kInfeasible;
        result.message = "KKT factorization failed despite regularization";
        break;
      }
      delta_w_last = dw;
    }

    // Newton step.
    const VectorXd gphi = barrier_grad(p, it, mu);
    VectorXd rhs(p.nz + p.m);
    rhs.head(p.nz) = -gphi;
    // Subtract J^T y contribution: the reduced system solves for y directly.
    rhs.tail(p.m) = -it.c;
    // With the barrier gradient on the rhs the second solution block is the
    // updated multiplier vector itself.
    const VectorXd sol = kkt.solve(rhs);
    const VectorXd dz = sol.head(p.nz);
    const VectorXd y_new = sol.tail(p.m);
    const VectorXd dy = y_new - it.y;

    VectorXd dzl = VectorXd::Zero(p.nz), dzu = VectorXd::Zero(p.nz);
    for (int i = 0; i < p.nz; ++i) {
      if (p.z_lo[i] > -kInf) {
        const double d = it.z[i] - p.z_lo[i];
        dzl[i] = mu / d - it.zl[i] - it.zl[i] / d * dz[i];
      }
      if (p.z_hi[i] < kInf) {
        const double d = p.z_hi[i] - it.z[i];
        dzu[i] = mu / d - it.zu[i] + it.zu[i] / d * dz[i];
      }
    }

    const double tau = std::max(0.99, 1.0 - mu);
    const double alpha_max = fraction_to_boundary(p, it.z, dz, tau);
    double alpha_dual = 1.0;
    for (int i = 0; i < p.nz; ++i) {
      if (p.z_lo[i] > -kInf && dzl[i] < 0.0)
        alpha_dual = std::min(alpha_dual, -tau * it.zl[i] / dzl[i]);
      if (p.z_hi[i] < kInf && dzu[i] < 0.0)
        alpha_dual = std::min(alpha_dual, -tau * it.zu[i] / dzu[i]);
    }

    const double theta_k = theta_of(it);
    const double phi_k = barrier_phi(p, it, mu);
    const double m_k = gphi.dot(dz);

    auto filter_blocks = [&](double th, double ph) {
      for (const auto& [ft, fp] : filter)
        if (th >= ft && ph >= fp) return true;
      return false;
    };

    Iterate trial = it;
    double alpha = alpha_max;
    bool accepted = false;
    bool used_armijo = false;
    bool tried_soc = false;
    while (alpha >= 1e-10) {
      trial.z = it.z + alpha * dz;
      eval_at(nlp, p, &trial);
      const double theta_t = theta_of(trial);
      const double phi_t = barrier_phi(p, trial, mu);

      const bool switching =
          m_k < 0.0 && alpha * std::pow(-m_k, s_phi) > std::pow(theta_k, s_theta);
      bool acceptable;
      if (theta_k <= theta_min && switching) {
        acceptable = phi_t <= phi_k + eta_phi * alpha * m_k;  // Armijo
        used_armijo = acceptable;
      } else {
        acceptable =
            theta_t <= (1.0 - gamma_theta) * theta_k || phi_t <= phi_k - gamma_phi * theta_k;
      }
      if (acceptable && !filter_blocks(theta_t, phi_t)) {
        accepted = true;
        break;
      }

      // One second-order correction at the full step.
      if (!tried_soc && alpha == alpha_max && theta_t >= theta_k) {
        tried_soc = true;
        VectorXd rhs_soc(p.nz + p.m);
        rhs_soc.head(p.nz).setZero();
        rhs_soc.tail(p.m) = -trial.c;
        const VectorXd cor = kkt.solve(rhs_soc).head(p.nz);
        Iterate soc = it;
        const double a_soc = fraction_to_boundary(p, it.z, (alpha * dz + cor).eval(), tau);
        soc.z = it.z + a_soc * (alpha * dz + cor);
        eval_at(nlp, p, &soc);
        const double theta_s = theta_of(soc);
        const double phi_s = barrier_phi(p, soc, mu);
        bool ok_soc;
        if (theta_k <= theta_min && m_k < 0.0) {
          ok_soc = phi_s <= phi_k + eta_phi * a_soc * m_k;
        } else {
          ok_soc = theta_s <= (1.0 - gamma_theta) * theta_k ||
                   phi_s <= phi_k - gamma_phi * theta_k;
        }
        if (ok_soc && !filter_blocks(theta_s, phi_s)) {
          trial = soc;
          alpha = a_soc;
          accepted = true;
          break;
        }
      }
      alpha *= 0.5;
    }

    if (!accepted) {
      // Feasibility restoration: damped Gauss-Newton on the constraint
      // violation, keeping iterates interior.
      ++restoration_count;
      if (restoration_count > 6) {
        result.status = SolveStatus::kInfeasible;
        result.message = "repeated restoration without progress";
        break;
      }
      const double theta_enter = theta_of(it);
      bool improved = false;
      for (int rit = 0; rit < 40; ++rit) {
        VectorXd sigma_r = VectorXd::Zero(p.nz);
        for (int i = 0; i < p.nz; ++i) {
          if (p.z_lo[i] > -kInf) sigma_r[i] += it.zl[i] / (it.z[i] - p.z_lo[i]);
          if (p.z_hi[i] < kInf) sigma_r[i] += it.zu[i] / (p.z_hi[i] - it.z[i]);
        }
        std::vector<double> zero_hess(p.hess_rows.size(), 0.0);
        int wrong_r = 0;
        if (!kkt.factorize(p, zero_hess, it.jac, sigma_r, 1e-4, 1.0, &wrong_r)) break;
        VectorXd rhs_r(p.nz + p.m);
        rhs_r.head(p.nz).setZero();
        rhs_r.tail(p.m) = -it.c;
        const VectorXd dz_r = kkt.solve(rhs_r).head(p.nz);
        double a_r = fraction_to_boundary(p, it.z, dz_r, 0.99);
        Iterate t2 = it;
        bool step_ok = false;
        for (int ls = 0; ls < 30; ++ls) {
          t2.z = it.z + a_r * dz_r;
          eval_at(nlp, p, &t2);
          if (theta_of(t2) < theta_of(it)) {
            step_ok = true;
            break;
          }
          a_r *= 0.5;
        }
        if (!step_ok) break;
        it.z = t2.z;
        eval_at(nlp, p, &it);
        if (theta_of(it) <= 0.5 * theta_enter) {
          improved = true;
          break;
        }
      }
      if (!improved && theta_of(it) >= theta_enter) {
        result.status = SolveStatus::kInfeasible;
        result.message = "feasibility restoration stalled";
        break;
      }
      filter.clear();
      filter.emplace_back(theta_max, -std::numeric_limits<double>::infinity());
      continue;
    }

    if (!used_armijo) {
      filter.emplace_back(std::max((1.0 - gamma_theta) * theta_k, 0.0),
                          phi_k - gamma_phi * theta_k);
    }

    it.z = trial.z;
    it.f = trial.f;
    it.grad = trial.grad;
    it.c = trial.c;
    it.jac = trial.jac;
    it.y += std::min(alpha, alpha_dual) * dy;
    it.zl += alpha_dual * dzl;
    it.zu += alpha_dual * dzu;
    // Dual safeguard relative to the primal iterate.
    for (int i = 0; i < p.nz; ++i) {
      if (p.z_lo[i] > -kInf) {
        const double d = it.z[i] - p.z_lo[i];
        it.zl[i] = std::clamp(it.zl[i], mu / (kappa_sigma * d), kappa_sigma * mu / d);
      }
      if (p.z_hi[i] < kInf) {
        const double d = p.z_hi[i] - it.z[i];
        it.zu[i] = std::clamp(it.zu[i], mu / (kappa_sigma * d), kappa_sigma * mu / d);
      }
    }
  }

  if (iter >= options.max_iterations) result.status = SolveStatus::kMaxIterations;

  // Report the final (or best) iterate in user scaling.
  const bool use_best = result.status != SolveStatus::kOptimal &&
                        best_theta < theta_of(it);
  const VectorXd x_final = use_best ? best.x : VectorXd(it.z.head(p.n));
  result.x = x_final;
  result.iterations = iter;
  result.objective = nlp.eval_objective(x_final);
  result.constraint_duals.resize(p.m);
  result.row_dual_lower = VectorXd::Zero(p.m);
  result.row_dual_upper = VectorXd::Zero(p.m);
  for (int i = 0; i < p.m; ++i) {
    result.constraint_duals[i] = it.y[i] * p.row_scale[i] / p.obj_scale;
    const int s = p.slack_of_row[static_cast<std::size_t>(i)];
    if (s >= 0) {
      result.row_dual_lower[i] = it.zl[p.n + s] * p.row_scale[i] / p.obj_scale;
      result.row_dual_upper[i] = it.zu[p.n + s] * p.row_scale[i] / p.obj_scale;
    }
  }
  result.bound_dual_lower = it.zl.head(p.n) / p.obj_scale;
  result.bound_dual_upper = it.zu.head(p.n) / p.obj_scale;

  VectorXd g_final(p.m);
  nlp.eval_constraints(x_final, &g_final);
  double viol = 0.0;
  for (int i = 0; i < p.m; ++i) {
    viol = std::max(viol, p.g_lo[i] - g_final[i]);
    viol = std::max(viol, g_final[i] - p.g_hi[i]);
  }
  result.constraint_violation = std::max(viol, 0.0);
  result.kkt_error = kkt_error(p, it, 0.0);
  if (result.status == SolveStatus::kOptimal && result.message.empty())
    result.message = "optimal";
  return result;
}

}  // namespace fowt::oloc
