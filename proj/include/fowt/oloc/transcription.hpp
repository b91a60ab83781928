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

// Separated Hermite-Simpson collocation. Decision variables are states and
// control rates at the segment endpoints and midpoints; each segment
// contributes a Hermite interpolation defect and a Simpson quadrature
// defect. The objective is the Simpson quadrature of the model integrand.
//
// A Model provides (scalar-generic over T):
//   static constexpr int kNx, kNu, kNg;
//   void dynamics(double t, const Vec<T,kNx>&, const Vec<T,kNu>&, Vec<T,kNx>*) const;
//   void path(double t, const Vec<T,kNx>&, const Vec<T,kNu>&, Vec<T,kNg>*) const;
//   T integrand(double t, const Vec<T,kNx>&, const Vec<T,kNu>&) const;

#pragma once

#include <array>

#include "fowt/dual.hpp"
#include "fowt/oloc/nlp.hpp"

namespace fowt::oloc {

template <typename Model>
class HermiteSimpsonNlp : public Nlp {
 public:
  static constexpr int kNx = Model::kNx;
  static constexpr int kNu = Model::kNu;
  static constexpr int kNg = Model::kNg;
  static constexpr int kNl = kNx + kNu;  // local variables per collocation point

  struct Setup {
    double t_initial = 0.0;
    double t_final = 100.0;
    int segments = 50;
    Vec<double, kNx> x_lo = Vec<double, kNx>::Constant(-1e20);
    Vec<double, kNx> x_hi = Vec<double, kNx>::Constant(1e20);
    Vec<double, kNu> u_lo = Vec<double, kNu>::Constant(-1e20);
    Vec<double, kNu> u_hi = Vec<double, kNu>::Constant(1e20);
    Vec<double, kNx> x_initial = Vec<double, kNx>::Zero();
    std::array<bool, kNx> fix_initial = {};  // pin state components at t0
    Vec<double, kNx> x_final = Vec<double, kNx>::Zero();
    std::array<bool, kNx> fix_final = {};
    Vec<double, kNg> g_lo = Vec<double, kNg>::Constant(-1e20);
    Vec<double, kNg> g_hi = Vec<double, kNg>::Constant(1e20);
    Vec<double, kNx> x_scale = Vec<double, kNx>::Ones();
    Vec<double, kNu> u_scale = Vec<double, kNu>::Ones();
  };

  HermiteSimpsonNlp(const Model& model, Setup setup) : model_(&model), s_(std::move(setup)) {
    if (s_.segments < 1) throw ModelError("invalid-argument", "mesh needs >= 1 segment");
    n_points_ = 2 * s_.segments + 1;
    h_ = (s_.t_final - s_.t_initial) / s_.segments;
    if (!(h_ > 0.0)) throw ModelError("invalid-argument", "horizon must be positive");
    // Simpson quadrature weight per point.
    weight_.assign(static_cast<std::size_t>(n_points_), 0.0);
    for (int i = 0; i < s_.segments; ++i) {
      weight_[static_cast<std::size_t>(2 * i)] += h_ / 6.0;
      weight_[static_cast<std::size_t>(2 * i + 1)] += 4.0 * h_ / 6.0;
      weight_[static_cast<std::size_t>(2 * i + 2)] += h_ / 6.0;
    }
  }

  int num_vars() const override { return n_points_ * kNl; }
  int num_cons() const override { return s_.segments * 2 * kNx + n_points_ * kNg; }
  int point_count() const { return n_points_; }
  double time_of(int k) const { return s_.t_initial + 0.5 * h_ * k; }
  double segment_length() const { return h_; }
  const Setup& setup() const { return s_; }

  int var_base(int point) const { return point * kNl; }
  int defect_row(int segment, int which, int state) const {
    return segment * 2 * kNx + which * kNx + state;
  }
  int path_row(int point, int g) const { return s_.segments * 2 * kNx + point * kNg + g; }

  Vec<double, kNx> state_at(const VectorXd& vars, int point) const {
    Vec<double, kNx> x;
    for (int j = 0; j < kNx; ++j) x[j] = vars[var_base(point) + j] * s_.x_scale[j];
    return x;
  }
  Vec<double, kNu> control_at(const VectorXd& vars, int point) const {
    Vec<double, kNu> u;
    for (int j = 0; j < kNu; ++j) u[j] = vars[var_base(point) + kNx + j] * s_.u_scale[j];
    return u;
  }
  void set_point(VectorXd* vars, int point, const Vec<double, kNx>& x,
                 const Vec<double, kNu>& u) const {
    for (int j = 0; j < kNx; ++j) (*vars)[var_base(point) + j] = x[j] / s_.x_scale[j];
    for (int j = 0; j < kNu; ++j) (*vars)[var_base(point) + kNx + j] = u[j] / s_.u_scale[j];
  }

  void bounds(VectorXd* x_lo, VectorXd* x_hi, VectorXd* g_lo, VectorXd* g_hi) const override {
    x_lo->resize(num_vars());
    x_hi->resize(num_vars());
    for (int k = 0; k < n_points_; ++k) {
      for (int j = 0; j < kNx; ++j) {
        double lo = s_.x_lo[j], hi = s_.x_hi[j];
        if (k == 0 && s_.fix_initial[static_cast<std::size_t>(j)])
          lo = hi = s_.x_initial[j];
        if (k == n_points_ - 1 && s_.fix_final[static_cast<std::size_t>(j)])
          lo = hi = s_.x_final[j];
        (*x_lo)[var_base(k) + j] = lo / s_.x_scale[j];
        (*x_hi)[var_base(k) + j] = hi / s_.x_scale[j];
      }
      for (int j = 0; j < kNu; ++j) {
        (*x_lo)[var_base(k) + kNx + j] = s_.u_lo[j] / s_.u_scale[j];
        (*x_hi)[var_base(k) + kNx + j] = s_.u_hi[j] / s_.u_scale[j];
      }
    }
    g_lo->resize(num_cons());
    g_hi->resize(num_cons());
    g_lo->head(s_.segments * 2 * kNx).setZero();
    g_hi->head(s_.segments * 2 * kNx).setZero();
    for (int k = 0; k < n_points_; ++k) {
      for (int g = 0; g < kNg; ++g) {
        (*g_lo)[path_row(k, g)] = s_.g_lo[g];
        (*g_hi)[path_row(k, g)] = s_.g_hi[g];
      }
    }
  }

  double eval_objective(const VectorXd& vars) const override {
    double j = 0.0;
    for (int k = 0; k < n_points_; ++k)
      j += weight_[static_cast<std::size_t>(k)] *
           model_->integrand(time_of(k), state_at(vars, k), control_at(vars, k));
    return j;
  }

  void eval_gradient(const VectorXd& vars, VectorXd* grad) const override {
    using D = Dual<kNl>;
    grad->setZero(num_vars());
    for (int k = 0; k < n_points_; ++k) {
      Vec<D, kNx> x;
      Vec<D, kNu> u;
      seed_point(vars, k, &x, &u);
      const D w = model_->integrand(time_of(k), x, u);
      for (int j = 0; j < kNl; ++j)
        (*grad)[var_base(k) + j] = weight_[static_cast<std::size_t>(k)] * w.d[j];
    }
  }

  void eval_constraints(const VectorXd& vars, VectorXd* g) const override {
    g->resize(num_cons());
    std::vector<Vec<double, kNx>> f(static_cast<std::size_t>(n_points_));
    for (int k = 0; k < n_points_; ++k) {
      Vec<double, kNx> fx;
      model_->dynamics(time_of(k), state_at(vars, k), control_at(vars, k), &fx);
      for (int j = 0; j < kNx; ++j) fx[j] /= s_.x_scale[j];
      f[static_cast<std::size_t>(k)] = fx;
    }
    for (int i = 0; i < s_.segments; ++i) {
      const int l = 2 * i, m = 2 * i + 1, r = 2 * i + 2;
      for (int j = 0; j < kNx; ++j) {
        const double xl = vars[var_base(l) + j], xm = vars[var_base(m) + j],
                     xr = vars[var_base(r) + j];
        (*g)[defect_row(i, 0, j)] =
            xm - 0.5 * (xl + xr) -
            h_ / 8.0 * (f[static_cast<std::size_t>(l)][j] - f[static_cast<std::size_t>(r)][j]);
        (*g)[defect_row(i, 1, j)] =
            xr - xl -
            h_ / 6.0 *
                (f[static_cast<std::size_t>(l)][j] + 4.0 * f[static_cast<std::size_t>(m)][j] +
                 f[static_cast<std::size_t>(r)][j]);
      }
    }
    if constexpr (kNg > 0) {
      for (int k = 0; k < n_points_; ++k) {
        Vec<double, kNg> pg;
        model_->path(time_of(k), state_at(vars, k), control_at(vars, k), &pg);
        for (int j = 0; j < kNg; ++j) (*g)[path_row(k, j)] = pg[j];
      }
    }
  }

  void jacobian_structure(std::vector<int>* rows, std::vector<int>* cols) const override {
    rows->clear();
    cols->clear();
    for (int i = 0; i < s_.segments; ++i) {
      for (int which = 0; which < 2; ++which) {
        for (int j = 0; j < kNx; ++j) {
          const int row = defect_row(i, which, j);
          for (int point : {2 * i, 2 * i + 1, 2 * i + 2}) {
            for (int v = 0; v < kNl; ++v) {
              rows->push_back(row);
              cols->push_back(var_base(point) + v);
            }
          }
        }
      }
    }
    if constexpr (kNg > 0) {
      for (int k = 0; k < n_points_; ++k) {
        for (int j = 0; j < kNg; ++j) {
          for (int v = 0; v < kNl; ++v) {
            rows->push_back(path_row(k, j));
            cols->push_back(var_base(k) + v);
          }
        }
      }
    }
  }

  void eval_jacobian(const VectorXd& vars, std::vector<double>* values) const override {
    using D = Dual<kNl>;
    // Per-point dynamics Jacobians (scaled): d f_j / d z_v.
    std::vector<Mat<double, kNx, kNl>> df(static_cast<std::size_t>(n_points_));
    for (int k = 0; k < n_points_; ++k) {
      Vec<D, kNx> x;
      Vec<D, kNu> u;
      seed_point(vars, k, &x, &u);
      Vec<D, kNx> fx;
      model_->dynamics(time_of(k), x, u, &fx);
      for (int j = 0; j < kNx; ++j)
        for (int v = 0; v < kNl; ++v)
          df[static_cast<std::size_t>(k)](j, v) = fx[j].d[v] / s_.x_scale[j];
    }
    values->clear();
    values->reserve(static_cast<std::size_t>(num_cons()) * 3 * kNl);
    auto emit_defect = [&](int which, int j, int role, int point,
                           const Mat<double, kNx, kNl>& dfk) {
      // role: 0 = left, 1 = mid, 2 = right
      for (int v = 0; v < kNl; ++v) {
        double entry = 0.0;
        const bool is_state = v == j;  // identity acts on the state itself
        if (which == 0) {
          if (role == 0) entry = (is_state ? -0.5 : 0.0) - h_ / 8.0 * dfk(j, v);
          if (role == 1) entry = is_state ? 1.0 : 0.0;
          if (role == 2) entry = (is_state ? -0.5 : 0.0) + h_ / 8.0 * dfk(j, v);
        } else {
          if (role == 0) entry = (is_state ? -1.0 : 0.0) - h_ / 6.0 * dfk(j, v);
          if (role == 1) entry = -4.0 * h_ / 6.0 * dfk(j, v);
          if (role == 2) entry = (is_state ? 1.0 : 0.0) - h_ / 6.0 * dfk(j, v);
        }
        values->push_back(entry);
        (void)point;
      }
    };
    for (int i = 0; i < s_.segments; ++i) {
      for (int which = 0; which < 2; ++which) {
        for (int j = 0; j < kNx; ++j) {
          emit_defect(which, j, 0, 2 * i, df[static_cast<std::size_t>(2 * i)]);
          emit_defect(which, j, 1, 2 * i + 1, df[static_cast<std::size_t>(2 * i + 1)]);
          emit_defect(which, j, 2, 2 * i + 2, df[static_cast<std::size_t>(2 * i + 2)]);
        }
      }
    }
    if constexpr (kNg > 0) {
      for (int k = 0; k < n_points_; ++k) {
        Vec<D, kNx> x;
        Vec<D, kNu> u;
        seed_point(vars, k, &x, &u);
        Vec<D, kNg> pg;
        model_->path(time_of(k), x, u, &pg);
        for (int j = 0; j < kNg; ++j)
          for (int v = 0; v < kNl; ++v) values->push_back(pg[j].d[v]);
      }
    }
  }

  void hessian_structure(std::vector<int>* rows, std::vector<int>* cols) const override {
    rows->clear();
    cols->clear();
    for (int k = 0; k < n_points_; ++k) {
      for (int a = 0; a < kNl; ++a) {
        for (int b = 0; b <= a; ++b) {
          rows->push_back(var_base(k) + a);
          cols->push_back(var_base(k) + b);
        }
      }
    }
  }

  void eval_hessian(const VectorXd& vars, double sigma_f, const VectorXd& lambda,
                    std::vector<double>* values) const override {
    using D2 = Dual2<kNl>;
    values->clear();
    values->reserve(static_cast<std::size_t>(n_points_) * kNl * (kNl + 1) / 2);
    for (int k = 0; k < n_points_; ++k) {
      // Combined multiplier weights on the point dynamics: every defect row
      // touching this point contributes linearly in f(z_k), so the whole
      // Lagrangian restricted to the point is one scalar expression.
      Vec<double, kNx> a = Vec<double, kNx>::Zero();
      auto add = [&](int seg, int which, double coeff) {
        for (int j = 0; j < kNx; ++j)
          a[j] += lambda[defect_row(seg, which, j)] * coeff / s_.x_scale[j];
      };
      if (k % 2 == 1) {
        add((k - 1) / 2, 1, -4.0 * h_ / 6.0);
      } else {
        if (k / 2 < s_.segments) {  // left end of segment k/2
          add(k / 2, 0, -h_ / 8.0);
          add(k / 2, 1, -h_ / 6.0);
        }
        if (k / 2 > 0) {  // right end of segment k/2 - 1
          add(k / 2 - 1, 0, h_ / 8.0);
          add(k / 2 - 1, 1, -h_ / 6.0);
        }
      }

      Vec<D2, kNx> x;
      Vec<D2, kNu> u;
      seed_point2(vars, k, &x, &u);
      D2 total = sigma_f * weight_[static_cast<std::size_t>(k)] *
                 model_->integrand(time_of(k), x, u);
      if (a.cwiseAbs().maxCoeff() > 0.0) {
        Vec<D2, kNx> fx;
        model_->dynamics(time_of(k), x, u, &fx);
        for (int j = 0; j < kNx; ++j) total += a[j] * fx[j];
      }
      if constexpr (kNg > 0) {
        Vec<double, kNg> b;
        for (int j = 0; j < kNg; ++j) b[j] = lambda[path_row(k, j)];
        if (b.cwiseAbs().maxCoeff() > 0.0) {
          Vec<D2, kNg> pg;
          model_->path(time_of(k), x, u, &pg);
          for (int j = 0; j < kNg; ++j) total += b[j] * pg[j];
        }
      }
      for (int aa = 0; aa < kNl; ++aa)
        for (int bb = 0; bb <= aa; ++bb) values->push_back(total.h(aa, bb));
    }
  }

 private:
  template <typename T>
  void seed_point(const VectorXd& vars, int k, Vec<T, kNx>* x, Vec<T, kNu>* u) const {
    const int base = var_base(k);
    for (int j = 0; j < kNx; ++j)
      (*x)[j] = T::seed(vars[base + j], j) * s_.x_scale[j];
    for (int j = 0; j < kNu; ++j)
      (*u)[j] = T::seed(vars[base + kNx + j], kNx + j) * s_.u_scale[j];
  }
  template <typename T2 = Dual2<kNl>>
  void seed_point2(const VectorXd& vars, int k, Vec<T2, kNx>* x, Vec<T2, kNu>* u) const {
    const int base = var_base(k);
    for (int j = 0; j < kNx; ++j)
      (*x)[j] = T2::seed(vars[base + j], j) * s_.x_scale[j];
    for (int j = 0; j < kNu; ++j)
      (*u)[j] = T2::seed(vars[base + kNx + j], kNx + j) * s_.u_scale[j];
  }

  const Model* model_;
  Setup s_;
  int n_points_ = 0;
  double h_ = 0.0;
  std::vector<double> weight_;
};

}  // namespace fowt::oloc
