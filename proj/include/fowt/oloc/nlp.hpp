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

#include <vector>

#include "fowt/types.hpp"

namespace fowt::oloc {

/// Sparse nonlinear program
///   min f(x)  s.t.  g_lo <= g(x) <= g_hi,  x_lo <= x <= x_hi
/// with rows where g_lo == g_hi acting as equalities. The Hessian callback
/// returns the lower triangle of sigma_f * grad^2 f + sum_i lambda_i grad^2 g_i.
class Nlp {
 public:
  virtual ~Nlp() = default;

  virtual int num_vars() const = 0;
  virtual int num_cons() const = 0;
  virtual void bounds(VectorXd* x_lo, VectorXd* x_hi, VectorXd* g_lo,
                      VectorXd* g_hi) const = 0;

  virtual double eval_objective(const VectorXd& x) const = 0;
  virtual void eval_gradient(const VectorXd& x, VectorXd* grad) const = 0;
  virtual void eval_constraints(const VectorXd& x, VectorXd* g) const = 0;

  virtual void jacobian_structure(std::vector<int>* rows, std::vector<int>* cols) const = 0;
  virtual void eval_jacobian(const VectorXd& x, std::vector<double>* values) const = 0;

  virtual void hessian_structure(std::vector<int>* rows, std::vector<int>* cols) const = 0;
  virtual void eval_hessian(const VectorXd& x, double sigma_f, const VectorXd& lambda,
                            std::vector<double>* values) const = 0;
};

}  // namespace fowt::oloc
