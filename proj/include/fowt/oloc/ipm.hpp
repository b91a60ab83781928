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

#include <iosfwd>
#include <string>

#include "fowt/oloc/nlp.hpp"

namespace fowt::oloc {

enum class SolveStatus {
  kOptimal,        // scaled KKT error below tolerance
  kMaxIterations,  // budget exhausted; best feasible-so-far returned
  kInfeasible,     // restoration failed to make progress
};

struct IpmOptions {
  double tolerance = 1e-6;
  int max_iterations = 400;
  double mu_init = 0.1;
  std::ostream* log = nullptr;  // per-iteration merit/feasibility lines
};

struct IpmResult {
  VectorXd x;
  VectorXd constraint_duals;        // lambda, one per row
  VectorXd bound_dual_lower;        // z_L per variable
  VectorXd bound_dual_upper;        // z_U per variable
  VectorXd row_dual_lower;          // slack bound duals per row (inequalities)
  VectorXd row_dual_upper;
  double objective = 0.0;
  double constraint_violation = 0.0;  // unscaled max norm
  double kkt_error = 0.0;             // scaled
  int iterations = 0;
  SolveStatus status = SolveStatus::kMaxIterations;
  std::string message;
};

/// Primal-dual interior-point method with filter line search on the sparse
/// NLP: slacked inequalities, logarithmic barrier subproblems with a
/// monotone mu schedule, inertia-corrected LDLT steps, second-order
/// corrections, and a Gauss-Newton feasibility restoration fallback.
/// Deterministic for identical inputs.
IpmResult solve_nlp(const Nlp& nlp, const VectorXd& x_guess, const IpmOptions& options = {});

}  // namespace fowt::oloc
