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

namespace fowt::mooring {

/// Fully-connected tanh network. Weights are plain doubles; the forward
/// pass is scalar-generic so AD types can flow through evaluations.
struct Mlp {
  std::vector<MatrixXd> weights;  // layer l maps n_in -> n_out as W x + b
  std::vector<VectorXd> biases;

  int input_size() const { return static_cast<int>(weights.front().cols()); }
  int output_size() const { return static_cast<int>(weights.back().rows()); }

  template <typename T>
  std::vector<T> forward(const std::vector<T>& in) const {
    using std::tanh;
    std::vector<T> a = in;
    for (std::size_t l = 0; l < weights.size(); ++l) {
      const MatrixXd& w = weights[l];
      const VectorXd& b = biases[l];
      std::vector<T> next(static_cast<std::size_t>(w.rows()));
      for (int i = 0; i < w.rows(); ++i) {
        T acc = T(b[i]);
        for (int j = 0; j < w.cols(); ++j) acc += w(i, j) * a[static_cast<std::size_t>(j)];
        next[static_cast<std::size_t>(i)] = (l + 1 < weights.size()) ? tanh(acc) : acc;
      }
      a = std::move(next);
    }
    return a;
  }

  MatrixXd forward_batch(const MatrixXd& in) const;  // columns are samples
};

struct TrainOptions {
  int max_epochs = 15000;
  int patience = 1500;          // early-stopping window on the held-out split
  double learning_rate = 5e-3;
  double validation_fraction = 0.2;
  std::uint64_t seed = 0;
};

struct TrainReport {
  int epochs_run = 0;
  double best_validation_mse = 0.0;
};

/// Full-batch Adam on mean squared error with early stopping on a held-out
/// split; the best-validation weights are restored on return. Deterministic
/// for a fixed seed.
TrainReport train_mlp(Mlp& net, const MatrixXd& inputs, const MatrixXd& targets,
                      const TrainOptions& opts);

/// Xavier-uniform initialized network with the given hidden layer sizes.
Mlp make_mlp(int n_in, const std::vector<int>& hidden, int n_out, std::uint64_t seed);

}  // namespace fowt::mooring
