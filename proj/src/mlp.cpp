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

#include "fowt/mooring/mlp.hpp"

#include <algorithm>
#include <cmath>

#include "fowt/rng.hpp"

namespace fowt::mooring {

MatrixXd Mlp::forward_batch(const MatrixXd& in) const {
  MatrixXd a = in;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    MatrixXd z = (weights[l] * a).colwise() + biases[l];
    a = (l + 1 < weights.size()) ? z.array().tanh().matrix() : z;
  }
  return a;
}

Mlp make_mlp(int n_in, const std::vector<int>& hidden, int n_out, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> sizes;
  sizes.push_back(n_in);
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(n_out);

  Mlp net;
  for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
    const int rows = sizes[l + 1];
    const int cols = sizes[l];
    const double bound = std::sqrt(6.0 / (rows + cols));
    MatrixXd w(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w(i, j) = rng.uniform(-bound, bound);
    net.weights.push_back(std::move(w));
    net.biases.push_back(VectorXd::Zero(rows));
  }
  return net;
}

TrainReport train_mlp(Mlp& net, const MatrixXd& inputs, const MatrixXd& targets,
                      const TrainOptions& opts) {
  const int n = static_cast<int>(inputs.cols());
  if (n < 4) throw ModelError("training-failure", "too few samples");

  // Deterministic shuffled split.
  Rng rng(opts.seed ^ 0x5b1ce5ULL);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(i + 1));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  const int n_val = std::max(1, static_cast<int>(std::lround(n * opts.validation_fraction)));
  const int n_trn = n - n_val;

  MatrixXd x_trn(inputs.rows(), n_trn), y_trn(targets.rows(), n_trn);
  MatrixXd x_val(inputs.rows(), n_val), y_val(targets.rows(), n_val);
  for (int i = 0; i < n_trn; ++i) {
    x_trn.col(i) = inputs.col(order[static_cast<std::size_t>(i)]);
    y_trn.col(i) = targets.col(order[static_cast<std::size_t>(i)]);
  }
  for (int i = 0; i < n_val; ++i) {
    x_val.col(i) = inputs.col(order[static_cast<std::size_t>(n_trn + i)]);
    y_val.col(i) = targets.col(order[static_cast<std::size_t>(n_trn + i)]);
  }

  const std::size_t n_layers = net.weights.size();
  std::vector<MatrixXd> m_w(n_layers), v_w(n_layers);
  std::vector<VectorXd> m_b(n_layers), v_b(n_layers);
  for (std::size_t l = 0; l < n_layers; ++l) {
    m_w[l] = MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols());
    v_w[l] = m_w[l];
    m_b[l] = VectorXd::Zero(net.biases[l].size());
    v_b[l] = m_b[l];
  }

  const double beta1 = 0.9, beta2 = 0.999, eps = 1e-8;
  double best_val = std::numeric_limits<double>::infinity();
  std::vector<MatrixXd> best_w = net.weights;
  std::vector<VectorXd> best_b = net.biases;
  int since_best = 0;

  TrainReport report;
  for (int epoch = 1; epoch <= opts.max_epochs; ++epoch) {
    // Forward with stored activations.
    std::vector<MatrixXd> acts;
    acts.reserve(n_layers + 1);
    acts.push_back(x_trn);
    for (std::size_t l = 0; l < n_layers; ++l) {
      MatrixXd z = (net.weights[l] * acts.back()).colwise() + net.biases[l];
      acts.push_back(l + 1 < n_layers ? z.array().tanh().matrix() : z);
    }

    // Backward.
    MatrixXd delta = 2.0 * (acts.back() - y_trn) / n_trn;
    const double lr = opts.learning_rate *
                      (0.5 * (1.0 + std::cos(kPi * epoch / opts.max_epochs)) + 0.02);
    for (std::size_t li = n_layers; li-- > 0;) {
      const MatrixXd grad_w = delta * acts[li].transpose();
      const VectorXd grad_b = delta.rowwise().sum();
      if (li > 0) {
        MatrixXd back = net.weights[li].transpose() * delta;
        delta = back.array() * (1.0 - acts[li].array().square());
      }
      const double bc1 = 1.0 - std::pow(beta1, epoch);
      const double bc2 = 1.0 - std::pow(beta2, epoch);
      m_w[li] = beta1 * m_w[li] + (1.0 - beta1) * grad_w;
      v_w[li] = beta2 * v_w[li].array() + (1.0 - beta2) * grad_w.array().square();
      net.weights[li].array() -=
          lr * (m_w[li].array() / bc1) / ((v_w[li].array() / bc2).sqrt() + eps);
      m_b[li] = beta1 * m_b[li] + (1.0 - beta1) * grad_b;
      v_b[li] = beta2 * v_b[li].array() + (1.0 - beta2) * grad_b.array().square();
      net.biases[li].array() -=
          lr * (m_b[li].array() / bc1) / ((v_b[li].array() / bc2).sqrt() + eps);
    }

    report.epochs_run = epoch;
    if (epoch % 20 == 0 || epoch == opts.max_epochs) {
      const double val_mse = (net.forward_batch(x_val) - y_val).array().square().mean();
      if (val_mse < best_val) {
        best_val = val_mse;
        best_w = net.weights;
        best_b = net.biases;
        since_best = 0;
      } else {
        since_best += 20;
        if (since_best >= opts.patience) break;
      }
    }
  }

  net.weights = best_w;
  net.biases = best_b;
  report.best_validation_mse = best_val;
  return report;
}

}  // namespace fowt::mooring
