// Copyright 2026 The Newsrank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

namespace newsrank {

// Read-only views of the six GRU weight matrices. Input weights are
// hidden x input, recurrent weights hidden x hidden. There are no biases.
struct GruWeights {
  Eigen::Ref<const Eigen::MatrixXd> w_z, u_z, w_r, u_r, w, u;
};

// Writable views used to accumulate gradients.
struct GruGradients {
  Eigen::Ref<Eigen::MatrixXd> w_z, u_z, w_r, u_r, w, u;
};

// Owning parameter set, mostly for standalone use and tests.
struct GruCell {
  Eigen::MatrixXd w_z, u_z, w_r, u_r, w, u;

  GruCell(Eigen::Index input, Eigen::Index hidden);
  GruWeights weights() const { return {w_z, u_z, w_r, u_r, w, u}; }
};

// Intermediate values of one step, kept for backpropagation.
struct GruStepCache {
  Eigen::VectorXd x, h_prev, z, r, candidate, h;
};

inline double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

//   z = sigmoid(W_z x + U_z h_prev)
//   r = sigmoid(W_r x + U_r h_prev)
//   c = tanh(W x + U (r .* h_prev))
//   h = (1 - z) .* h_prev + z .* c
// Throws InputError on dimension mismatch.
Eigen::VectorXd gru_step(const GruWeights& weights, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& h_prev,
                         GruStepCache* cache = nullptr);

// Backpropagates dL/dh through one step: accumulates weight gradients, adds
// dL/dx to `dx` and returns dL/dh_prev.
Eigen::VectorXd gru_step_backward(const GruWeights& weights,
                                  const GruStepCache& cache,
                                  const Eigen::VectorXd& dh,
                                  GruGradients& grads, Eigen::VectorXd& dx);

}  // namespace newsrank
