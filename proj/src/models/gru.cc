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

#include "newsrank/models/gru.h"

#include "newsrank/error.h"

namespace newsrank {

GruCell::GruCell(Eigen::Index input, Eigen::Index hidden)
    : w_z(Eigen::MatrixXd::Zero(hidden, input)),
      u_z(Eigen::MatrixXd::Zero(hidden, hidden)),
      w_r(Eigen::MatrixXd::Zero(hidden, input)),
      u_r(Eigen::MatrixXd::Zero(hidden, hidden)),
      w(Eigen::MatrixXd::Zero(hidden, input)),
      u(Eigen::MatrixXd::Zero(hidden, hidden)) {}

Eigen::VectorXd gru_step(const GruWeights& p, const Eigen::VectorXd& x,
                         const Eigen::VectorXd& h_prev, GruStepCache* cache) {
  const Eigen::Index hidden = p.u.rows();
  if (x.size() != p.w.cols() || h_prev.size() != hidden ||
      p.w_z.cols() != x.size() || p.w_r.cols() != x.size() ||
      p.u_z.rows() != hidden || p.u_r.rows() != hidden ||
      p.u.cols() != hidden) {
    throw InputError("GRU dimension mismatch");
  }
  const auto sig = [](double v) { return sigmoid(v); };
  Eigen::VectorXd z = (p.w_z * x + p.u_z * h_prev).unaryExpr(sig);
  Eigen::VectorXd r = (p.w_r * x + p.u_r * h_prev).unaryExpr(sig);
  Eigen::VectorXd c =
      (p.w * x + p.u * r.cwiseProduct(h_prev)).array().tanh().matrix();
  Eigen::VectorXd h =
      (1.0 - z.array()) * h_prev.array() + z.array() * c.array();
  if (cache != nullptr) {
    cache->x = x;
    cache->h_prev = h_prev;
    cache->z = std::move(z);
    cache->r = std::move(r);
    cache->candidate = std::move(c);
    cache->h = h;
  }
  return h;
}

Eigen::VectorXd gru_step_backward(const GruWeights& p,
                                  const GruStepCache& s,
                                  const Eigen::VectorXd& dh,
                                  GruGradients& g, Eigen::VectorXd& dx) {
  const Eigen::ArrayXd z = s.z.array(), r = s.r.array(), c = s.candidate.array();
  const Eigen::ArrayXd hp = s.h_prev.array();

  Eigen::VectorXd dh_prev = (dh.array() * (1.0 - z)).matrix();

  const Eigen::VectorXd da_c = (dh.array() * z * (1.0 - c * c)).matrix();
  const Eigen::VectorXd gated = (r * hp).matrix();
  g.w.noalias() += da_c * s.x.transpose();
  g.u.noalias() += da_c * gated.transpose();
  dx.noalias() += p.w.transpose() * da_c;
  const Eigen::ArrayXd d_gated = (p.u.transpose() * da_c).array();
  dh_prev.array() += d_gated * r;

  const Eigen::VectorXd da_r = (d_gated * hp * r * (1.0 - r)).matrix();
  g.w_r.noalias() += da_r * s.x.transpose();
  g.u_r.noalias() += da_r * s.h_prev.transpose();
  dx.noalias() += p.w_r.transpose() * da_r;
  dh_prev.noalias() += p.u_r.transpose() * da_r;

  const Eigen::VectorXd da_z =
      (dh.array() * (c - hp) * z * (1.0 - z)).matrix();
  g.w_z.noalias() += da_z * s.x.transpose();
  g.u_z.noalias() += da_z * s.h_prev.transpose();
  dx.noalias() += p.w_z.transpose() * da_z;
  dh_prev.noalias() += p.u_z.transpose() * da_z;

  return dh_prev;
}

}  // namespace newsrank
