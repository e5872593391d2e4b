// Copyright (c) 2026 promptstyle-cpp authors
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

#include "model/duration_predictor.h"

#include <cmath>
#include <stdexcept>

namespace promptstyle {

StochasticDurationPredictorImpl::StochasticDurationPredictorImpl(
    int hidden, bool cond_style, bool cond_speaker, int n_flows, int style_dim,
    int speaker_dim)
    : n_flows_(n_flows) {
  in_proj_ = register_module("in_proj", torch::nn::Conv1d(hidden, hidden, 1));
  cond_ = register_module("cond", SiteConditioner("sdp", hidden, cond_style,
                                                  cond_speaker, style_dim,
                                                  speaker_dim));
  for (int k = 0; k < n_flows_; ++k) {
    torch::nn::Sequential net(
        torch::nn::Conv1d(torch::nn::Conv1dOptions(hidden, hidden, 3).padding(1)),
        torch::nn::ReLU(),
        torch::nn::Conv1d(hidden, 2, 1));
    param_nets_.push_back(net);
    register_module("params" + std::to_string(k), net);
    warp_raw_.push_back(
        register_parameter("warp" + std::to_string(k), torch::full({1}, -2.0f)));
  }
}

std::vector<torch::Tensor> StochasticDurationPredictorImpl::LayerParams(
    const torch::Tensor& hidden, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  auto detach = [](const std::optional<torch::Tensor>& t) {
    return t ? std::optional<torch::Tensor>(t->detach()) : std::nullopt;
  };
  auto h = in_proj_(hidden.detach());
  auto bias = cond_(detach(style), detach(speaker));
  if (bias.defined()) h = h + bias;
  h = torch::relu(h) * mask;

  std::vector<torch::Tensor> params;
  for (auto& net : param_nets_) {
    auto p = net->forward(h);  // (B, 2, L)
    auto mu = p.slice(1, 0, 1);
    auto log_s = torch::clamp(p.slice(1, 1, 2), -4.0, 4.0);
    params.push_back(torch::cat({mu, log_s}, 1) * mask);
  }
  return params;
}

torch::Tensor StochasticDurationPredictorImpl::loss(
    const torch::Tensor& hidden, const torch::Tensor& mask,
    const torch::Tensor& durations, const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  auto m = mask.squeeze(1);  // (B, L)
  auto valid = m > 0.5;
  if ((durations.masked_select(valid) < 1).any().item<bool>()) {
    throw std::invalid_argument("non-positive duration inside mask");
  }
  auto params = LayerParams(hidden, mask, style, speaker);

  auto u = torch::rand_like(durations.to(torch::kFloat));
  auto x = torch::log(durations.to(torch::kFloat) + u);  // (B, L), > 0 in mask
  x = x * m;

  auto nll = torch::zeros_like(x);
  for (int k = 0; k < n_flows_; ++k) {
    auto mu = params[k].select(1, 0);
    auto log_s = params[k].select(1, 1);
    x = (x - mu) * torch::exp(-log_s);
    nll = nll + log_s;
    auto a = torch::softplus(warp_raw_[k]);
    auto th = torch::tanh(x);
    nll = nll - torch::log1p(a * (1.0 - th * th));
    x = x + a * th;
  }
  nll = nll + 0.5 * x * x + 0.5 * std::log(2.0 * M_PI);
  return (nll * m).sum() / m.sum();
}

torch::Tensor StochasticDurationPredictorImpl::sample(
    const torch::Tensor& hidden, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker, double noise_scale) {
  torch::NoGradGuard no_grad;
  auto params = LayerParams(hidden, mask, style, speaker);
  auto m = mask.squeeze(1);

  auto x = torch::randn_like(m) * noise_scale;
  for (int k = n_flows_ - 1; k >= 0; --k) {
    auto a = torch::softplus(warp_raw_[k]);
    // Invert y = t + a*tanh(t) by Newton; monotone since a > 0.
    auto t = x.clone();
    for (int it = 0; it < 20; ++it) {
      auto th = torch::tanh(t);
      auto f = t + a * th - x;
      auto fp = 1.0 + a * (1.0 - th * th);
      t = t - f / fp;
    }
    auto mu = params[k].select(1, 0);
    auto log_s = params[k].select(1, 1);
    x = t * torch::exp(log_s) + mu;
  }
  auto durations = torch::ceil(torch::exp(x)).clamp(1, 200).to(torch::kInt64);
  return durations * (m > 0.5).to(torch::kInt64);
}

}  // namespace promptstyle
