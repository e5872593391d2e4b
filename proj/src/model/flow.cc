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

#include "model/flow.h"

#include <stdexcept>

namespace promptstyle {

AdditiveCouplingImpl::AdditiveCouplingImpl(int channels, int hidden,
                                           bool cond_style, bool cond_speaker,
                                           int style_dim, int speaker_dim)
    : half_(channels / 2) {
  if (channels % 2 != 0) throw std::invalid_argument("flow channels must be even");
  pre_ = register_module(
      "pre", torch::nn::Conv1d(torch::nn::Conv1dOptions(half_, hidden, 5).padding(2)));
  mid_ = register_module(
      "mid", torch::nn::Conv1d(torch::nn::Conv1dOptions(hidden, hidden, 5).padding(2)));
  post_ = register_module("post", torch::nn::Conv1d(hidden, half_, 1));
  // Identity map at init.
  torch::NoGradGuard ng;
  post_->weight.zero_();
  post_->bias.zero_();
  cond_ = register_module(
      "cond", SiteConditioner("flow", hidden, cond_style, cond_speaker,
                              style_dim, speaker_dim));
}

torch::Tensor AdditiveCouplingImpl::Shift(
    const torch::Tensor& x0, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  auto h = pre_(x0);
  auto bias = cond_(style, speaker);
  if (bias.defined()) h = h + bias;
  if (mask.defined()) h = h * mask;
  h = torch::relu(h);
  h = torch::relu(mid_(h));
  if (mask.defined()) h = h * mask;
  auto t = post_(h);
  return mask.defined() ? t * mask : t;
}

torch::Tensor AdditiveCouplingImpl::forward(
    const torch::Tensor& x, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker, bool reverse) {
  if (!torch::isfinite(x).all().item<bool>()) {
    throw std::invalid_argument("non-finite flow input");
  }
  auto x0 = x.slice(1, 0, half_);
  auto x1 = x.slice(1, half_);
  auto t = Shift(x0, mask, style, speaker);
  auto y1 = reverse ? x1 - t : x1 + t;
  return torch::cat({x0, y1}, 1);
}

ConditionedFlowImpl::ConditionedFlowImpl(int channels, int hidden, int n_blocks,
                                         bool cond_speaker, int style_dim,
                                         int speaker_dim) {
  // Two couplings per block so both channel halves get transformed.
  for (int i = 0; i < 2 * n_blocks; ++i) {
    layers_.push_back(AdditiveCoupling(channels, hidden, /*cond_style=*/true,
                                       cond_speaker, style_dim, speaker_dim));
    register_module("coupling" + std::to_string(i), layers_.back());
  }
}

torch::Tensor ConditionedFlowImpl::Run(
    const torch::Tensor& x, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker, bool reverse) {
  auto h = x;
  if (!reverse) {
    for (auto& layer : layers_) {
      h = layer->forward(h, mask, style, speaker, false);
      h = torch::flip(h, {1});
    }
  } else {
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
      h = torch::flip(h, {1});
      h = (*it)->forward(h, mask, style, speaker, true);
    }
  }
  return h;
}

torch::Tensor ConditionedFlowImpl::forward(
    const torch::Tensor& z, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  return Run(z, mask, style, speaker, false);
}

torch::Tensor ConditionedFlowImpl::inverse(
    const torch::Tensor& z_p, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  return Run(z_p, mask, style, speaker, true);
}

}  // namespace promptstyle
