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

#include "model/posterior_encoder.h"

namespace promptstyle {

PosteriorEncoderImpl::PosteriorEncoderImpl(int in_bins, int hidden, int latent,
                                           bool cond_style, bool cond_speaker,
                                           int n_layers, int style_dim,
                                           int speaker_dim) {
  pre_ = register_module(
      "pre", torch::nn::Conv1d(torch::nn::Conv1dOptions(in_bins, hidden, 5).padding(2)));
  int dilation = 1;
  for (int i = 0; i < n_layers; ++i) {
    convs_.push_back(torch::nn::Conv1d(torch::nn::Conv1dOptions(hidden, 2 * hidden, 5)
                                           .padding(2 * dilation)
                                           .dilation(dilation)));
    register_module("conv" + std::to_string(i), convs_.back());
    conds_.push_back(SiteConditioner("posterior", 2 * hidden, cond_style,
                                     cond_speaker, style_dim, speaker_dim));
    register_module("cond" + std::to_string(i), conds_.back());
    dilation *= 3;
  }
  post_ = register_module("post", torch::nn::Conv1d(hidden, 2 * latent, 1));
}

LatentSequence PosteriorEncoderImpl::forward(
    const torch::Tensor& linear, const torch::Tensor& mask,
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker, bool deterministic) {
  auto h = pre_(linear) * mask;
  for (size_t i = 0; i < convs_.size(); ++i) {
    auto act = convs_[i](h);
    auto bias = conds_[i]->forward(style, speaker);
    if (bias.defined()) act = act + bias;
    int64_t c = act.size(1) / 2;
    auto gated = torch::tanh(act.slice(1, 0, c)) *
                 torch::sigmoid(act.slice(1, c));
    h = (h + gated) * mask;
  }
  auto stats = post_(h) * mask;
  int64_t latent = stats.size(1) / 2;
  auto mean = stats.slice(1, 0, latent);
  auto log_std = stats.slice(1, latent);
  torch::Tensor z;
  if (deterministic) {
    z = mean;
  } else {
    z = (mean + torch::randn_like(mean) * torch::exp(log_std)) * mask;
  }
  return {z, mean, log_std};
}

}  // namespace promptstyle
