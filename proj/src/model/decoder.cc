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

#include "model/decoder.h"

namespace promptstyle {

DecoderImpl::DecoderImpl(int latent, bool cond_style, bool cond_speaker,
                         std::vector<int> upsample, int base_channels,
                         int style_dim, int speaker_dim) {
  hop_ = 1;
  for (int u : upsample) hop_ *= u;
  pre_ = register_module(
      "pre",
      torch::nn::Conv1d(torch::nn::Conv1dOptions(latent, base_channels, 7).padding(3)));
  cond_ = register_module(
      "cond", SiteConditioner("decoder", base_channels, cond_style, cond_speaker,
                              style_dim, speaker_dim));
  int ch = base_channels;
  for (size_t i = 0; i < upsample.size(); ++i) {
    int u = upsample[i];
    int out_ch = ch / 2;
    ups_.push_back(torch::nn::ConvTranspose1d(
        torch::nn::ConvTranspose1dOptions(ch, out_ch, 2 * u).stride(u).padding(u / 2)));
    register_module("up" + std::to_string(i), ups_.back());
    res1_.push_back(torch::nn::Conv1d(
        torch::nn::Conv1dOptions(out_ch, out_ch, 3).padding(1)));
    register_module("res1_" + std::to_string(i), res1_.back());
    res2_.push_back(torch::nn::Conv1d(
        torch::nn::Conv1dOptions(out_ch, out_ch, 3).padding(3).dilation(3)));
    register_module("res2_" + std::to_string(i), res2_.back());
    ch = out_ch;
  }
  post_ = register_module(
      "post", torch::nn::Conv1d(torch::nn::Conv1dOptions(ch, 1, 7).padding(3)));
}

torch::Tensor DecoderImpl::forward(const torch::Tensor& z,
                                   const std::optional<torch::Tensor>& style,
                                   const std::optional<torch::Tensor>& speaker) {
  auto h = pre_(z);
  auto bias = cond_(style, speaker);
  if (bias.defined()) h = h + bias;
  for (size_t i = 0; i < ups_.size(); ++i) {
    h = ups_[i](torch::leaky_relu(h, 0.1));
    auto r = res1_[i](torch::leaky_relu(h, 0.1));
    h = h + res2_[i](torch::leaky_relu(r, 0.1));
  }
  return torch::tanh(post_(torch::leaky_relu(h, 0.1))).squeeze(1);
}

MultiPeriodDiscriminatorImpl::MultiPeriodDiscriminatorImpl(std::vector<int> periods)
    : periods_(std::move(periods)) {
  for (size_t i = 0; i < periods_.size(); ++i) {
    torch::nn::ModuleList stack(
        torch::nn::Conv2d(torch::nn::Conv2dOptions(1, 16, {5, 1}).stride({3, 1}).padding({2, 0})),
        torch::nn::Conv2d(torch::nn::Conv2dOptions(16, 32, {5, 1}).stride({3, 1}).padding({2, 0})),
        torch::nn::Conv2d(torch::nn::Conv2dOptions(32, 64, {5, 1}).stride({3, 1}).padding({2, 0})),
        torch::nn::Conv2d(torch::nn::Conv2dOptions(64, 1, {3, 1}).padding({1, 0})));
    stacks_.push_back(stack);
    register_module("period" + std::to_string(periods_[i]), stack);
  }
}

DiscriminatorOutput MultiPeriodDiscriminatorImpl::forward(const torch::Tensor& wave) {
  DiscriminatorOutput out;
  for (size_t i = 0; i < periods_.size(); ++i) {
    int p = periods_[i];
    auto x = wave.unsqueeze(1);  // (B, 1, S)
    int64_t s = x.size(2);
    int64_t pad = (p - s % p) % p;
    if (pad > 0) x = torch::constant_pad_nd(x, {0, pad});
    x = x.reshape({x.size(0), 1, x.size(2) / p, p});

    std::vector<torch::Tensor> feats;
    size_t n = stacks_[i]->size();
    for (size_t j = 0; j < n; ++j) {
      x = stacks_[i][j]->as<torch::nn::Conv2d>()->forward(x);
      if (j + 1 < n) {
        x = torch::leaky_relu(x, 0.1);
        feats.push_back(x);
      }
    }
    out.logits.push_back(x.flatten(1));
    out.features.push_back(std::move(feats));
  }
  return out;
}

}  // namespace promptstyle
