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

#include "model/layers.h"

#include <cmath>
#include <stdexcept>

namespace promptstyle {

torch::Tensor SinusoidalPositions(int64_t max_len, int64_t dim,
                                  const torch::TensorOptions& options) {
  auto pos = torch::arange(max_len, options).unsqueeze(1);
  auto div = torch::exp(torch::arange(0, dim, 2, options) *
                        (-std::log(10000.0) / dim));
  auto table = torch::zeros({max_len, dim}, options);
  table.index_put_({torch::indexing::Slice(),
                    torch::indexing::Slice(0, torch::indexing::None, 2)},
                   torch::sin(pos * div));
  table.index_put_({torch::indexing::Slice(),
                    torch::indexing::Slice(1, torch::indexing::None, 2)},
                   torch::cos(pos * div));
  return table.unsqueeze(0);
}

TransformerBlockImpl::TransformerBlockImpl(int dim, int heads, int ffn_mult)
    : heads_(heads) {
  qkv_ = register_module("qkv", torch::nn::Linear(dim, 3 * dim));
  out_ = register_module("out", torch::nn::Linear(dim, dim));
  ffn1_ = register_module("ffn1", torch::nn::Linear(dim, ffn_mult * dim));
  ffn2_ = register_module("ffn2", torch::nn::Linear(ffn_mult * dim, dim));
  norm1_ = register_module("norm1",
                           torch::nn::LayerNorm(torch::nn::LayerNormOptions({dim})));
  norm2_ = register_module("norm2",
                           torch::nn::LayerNorm(torch::nn::LayerNormOptions({dim})));
}

torch::Tensor TransformerBlockImpl::forward(const torch::Tensor& x,
                                            const torch::Tensor& mask) {
  int64_t b = x.size(0), t = x.size(1), c = x.size(2);
  int64_t hd = c / heads_;
  auto qkv = qkv_(x).reshape({b, t, 3, heads_, hd}).permute({2, 0, 3, 1, 4});
  auto q = qkv[0], k = qkv[1], v = qkv[2];  // (B, H, T, hd)

  auto scores = torch::matmul(q, k.transpose(-2, -1)) / std::sqrt(double(hd));
  if (mask.defined()) {
    auto key_mask = mask.reshape({b, 1, 1, t});
    scores = scores + (1.0 - key_mask) * -1e9;
  }
  auto attn = torch::softmax(scores, -1);
  auto ctx = torch::matmul(attn, v)
                 .transpose(1, 2)
                 .reshape({b, t, c});
  auto h = norm1_(x + out_(ctx));
  h = norm2_(h + ffn2_(torch::relu(ffn1_(h))));
  if (mask.defined()) h = h * mask.unsqueeze(-1);
  return h;
}

SiteConditionerImpl::SiteConditionerImpl(std::string site, int channels,
                                         bool use_style, bool use_speaker,
                                         int style_dim, int speaker_dim)
    : site_(std::move(site)), use_style_(use_style), use_speaker_(use_speaker) {
  if (use_style_) {
    style_proj_ = register_module("style_proj",
                                  torch::nn::Linear(style_dim, channels));
  }
  if (use_speaker_) {
    speaker_proj_ = register_module("speaker_proj",
                                    torch::nn::Linear(speaker_dim, channels));
  }
}

torch::Tensor SiteConditionerImpl::forward(
    const std::optional<torch::Tensor>& style,
    const std::optional<torch::Tensor>& speaker) {
  if (style.has_value() != use_style_) {
    throw std::logic_error("wiring error at " + site_ + ": style vector " +
                           (use_style_ ? "missing" : "supplied but disabled"));
  }
  if (speaker.has_value() != use_speaker_) {
    throw std::logic_error("wiring error at " + site_ + ": speaker vector " +
                           (use_speaker_ ? "missing" : "supplied but disabled"));
  }
  torch::Tensor bias;
  if (use_style_) bias = style_proj_(*style);
  if (use_speaker_) {
    auto s = speaker_proj_(*speaker);
    bias = bias.defined() ? bias + s : s;
  }
  return bias.defined() ? bias.unsqueeze(-1) : bias;
}

}  // namespace promptstyle
