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

#include "model/style_encoder.h"

#include <stdexcept>

namespace promptstyle {

namespace {

class GradReverseFunction
    : public torch::autograd::Function<GradReverseFunction> {
 public:
  static torch::Tensor forward(torch::autograd::AutogradContext* ctx,
                               const torch::Tensor& x, double lambda) {
    ctx->saved_data["lambda"] = lambda;
    return x.clone();
  }

  static torch::autograd::tensor_list backward(
      torch::autograd::AutogradContext* ctx,
      torch::autograd::tensor_list grad_outputs) {
    double lambda = ctx->saved_data["lambda"].toDouble();
    return {grad_outputs[0] * (-lambda), torch::Tensor()};
  }
};

}  // namespace

torch::Tensor GradientReversal(const torch::Tensor& x, double lambda) {
  if (lambda < 0.0) throw std::invalid_argument("negative GRL lambda");
  return GradReverseFunction::apply(x, lambda);
}

ReferenceEncoderImpl::ReferenceEncoderImpl(int n_mels, int style_dim) {
  const int channels[] = {32, 32, 64, 64, 128, 128};
  int in_ch = 1;
  for (int i = 0; i < 6; ++i) {
    convs_.push_back(torch::nn::Conv2d(
        torch::nn::Conv2dOptions(in_ch, channels[i], 3).stride(2).padding(1)));
    register_module("conv" + std::to_string(i), convs_.back());
    norms_.push_back(torch::nn::BatchNorm2d(channels[i]));
    register_module("norm" + std::to_string(i), norms_.back());
    in_ch = channels[i];
  }
  int freq_out = n_mels;
  for (int i = 0; i < 6; ++i) freq_out = (freq_out + 1) / 2;
  gru_ = register_module(
      "gru", torch::nn::GRU(torch::nn::GRUOptions(128 * freq_out, 128).batch_first(true)));
  proj_ = register_module("proj", torch::nn::Linear(128, style_dim));
}

torch::Tensor ReferenceEncoderImpl::forward(const torch::Tensor& mel) {
  if (mel.dim() != 3 || mel.size(2) < 1) {
    throw std::invalid_argument("reference encoder expects (B, mels, T>=1)");
  }
  auto x = mel.transpose(1, 2).unsqueeze(1);  // (B, 1, T, mels)
  for (size_t i = 0; i < convs_.size(); ++i) {
    x = torch::relu(norms_[i](convs_[i](x)));
  }
  // (B, 128, T', F') -> (B, T', 128*F')
  x = x.permute({0, 2, 1, 3}).flatten(2);
  auto [seq, state] = gru_->forward(x);
  (void)seq;
  return proj_(state.squeeze(0));
}

SpeakerClassifierImpl::SpeakerClassifierImpl(int style_dim, int n_speakers,
                                             int hidden)
    : n_speakers_(n_speakers) {
  fc1_ = register_module("fc1", torch::nn::Linear(style_dim, hidden));
  fc2_ = register_module("fc2", torch::nn::Linear(hidden, hidden));
  out_ = register_module("out", torch::nn::Linear(hidden, n_speakers));
}

torch::Tensor SpeakerClassifierImpl::forward(const torch::Tensor& e) {
  return out_(torch::relu(fc2_(torch::relu(fc1_(e)))));
}

torch::Tensor AdversarialLoss(SpeakerClassifier& classifier,
                              const torch::Tensor& style_embedding,
                              const torch::Tensor& speaker_ids, double lambda) {
  int64_t n = classifier->num_speakers();
  if ((speaker_ids < 0).any().item<bool>() ||
      (speaker_ids >= n).any().item<bool>()) {
    throw std::invalid_argument("speaker label out of range");
  }
  auto logits = classifier->forward(GradientReversal(style_embedding, lambda));
  return torch::nn::functional::cross_entropy(logits, speaker_ids);
}

}  // namespace promptstyle
