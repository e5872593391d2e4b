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

#ifndef MODEL_STYLE_ENCODER_H_
#define MODEL_STYLE_ENCODER_H_

#include <torch/torch.h>

namespace promptstyle {

// Identity forward; backward multiplies the upstream gradient by -lambda.
torch::Tensor GradientReversal(const torch::Tensor& x, double lambda);

// Reference encoder over mel input (conv2d stack with stride-2 downsampling,
// GRU summarization, 256-dim projection). Token bank deliberately absent.
class ReferenceEncoderImpl : public torch::nn::Module {
 public:
  explicit ReferenceEncoderImpl(int n_mels = 80, int style_dim = 256);

  // mel (B, 80, T), T >= 1 -> (B, style_dim)
  torch::Tensor forward(const torch::Tensor& mel);

 private:
  std::vector<torch::nn::Conv2d> convs_;
  std::vector<torch::nn::BatchNorm2d> norms_;
  torch::nn::GRU gru_{nullptr};
  torch::nn::Linear proj_{nullptr};
};
TORCH_MODULE(ReferenceEncoder);

// GRL -> feed-forward layers -> per-speaker logits.
class SpeakerClassifierImpl : public torch::nn::Module {
 public:
  SpeakerClassifierImpl(int style_dim, int n_speakers, int hidden = 256);
  torch::Tensor forward(const torch::Tensor& style_embedding);
  int num_speakers() const { return n_speakers_; }

 private:
  int n_speakers_;
  torch::nn::Linear fc1_{nullptr}, fc2_{nullptr}, out_{nullptr};
};
TORCH_MODULE(SpeakerClassifier);

// Cross-entropy of the classifier on reversed-gradient embeddings; the
// classifier trains normally, the reference encoder is pushed toward
// speaker-invariance.
torch::Tensor AdversarialLoss(SpeakerClassifier& classifier,
                              const torch::Tensor& style_embedding,
                              const torch::Tensor& speaker_ids, double lambda);

}  // namespace promptstyle

#endif  // MODEL_STYLE_ENCODER_H_
