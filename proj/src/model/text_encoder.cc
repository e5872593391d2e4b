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

#include "model/text_encoder.h"

#include <cmath>
#include <stdexcept>

namespace promptstyle {

TextEncoderImpl::TextEncoderImpl(int vocab, int hidden, int latent,
                                 int n_layers, int heads)
    : vocab_(vocab), hidden_(hidden) {
  embedding_ = register_module("embedding", torch::nn::Embedding(vocab, hidden));
  for (int i = 0; i < n_layers; ++i) {
    blocks_.push_back(TransformerBlock(hidden, heads));
    register_module("block" + std::to_string(i), blocks_.back());
  }
  proj_ = register_module("proj", torch::nn::Conv1d(hidden, 2 * latent, 1));
}

PriorStats TextEncoderImpl::forward(const torch::Tensor& phonemes,
                                    const torch::Tensor& lengths) {
  if (phonemes.numel() == 0) throw std::invalid_argument("empty phoneme batch");
  auto min_id = phonemes.min().item<int64_t>();
  auto max_id = phonemes.max().item<int64_t>();
  if (min_id < 0 || max_id >= vocab_) {
    throw std::invalid_argument("unknown phoneme id " + std::to_string(max_id) +
                                " (inventory size " + std::to_string(vocab_) + ")");
  }
  int64_t max_len = phonemes.size(1);
  auto mask = (torch::arange(max_len, lengths.options()).unsqueeze(0) <
               lengths.unsqueeze(1))
                  .to(torch::kFloat);  // (B, L)

  auto h = embedding_(phonemes) * std::sqrt(static_cast<double>(hidden_));
  h = h + SinusoidalPositions(max_len, hidden_, h.options());
  h = h * mask.unsqueeze(-1);
  for (auto& block : blocks_) h = block->forward(h, mask);

  auto hidden = h.transpose(1, 2).contiguous();  // (B, C, L)
  auto stats = proj_(hidden) * mask.unsqueeze(1);
  int64_t latent = stats.size(1) / 2;
  return {hidden * mask.unsqueeze(1), stats.slice(1, 0, latent),
          stats.slice(1, latent)};
}

}  // namespace promptstyle
