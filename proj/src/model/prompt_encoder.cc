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

#include "model/prompt_encoder.h"

#include <cctype>
#include <filesystem>
#include <stdexcept>

namespace promptstyle {

std::vector<int64_t> TokenizePrompt(const std::string& text, int vocab) {
  std::vector<int64_t> ids;
  std::string word;
  auto flush = [&] {
    if (word.empty()) return;
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (char c : word) {
      h ^= static_cast<uint8_t>(c);
      h *= 1099511628211ull;
    }
    ids.push_back(static_cast<int64_t>(h % (vocab - 1)) + 1);
    word.clear();
  };
  for (char c : text) {
    if (std::isalnum(static_cast<unsigned char>(c))) {
      word.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      flush();
    }
  }
  flush();
  return ids;
}

ContextualTextEncoderImpl::ContextualTextEncoderImpl(int vocab, int dim,
                                                     int n_blocks, int heads)
    : vocab_(vocab), dim_(dim) {
  embedding_ = register_module("embedding", torch::nn::Embedding(vocab, dim));
  for (int i = 0; i < n_blocks; ++i) {
    blocks_.push_back(TransformerBlock(dim, heads));
    register_module("block" + std::to_string(i), blocks_.back());
  }
}

torch::Tensor ContextualTextEncoderImpl::encode(const std::string& text) {
  return encode_batch({text}).squeeze(0);
}

torch::Tensor ContextualTextEncoderImpl::encode_batch(
    const std::vector<std::string>& texts) {
  int64_t batch = static_cast<int64_t>(texts.size());
  std::vector<std::vector<int64_t>> tokens;
  int64_t max_len = 0;
  for (const auto& t : texts) {
    tokens.push_back(TokenizePrompt(t, vocab_));
    if (tokens.back().empty()) throw std::invalid_argument("empty prompt text");
    max_len = std::max<int64_t>(max_len, tokens.back().size());
  }
  auto ids = torch::zeros({batch, max_len}, torch::kInt64);
  auto mask = torch::zeros({batch, max_len});
  for (int64_t b = 0; b < batch; ++b) {
    int64_t n = static_cast<int64_t>(tokens[b].size());
    ids.index_put_({b, torch::indexing::Slice(0, n)},
                   torch::tensor(tokens[b], torch::kInt64));
    mask.index_put_({b, torch::indexing::Slice(0, n)}, 1.0);
  }
  auto h = embedding_(ids) + SinusoidalPositions(max_len, dim_, mask.options());
  h = h * mask.unsqueeze(-1);
  for (auto& block : blocks_) h = block->forward(h, mask);
  // Mean pooling over valid tokens.
  return (h * mask.unsqueeze(-1)).sum(1) / mask.sum(1, true);
}

std::vector<torch::Tensor> ContextualTextEncoderImpl::final_block_parameters() {
  return blocks_.back()->parameters();
}

std::vector<torch::Tensor> ContextualTextEncoderImpl::frozen_parameters() {
  std::vector<torch::Tensor> out = embedding_->parameters();
  for (size_t i = 0; i + 1 < blocks_.size(); ++i) {
    auto p = blocks_[i]->parameters();
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

AdapterImpl::AdapterImpl(int in_dim, int out_dim) : in_dim_(in_dim) {
  fc1_ = register_module("fc1", torch::nn::Linear(in_dim, 512));
  fc2_ = register_module("fc2", torch::nn::Linear(512, out_dim));
  fc3_ = register_module("fc3", torch::nn::Linear(out_dim, out_dim));
}

torch::Tensor AdapterImpl::forward(const torch::Tensor& semantic) {
  if (semantic.size(-1) != in_dim_) {
    throw std::invalid_argument("adapter expects " + std::to_string(in_dim_) +
                                "-dim input, got " +
                                std::to_string(semantic.size(-1)));
  }
  return fc3_(torch::relu(fc2_(torch::relu(fc1_(semantic)))));
}

PromptEncoderImpl::PromptEncoderImpl(int vocab, int semantic_dim, int style_dim) {
  bert_ = register_module("bert",
                          ContextualTextEncoder(vocab, semantic_dim, 4, 4));
  adapter_ = register_module("adapter", Adapter(semantic_dim, style_dim));
}

torch::Tensor PromptEncoderImpl::encode_semantic(const std::string& text) {
  return bert_->encode(text);
}

torch::Tensor PromptEncoderImpl::forward(const std::vector<std::string>& texts) {
  return adapter_(bert_->encode_batch(texts));
}

void PromptEncoderImpl::load_pretrained(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("pretrained prompt-encoder weights not found: " + path);
  }
  torch::serialize::InputArchive archive;
  archive.load_from(path);
  for (auto& p : bert_->named_parameters()) {
    torch::Tensor t;
    archive.read(p.key(), t);
    torch::NoGradGuard ng;
    p.value().copy_(t);
  }
}

std::vector<ParameterGroup> TrainableGroups(PromptEncoder& encoder, int stage) {
  if (stage == 1) return {};
  if (stage != 2) throw std::invalid_argument("unknown training stage");
  return {
      {"adapter", encoder->adapter()->parameters()},
      {"bert_final_block", encoder->bert()->final_block_parameters()},
  };
}

}  // namespace promptstyle
