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

#ifndef MODEL_CHECKPOINT_H_
#define MODEL_CHECKPOINT_H_

#include <cstdint>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "model/conditioning.h"

namespace promptstyle {

struct CheckpointMeta {
  int64_t step = 0;
  int stage = 1;
  std::string preset = "PROMPTSTYLE";
  ConditioningConfig cond;
};

// Saves/loads a module's parameters and buffers under dotted names alongside
// the metadata block. Load validates the stored ConditioningConfig against
// the module caller's expectations and fails loudly on mismatch or missing
// tensors.
void SaveCheckpoint(const std::string& path, torch::nn::Module& model,
                    const CheckpointMeta& meta);

CheckpointMeta LoadCheckpoint(const std::string& path, torch::nn::Module& model,
                              const ConditioningConfig& expected_cond);

// Metadata only (no model needed), e.g. for resume decisions.
CheckpointMeta PeekCheckpoint(const std::string& path);

// FNV-1a over the raw float bytes of every tensor, in order. Used by the
// freezing tests to prove parameter groups did not move.
uint64_t ParameterChecksum(const std::vector<torch::Tensor>& params);

}  // namespace promptstyle

#endif  // MODEL_CHECKPOINT_H_
