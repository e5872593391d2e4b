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

#ifndef MODEL_MAS_H_
#define MODEL_MAS_H_

#include <vector>

#include <torch/torch.h>

namespace promptstyle {

// Likelihood-optimal monotonic complete alignment of T frames onto L phonemes
// by dynamic programming over a (L, T) log-likelihood matrix. Durations sum to
// T, each >= 1. Throws if T < L.
std::vector<int64_t> MonotonicAlign(const torch::Tensor& log_lik);

// Per-frame diagonal-Gaussian log-likelihood of z_p under each phoneme prior:
// (L, T) matrix from (D, L) stats and (D, T) frames.
torch::Tensor AlignmentLogLik(const torch::Tensor& prior_mean,
                              const torch::Tensor& prior_log_std,
                              const torch::Tensor& z_p);

// Batched MAS over padded tensors; returns (B, Lmax) int64 durations, zero in
// the padding region.
torch::Tensor MasDurations(const torch::Tensor& prior_mean,
                           const torch::Tensor& prior_log_std,
                           const torch::Tensor& z_p,
                           const torch::Tensor& phoneme_lengths,
                           const torch::Tensor& spec_lengths);

}  // namespace promptstyle

#endif  // MODEL_MAS_H_
