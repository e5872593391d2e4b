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

#include "model/mas.h"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace promptstyle {

std::vector<int64_t> MonotonicAlign(const torch::Tensor& log_lik) {
  auto ll = log_lik.to(torch::kDouble).contiguous();
  int64_t L = ll.size(0), T = ll.size(1);
  if (T < L) {
    throw std::invalid_argument("infeasible alignment: " + std::to_string(T) +
                                " frames < " + std::to_string(L) + " phonemes");
  }
  auto acc = ll.accessor<double, 2>();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();

  // best[i][t]: best score of a path ending with frame t assigned to phoneme i.
  std::vector<std::vector<double>> best(L, std::vector<double>(T, kNegInf));
  std::vector<std::vector<uint8_t>> moved(L, std::vector<uint8_t>(T, 0));
  best[0][0] = acc[0][0];
  for (int64_t t = 1; t < T; ++t) {
    for (int64_t i = std::max<int64_t>(0, L - (T - t)); i <= std::min<int64_t>(t, L - 1); ++i) {
      double stay = best[i][t - 1];
      double advance = i > 0 ? best[i - 1][t - 1] : kNegInf;
      if (advance > stay) {
        best[i][t] = advance + acc[i][t];
        moved[i][t] = 1;
      } else {
        best[i][t] = stay + acc[i][t];
      }
    }
  }

  std::vector<int64_t> durations(L, 0);
  int64_t i = L - 1;
  for (int64_t t = T - 1; t >= 0; --t) {
    ++durations[i];
    if (t > 0 && moved[i][t]) --i;
  }
  return durations;
}

torch::Tensor AlignmentLogLik(const torch::Tensor& prior_mean,
                              const torch::Tensor& prior_log_std,
                              const torch::Tensor& z_p) {
  // sum_d [ -0.5 log(2 pi) - logs - 0.5 (z - m)^2 / exp(2 logs) ]
  int64_t D = z_p.size(0);
  auto inv_var = torch::exp(-2.0 * prior_log_std);            // (D, L)
  auto m = prior_mean;
  auto const_term =
      (-0.5 * std::log(2.0 * M_PI) * D) - prior_log_std.sum(0);  // (L)
  auto quad = torch::matmul((inv_var * m * m).transpose(0, 1),
                            torch::ones_like(z_p));  // (L, T): sum m^2/var
  auto cross = torch::matmul((inv_var * m).transpose(0, 1), z_p);
  auto sq = torch::matmul(inv_var.transpose(0, 1), z_p * z_p);
  return const_term.unsqueeze(1) - 0.5 * (quad - 2.0 * cross + sq);
}

torch::Tensor MasDurations(const torch::Tensor& prior_mean,
                           const torch::Tensor& prior_log_std,
                           const torch::Tensor& z_p,
                           const torch::Tensor& phoneme_lengths,
                           const torch::Tensor& spec_lengths) {
  torch::NoGradGuard no_grad;
  int64_t batch = prior_mean.size(0);
  int64_t max_len = prior_mean.size(2);
  auto out = torch::zeros({batch, max_len}, torch::kInt64);
  for (int64_t b = 0; b < batch; ++b) {
    int64_t L = phoneme_lengths[b].item<int64_t>();
    int64_t T = spec_lengths[b].item<int64_t>();
    auto ll = AlignmentLogLik(prior_mean[b].slice(1, 0, L),
                              prior_log_std[b].slice(1, 0, L),
                              z_p[b].slice(1, 0, T));
    auto durations = MonotonicAlign(ll);
    out.index_put_({b, torch::indexing::Slice(0, L)},
                   torch::tensor(durations, torch::kInt64));
  }
  return out;
}

}  // namespace promptstyle
