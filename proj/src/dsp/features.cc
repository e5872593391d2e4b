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

#include "dsp/features.h"

#include <cmath>
#include <stdexcept>

namespace promptstyle {

torch::Tensor StftMagnitude(const torch::Tensor& samples, const FrameSpec& spec) {
  bool batched = samples.dim() == 2;
  auto x = batched ? samples : samples.unsqueeze(0);  // (B, N)
  int64_t n = x.size(1);
  int hop = spec.hop();
  int win = spec.win();
  if (n < win) {
    throw std::invalid_argument("waveform shorter than one frame (" +
                                std::to_string(n) + " < " + std::to_string(win) +
                                " samples)");
  }
  int64_t frames = (n + hop - 1) / hop;  // ceil(N / hop)

  auto padded =
      torch::reflection_pad1d(x.unsqueeze(1), {win / 2, win / 2}).squeeze(1);
  auto framed = padded.unfold(1, win, hop).slice(1, 0, frames);  // (B, T, win)
  auto window = torch::hann_window(win, x.options());
  auto fft = torch::fft::rfft(framed * window, spec.fft_size, /*dim=*/-1);
  auto mag = torch::abs(fft);  // (B, T, bins)
  return batched ? mag : mag.squeeze(0);
}

torch::Tensor MelFilterbank(const FrameSpec& spec) {
  auto hz_to_mel = [](double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); };
  auto mel_to_hz = [](double mel) {
    return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0);
  };
  int bins = spec.bins();
  int n_mels = spec.num_mels;
  double mel_lo = hz_to_mel(spec.fmin);
  double mel_hi = hz_to_mel(spec.fmax);
  std::vector<double> edges(n_mels + 2);
  for (int i = 0; i < n_mels + 2; ++i) {
    edges[i] = mel_to_hz(mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1));
  }
  auto fb = torch::zeros({bins, n_mels});
  auto acc = fb.accessor<float, 2>();
  double bin_hz = static_cast<double>(spec.sample_rate) / spec.fft_size;
  for (int m = 0; m < n_mels; ++m) {
    double lo = edges[m], mid = edges[m + 1], hi = edges[m + 2];
    for (int b = 0; b < bins; ++b) {
      double f = b * bin_hz;
      double w = 0.0;
      if (f > lo && f < mid) w = (f - lo) / (mid - lo);
      else if (f >= mid && f < hi) w = (hi - f) / (hi - mid);
      acc[b][m] = static_cast<float>(w);
    }
  }
  return fb;
}

torch::Tensor LogMelFromLinear(const torch::Tensor& linear, const FrameSpec& spec) {
  static thread_local torch::Tensor fb;
  static thread_local int fb_fft = 0;
  if (!fb.defined() || fb_fft != spec.fft_size || fb.size(1) != spec.num_mels) {
    fb = MelFilterbank(spec);
    fb_fft = spec.fft_size;
  }
  auto mel = torch::matmul(linear, fb);
  return torch::log(torch::clamp_min(mel, spec.log_floor));
}

LinearSpectrogram Stft(const Waveform& wave, const FrameSpec& spec_in) {
  if (wave.samples.empty()) throw std::invalid_argument("empty waveform");
  FrameSpec spec = spec_in;
  spec.sample_rate = wave.sample_rate;
  auto samples = torch::from_blob(const_cast<float*>(wave.samples.data()),
                                  {static_cast<int64_t>(wave.samples.size())},
                                  torch::kFloat)
                     .clone();
  return {StftMagnitude(samples, spec), spec};
}

MelSpectrogram MelFromLinear(const LinearSpectrogram& linear) {
  return {LogMelFromLinear(linear.values, linear.spec), linear.spec};
}

torch::Tensor SsimTensor(const torch::Tensor& a, const torch::Tensor& b,
                         int window) {
  if (!a.sizes().equals(b.sizes())) {
    throw std::invalid_argument("ssim: shape mismatch");
  }
  auto range_max = torch::max(a.max(), b.max());
  auto range_min = torch::min(a.min(), b.min());
  auto range = (range_max - range_min).detach();
  if (range.item<double>() <= 0.0) {
    // Both inputs are the same constant image.
    return torch::ones({}, a.options());
  }
  auto shift = range_min.detach();
  auto x = (a - shift).reshape({1, 1, a.size(0), a.size(1)});
  auto y = (b - shift).reshape({1, 1, b.size(0), b.size(1)});

  int k = std::min<int64_t>({window, a.size(0), a.size(1)});
  namespace F = torch::nn::functional;
  auto pool = F::AvgPool2dFuncOptions(k).stride(1);
  auto mu_x = F::avg_pool2d(x, pool);
  auto mu_y = F::avg_pool2d(y, pool);
  auto var_x = F::avg_pool2d(x * x, pool) - mu_x * mu_x;
  auto var_y = F::avg_pool2d(y * y, pool) - mu_y * mu_y;
  auto cov = F::avg_pool2d(x * y, pool) - mu_x * mu_y;

  auto c1 = 0.0001 * range * range;  // (0.01 L)^2
  auto c2 = 0.0009 * range * range;  // (0.03 L)^2
  auto score = ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) /
               ((mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2));
  return score.mean();
}

float Ssim(const MelSpectrogram& a, const MelSpectrogram& b, int window) {
  return SsimTensor(a.values, b.values, window).item<float>();
}

}  // namespace promptstyle
