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

#ifndef DSP_FEATURES_H_
#define DSP_FEATURES_H_

#include <torch/torch.h>

#include "dsp/wav.h"

namespace promptstyle {

// Frame grid: 12.5 ms shift / 50 ms length at 24 kHz -> hop 300, win 1200.
struct FrameSpec {
  int sample_rate = 24000;
  double frame_shift = 0.0125;
  double frame_length = 0.050;
  int fft_size = 2048;
  int num_mels = 80;
  double fmin = 0.0;
  double fmax = 12000.0;
  float log_floor = 1e-5f;

  int hop() const { return static_cast<int>(std::lround(frame_shift * sample_rate)); }
  int win() const { return static_cast<int>(std::lround(frame_length * sample_rate)); }
  int bins() const { return fft_size / 2 + 1; }
};

struct LinearSpectrogram {
  torch::Tensor values;  // (frames, bins), non-negative magnitudes
  FrameSpec spec;

  int64_t frames() const { return values.size(0); }
};

struct MelSpectrogram {
  torch::Tensor values;  // (frames, 80), log-amplitude
  FrameSpec spec;

  int64_t frames() const { return values.size(0); }
};

// Center-padded magnitude STFT with T = ceil(N / hop) frames. Accepts a 1-D
// (N) or batched 2-D (B, N) tensor; output is (T, bins) or (B, T, bins).
// Differentiable.
torch::Tensor StftMagnitude(const torch::Tensor& samples, const FrameSpec& spec);

// (bins, num_mels) triangular filterbank, HTK mel scale.
torch::Tensor MelFilterbank(const FrameSpec& spec);

// Mel projection + log(max(x, log_floor)). Last dim of `linear` must be bins.
torch::Tensor LogMelFromLinear(const torch::Tensor& linear, const FrameSpec& spec);

LinearSpectrogram Stft(const Waveform& wave, const FrameSpec& spec = {});
MelSpectrogram MelFromLinear(const LinearSpectrogram& linear);

// Mean SSIM over sliding uniform windows; inputs are (frames, bins) alike.
// The dynamic range is the joint max-min of the pair, and both inputs are
// shifted by the joint min first so the score depends only on the pair's
// relative structure. Differentiable.
torch::Tensor SsimTensor(const torch::Tensor& a, const torch::Tensor& b,
                         int window = 8);

float Ssim(const MelSpectrogram& a, const MelSpectrogram& b, int window = 8);

}  // namespace promptstyle

#endif  // DSP_FEATURES_H_
