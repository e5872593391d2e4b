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

#include "dsp/pitch.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace promptstyle {

namespace {

// Normalized autocorrelation of x[0..n-lag) against x[lag..n).
double Ncc(const float* x, int n, int lag) {
  int m = n - lag;
  double num = 0.0, e0 = 0.0, e1 = 0.0;
  for (int i = 0; i < m; ++i) {
    num += static_cast<double>(x[i]) * x[i + lag];
    e0 += static_cast<double>(x[i]) * x[i];
    e1 += static_cast<double>(x[i + lag]) * x[i + lag];
  }
  double denom = std::sqrt(e0 * e1);
  return denom > 1e-12 ? num / denom : 0.0;
}

}  // namespace

std::vector<float> EstimateF0(const Waveform& wave, const PitchOptions& opts) {
  if (wave.samples.empty()) throw std::invalid_argument("empty waveform");
  int sr = wave.sample_rate;
  int hop = static_cast<int>(std::lround(0.0125 * sr));
  int win = static_cast<int>(std::lround(0.050 * sr));
  int lag_min = std::max(2, static_cast<int>(sr / opts.f0_max));
  int lag_max = std::min(win / 2, static_cast<int>(sr / opts.f0_min));

  int n = static_cast<int>(wave.samples.size());
  int frames = (n + hop - 1) / hop;
  std::vector<float> f0(frames, 0.0f);
  std::vector<float> buf(win);

  for (int t = 0; t < frames; ++t) {
    int start = t * hop - win / 2;
    double mean = 0.0;
    for (int i = 0; i < win; ++i) {
      int j = std::clamp(start + i, 0, n - 1);
      buf[i] = wave.samples[j];
      mean += buf[i];
    }
    mean /= win;
    for (int i = 0; i < win; ++i) buf[i] -= static_cast<float>(mean);

    std::vector<double> ncc(lag_max + 1, 0.0);
    double peak = 0.0;
    for (int lag = lag_min; lag <= lag_max; ++lag) {
      ncc[lag] = Ncc(buf.data(), win, lag);
      peak = std::max(peak, ncc[lag]);
    }
    // Prefer the shortest period among near-peak lags; the autocorrelation of
    // a periodic signal also peaks at integer multiples of the true period.
    int best_lag = 0;
    double best = 0.0;
    if (peak > opts.voicing_threshold) {
      for (int lag = lag_min; lag <= lag_max; ++lag) {
        if (ncc[lag] >= 0.98 * peak) {
          best_lag = lag;
          while (best_lag + 1 <= lag_max && ncc[best_lag + 1] > ncc[best_lag]) {
            ++best_lag;  // climb to the local maximum
          }
          best = ncc[best_lag];
          break;
        }
      }
    }
    if (best_lag > lag_min && best_lag < lag_max) {
      // Parabolic refinement around the peak.
      double r0 = ncc[best_lag - 1];
      double r1 = best;
      double r2 = ncc[best_lag + 1];
      double denom = r0 - 2 * r1 + r2;
      double delta = std::abs(denom) > 1e-12 ? 0.5 * (r0 - r2) / denom : 0.0;
      delta = std::clamp(delta, -0.5, 0.5);
      f0[t] = static_cast<float>(sr / (best_lag + delta));
    } else if (best_lag > 0) {
      f0[t] = static_cast<float>(static_cast<double>(sr) / best_lag);
    }
  }
  return f0;
}

AcousticProfile ComputeAcousticProfile(const Waveform& wave,
                                       const PitchOptions& opts) {
  AcousticProfile prof;
  prof.duration = wave.duration();

  double sumsq = 0.0;
  for (float s : wave.samples) sumsq += static_cast<double>(s) * s;
  prof.rms_energy = static_cast<float>(std::sqrt(sumsq / wave.samples.size()));

  auto f0 = EstimateF0(wave, opts);
  double sum = 0.0;
  int voiced = 0;
  for (float v : f0) {
    if (v > 0.0f) {
      sum += v;
      ++voiced;
    }
  }
  if (voiced > 0) {
    prof.f0_mean = static_cast<float>(sum / voiced);
    double var = 0.0;
    for (float v : f0) {
      if (v > 0.0f) var += (v - prof.f0_mean) * (v - prof.f0_mean);
    }
    prof.f0_std = static_cast<float>(std::sqrt(var / voiced));
  }
  return prof;
}

}  // namespace promptstyle
