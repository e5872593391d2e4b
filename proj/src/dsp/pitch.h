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

#ifndef DSP_PITCH_H_
#define DSP_PITCH_H_

#include <vector>

#include "dsp/wav.h"

namespace promptstyle {

struct AcousticProfile {
  float f0_mean = 0.0f;  // Hz over voiced frames; 0 if fully unvoiced
  float f0_std = 0.0f;
  float rms_energy = 0.0f;
  double duration = 0.0;  // seconds
};

struct PitchOptions {
  double f0_min = 60.0;
  double f0_max = 500.0;
  double voicing_threshold = 0.3;  // normalized autocorrelation peak
};

// Frame-wise F0 on the 12.5 ms / 50 ms grid; 0 marks unvoiced frames.
std::vector<float> EstimateF0(const Waveform& wave, const PitchOptions& opts = {});

AcousticProfile ComputeAcousticProfile(const Waveform& wave,
                                       const PitchOptions& opts = {});

}  // namespace promptstyle

#endif  // DSP_PITCH_H_
