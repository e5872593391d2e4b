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

#ifndef DSP_WAV_H_
#define DSP_WAV_H_

#include <string>
#include <vector>

namespace promptstyle {

struct Waveform {
  std::vector<float> samples;  // range [-1, 1]
  int sample_rate = 24000;

  double duration() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

// 16-bit PCM mono RIFF only. Pass expected_rate = 0 to accept any rate.
Waveform ReadWav(const std::string& path, int expected_rate = 24000);
void WriteWav(const std::string& path, const Waveform& wave);

}  // namespace promptstyle

#endif  // DSP_WAV_H_
