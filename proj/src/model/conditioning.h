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

#ifndef MODEL_CONDITIONING_H_
#define MODEL_CONDITIONING_H_

#include <string>

namespace promptstyle {

// Per-site style/speaker switches. The text encoder is unconditioned by
// construction and has no entry here.
struct ConditioningConfig {
  bool posterior_style = true;
  bool posterior_speaker = true;
  bool flow_style = true;
  bool flow_speaker = false;
  bool decoder_style = false;
  bool decoder_speaker = true;
  bool sdp_style = true;
  bool sdp_speaker = false;

  bool operator==(const ConditioningConfig&) const = default;
  std::string Describe() const;
};

// Presets: M1, M2, PROMPTSTYLE, M3.
ConditioningConfig ApplyPreset(const std::string& name);

}  // namespace promptstyle

#endif  // MODEL_CONDITIONING_H_
