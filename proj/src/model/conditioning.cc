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

#include "model/conditioning.h"

#include <stdexcept>

namespace promptstyle {

std::string ConditioningConfig::Describe() const {
  auto mark = [](bool b) { return b ? "+" : "-"; };
  return std::string("posterior(style") + mark(posterior_style) + " speaker" +
         mark(posterior_speaker) + ") flow(style" + mark(flow_style) +
         " speaker" + mark(flow_speaker) + ") decoder(style" +
         mark(decoder_style) + " speaker" + mark(decoder_speaker) +
         ") sdp(style" + mark(sdp_style) + " speaker" + mark(sdp_speaker) + ")";
}

ConditioningConfig ApplyPreset(const std::string& name) {
  ConditioningConfig c;
  if (name == "M1") {
    c.posterior_style = c.posterior_speaker = true;
    c.flow_style = c.flow_speaker = true;
    c.decoder_style = c.decoder_speaker = true;
  } else if (name == "M2") {
    c.posterior_style = c.posterior_speaker = true;
    c.flow_style = true;
    c.flow_speaker = false;
    c.decoder_style = c.decoder_speaker = true;
  } else if (name == "PROMPTSTYLE") {
    c.posterior_style = c.posterior_speaker = true;
    c.flow_style = true;
    c.flow_speaker = false;
    c.decoder_style = false;
    c.decoder_speaker = true;
  } else if (name == "M3") {
    c.posterior_style = false;
    c.posterior_speaker = true;
    c.flow_style = true;
    c.flow_speaker = false;
    c.decoder_style = false;
    c.decoder_speaker = true;
  } else {
    throw std::invalid_argument("unknown conditioning preset: " + name);
  }
  return c;
}

}  // namespace promptstyle
