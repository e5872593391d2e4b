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

#include "corpus/manifest.h"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace promptstyle {

using nlohmann::json;

std::vector<UtteranceRecord> LoadManifest(const std::string& path,
                                          bool check_wavs) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  auto base = std::filesystem::path(path).parent_path();

  std::vector<UtteranceRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw std::runtime_error("manifest " + path + " line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    UtteranceRecord rec;
    auto require = [&](const char* key) -> const json& {
      if (!j.contains(key)) {
        throw std::runtime_error("manifest " + path + " line " +
                                 std::to_string(line_no) +
                                 ": missing field \"" + key + "\"");
      }
      return j.at(key);
    };
    try {
      rec.utt_id = require("utt_id").get<std::string>();
      rec.wav_path = require("wav_path").get<std::string>();
      rec.phonemes = require("phonemes").get<std::vector<int64_t>>();
      rec.speaker_id = require("speaker_id").get<int>();
      rec.style_name = require("style_name").get<std::string>();
      if (j.contains("prompt_text") && !j.at("prompt_text").is_null()) {
        rec.prompt_text = j.at("prompt_text").get<std::string>();
      }
    } catch (const json::type_error& e) {
      throw std::runtime_error("manifest " + path + " line " +
                               std::to_string(line_no) + ": " + e.what());
    }
    if (rec.phonemes.empty()) {
      throw std::runtime_error("manifest " + path + " line " +
                               std::to_string(line_no) + ": empty phonemes");
    }
    auto wav = std::filesystem::path(rec.wav_path);
    if (wav.is_relative()) wav = base / wav;
    rec.wav_path = wav.string();
    if (check_wavs && !std::filesystem::exists(wav)) {
      throw std::runtime_error("manifest utterance " + rec.utt_id +
                               ": wav not found at " + rec.wav_path);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void SaveManifest(const std::string& path,
                  const std::vector<UtteranceRecord>& records) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifest: " + path);
  for (const auto& rec : records) {
    json j;
    j["utt_id"] = rec.utt_id;
    j["wav_path"] = rec.wav_path;
    j["phonemes"] = rec.phonemes;
    j["speaker_id"] = rec.speaker_id;
    j["style_name"] = rec.style_name;
    if (rec.prompt_text) j["prompt_text"] = *rec.prompt_text;
    out << j.dump() << "\n";
  }
}

}  // namespace promptstyle
