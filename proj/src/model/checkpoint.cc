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

#include "model/checkpoint.h"

#include <filesystem>
#include <stdexcept>

namespace promptstyle {

namespace {

constexpr int64_t kFormatVersion = 1;

void WriteCond(torch::serialize::OutputArchive& archive,
               const ConditioningConfig& cond) {
  auto flag = [&](const char* name, bool v) {
    archive.write(name, torch::tensor(static_cast<int64_t>(v)));
  };
  flag("cond/posterior_style", cond.posterior_style);
  flag("cond/posterior_speaker", cond.posterior_speaker);
  flag("cond/flow_style", cond.flow_style);
  flag("cond/flow_speaker", cond.flow_speaker);
  flag("cond/decoder_style", cond.decoder_style);
  flag("cond/decoder_speaker", cond.decoder_speaker);
  flag("cond/sdp_style", cond.sdp_style);
  flag("cond/sdp_speaker", cond.sdp_speaker);
}

int64_t ReadInt(torch::serialize::InputArchive& archive, const char* name) {
  torch::Tensor t;
  archive.read(name, t);
  return t.item<int64_t>();
}

std::string ReadString(torch::serialize::InputArchive& archive,
                       const char* name) {
  torch::Tensor t;
  archive.read(name, t);
  std::string out;
  auto acc = t.accessor<int64_t, 1>();
  for (int64_t i = 0; i < acc.size(0); ++i) {
    out.push_back(static_cast<char>(acc[i]));
  }
  return out;
}

void WriteString(torch::serialize::OutputArchive& archive, const char* name,
                 const std::string& value) {
  std::vector<int64_t> codes(value.begin(), value.end());
  archive.write(name, torch::tensor(codes, torch::kInt64));
}

CheckpointMeta ReadMeta(torch::serialize::InputArchive& archive) {
  int64_t version = ReadInt(archive, "meta/version");
  if (version != kFormatVersion) {
    throw std::runtime_error("unsupported checkpoint format version " +
                             std::to_string(version));
  }
  CheckpointMeta meta;
  meta.step = ReadInt(archive, "meta/step");
  meta.stage = static_cast<int>(ReadInt(archive, "meta/stage"));
  meta.preset = ReadString(archive, "meta/preset");
  auto flag = [&](const char* name) { return ReadInt(archive, name) != 0; };
  meta.cond.posterior_style = flag("cond/posterior_style");
  meta.cond.posterior_speaker = flag("cond/posterior_speaker");
  meta.cond.flow_style = flag("cond/flow_style");
  meta.cond.flow_speaker = flag("cond/flow_speaker");
  meta.cond.decoder_style = flag("cond/decoder_style");
  meta.cond.decoder_speaker = flag("cond/decoder_speaker");
  meta.cond.sdp_style = flag("cond/sdp_style");
  meta.cond.sdp_speaker = flag("cond/sdp_speaker");
  return meta;
}

}  // namespace

void SaveCheckpoint(const std::string& path, torch::nn::Module& model,
                    const CheckpointMeta& meta) {
  torch::serialize::OutputArchive archive;
  archive.write("meta/version", torch::tensor(kFormatVersion));
  archive.write("meta/step", torch::tensor(meta.step));
  archive.write("meta/stage", torch::tensor(static_cast<int64_t>(meta.stage)));
  WriteString(archive, "meta/preset", meta.preset);
  WriteCond(archive, meta.cond);
  for (const auto& p : model.named_parameters()) {
    archive.write("param/" + p.key(), p.value().detach().cpu());
  }
  for (const auto& b : model.named_buffers()) {
    archive.write("buffer/" + b.key(), b.value().detach().cpu());
  }
  // Atomic replace: write to a sibling temp file, then rename.
  std::string tmp = path + ".tmp";
  archive.save_to(tmp);
  std::filesystem::rename(tmp, path);
}

CheckpointMeta LoadCheckpoint(const std::string& path, torch::nn::Module& model,
                              const ConditioningConfig& expected_cond) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("checkpoint not found: " + path);
  }
  torch::serialize::InputArchive archive;
  archive.load_from(path);
  CheckpointMeta meta = ReadMeta(archive);
  if (!(meta.cond == expected_cond)) {
    throw std::runtime_error(
        "checkpoint conditioning mismatch: stored {" + meta.cond.Describe() +
        "} vs expected {" + expected_cond.Describe() + "}");
  }
  torch::NoGradGuard no_grad;
  for (const auto& p : model.named_parameters()) {
    torch::Tensor t;
    archive.read("param/" + p.key(), t);
    if (!t.sizes().equals(p.value().sizes())) {
      throw std::runtime_error("checkpoint shape mismatch for " + p.key());
    }
    p.value().copy_(t);
  }
  for (const auto& b : model.named_buffers()) {
    torch::Tensor t;
    archive.read("buffer/" + b.key(), t);
    b.value().copy_(t.to(b.value().dtype()));
  }
  return meta;
}

CheckpointMeta PeekCheckpoint(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw std::runtime_error("checkpoint not found: " + path);
  }
  torch::serialize::InputArchive archive;
  archive.load_from(path);
  return ReadMeta(archive);
}

uint64_t ParameterChecksum(const std::vector<torch::Tensor>& params) {
  uint64_t h = 1469598103934665603ull;
  for (const auto& p : params) {
    auto flat = p.detach().cpu().contiguous().to(torch::kFloat32);
    const auto* bytes = reinterpret_cast<const uint8_t*>(flat.data_ptr<float>());
    int64_t n = flat.numel() * static_cast<int64_t>(sizeof(float));
    for (int64_t i = 0; i < n; ++i) {
      h ^= bytes[i];
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace promptstyle
