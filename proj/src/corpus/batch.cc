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

#include "corpus/batch.h"

#include <stdexcept>

#include "dsp/wav.h"

namespace promptstyle {

const UtteranceFeatures& FeatureProvider::Get(const UtteranceRecord& rec) {
  auto it = cache_.find(rec.utt_id);
  if (it != cache_.end()) return it->second;

  auto wav = ReadWav(rec.wav_path, spec_.sample_rate);
  UtteranceFeatures feats;
  feats.wave = torch::from_blob(wav.samples.data(),
                                {static_cast<int64_t>(wav.samples.size())},
                                torch::kFloat)
                   .clone();
  auto lin = Stft(wav, spec_);
  feats.linear = lin.values.transpose(0, 1).contiguous();             // (bins, T)
  feats.mel = MelFromLinear(lin).values.transpose(0, 1).contiguous();  // (80, T)
  return cache_.emplace(rec.utt_id, std::move(feats)).first->second;
}

Batch MakeBatch(const std::vector<UtteranceRecord>& records,
                FeatureProvider& provider) {
  if (records.empty()) throw std::invalid_argument("empty record list");
  int64_t batch = static_cast<int64_t>(records.size());
  int hop = provider.spec().hop();
  int bins = provider.spec().bins();
  int mels = provider.spec().num_mels;

  int64_t max_len = 0, max_frames = 0;
  std::vector<const UtteranceFeatures*> feats;
  feats.reserve(records.size());
  for (const auto& rec : records) {
    feats.push_back(&provider.Get(rec));
    max_len = std::max<int64_t>(max_len, rec.phonemes.size());
    max_frames = std::max(max_frames, feats.back()->linear.size(1));
  }

  Batch out;
  out.phonemes = torch::zeros({batch, max_len}, torch::kInt64);
  out.phoneme_lengths = torch::zeros({batch}, torch::kInt64);
  out.linear = torch::zeros({batch, bins, max_frames});
  out.mel = torch::full({batch, mels, max_frames},
                        std::log(provider.spec().log_floor));
  out.spec_lengths = torch::zeros({batch}, torch::kInt64);
  out.wave = torch::zeros({batch, max_frames * hop});
  out.speaker_ids = torch::zeros({batch}, torch::kInt64);

  for (int64_t b = 0; b < batch; ++b) {
    const auto& rec = records[b];
    const auto& f = *feats[b];
    int64_t len = static_cast<int64_t>(rec.phonemes.size());
    out.phonemes.index_put_({b, torch::indexing::Slice(0, len)},
                            torch::tensor(rec.phonemes, torch::kInt64));
    out.phoneme_lengths[b] = len;
    int64_t frames = f.linear.size(1);
    out.linear.index_put_({b, torch::indexing::Slice(),
                           torch::indexing::Slice(0, frames)},
                          f.linear);
    out.mel.index_put_(
        {b, torch::indexing::Slice(), torch::indexing::Slice(0, frames)}, f.mel);
    out.spec_lengths[b] = frames;
    int64_t n = std::min<int64_t>(f.wave.size(0), frames * hop);
    out.wave.index_put_({b, torch::indexing::Slice(0, n)},
                        f.wave.slice(0, 0, n));
    out.speaker_ids[b] = rec.speaker_id;
    out.style_names.push_back(rec.style_name);
    out.prompts.push_back(rec.prompt_text);
  }
  return out;
}

torch::Tensor SequenceMask(const torch::Tensor& lengths, int64_t max_len) {
  auto range = torch::arange(max_len, lengths.options());
  return (range.unsqueeze(0) < lengths.unsqueeze(1))
      .to(torch::kFloat)
      .unsqueeze(1);
}

}  // namespace promptstyle
