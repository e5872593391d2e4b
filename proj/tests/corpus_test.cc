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

#include <filesystem>
#include <fstream>
#include <set>

#include "corpus/batch.h"
#include "corpus/generator.h"
#include "corpus/manifest.h"
#include "dsp/pitch.h"

// doctest last: its CHECK macros must win over the torch logging ones.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

using namespace promptstyle;
namespace fs = std::filesystem;

namespace {

CorpusConfig TinyConfig() {
  CorpusConfig cfg;
  cfg.styles = {DefaultStyles()[0], DefaultStyles()[2]};
  cfg.speakers = {DefaultSpeakers()[0], DefaultSpeakers()[1]};
  cfg.utts_per_cell = 3;
  cfg.seed = 42;
  return cfg;
}

fs::path TmpDir(const std::string& name) {
  auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("corpus generation writes a full grid and loads back") {
  auto dir = TmpDir("ps_corpus_grid");
  auto manifest = GenerateCorpus(TinyConfig(), dir.string());
  auto records = LoadManifest(manifest);
  CHECK(records.size() == 2 * 2 * 3);
  for (const auto& rec : records) {
    CHECK(!rec.phonemes.empty());
    CHECK(fs::exists(rec.wav_path));
  }
  fs::remove_all(dir);
}

TEST_CASE("corpus generation is byte-identical under a fixed seed") {
  auto dir1 = TmpDir("ps_corpus_det1");
  auto dir2 = TmpDir("ps_corpus_det2");
  auto cfg = TinyConfig();
  auto m1 = GenerateCorpus(cfg, dir1.string());
  auto m2 = GenerateCorpus(cfg, dir2.string());
  CHECK(Slurp(m1) == Slurp(m2));
  for (const auto& rec : LoadManifest(m1, false)) {
    auto rel = fs::relative(rec.wav_path, dir1);
    CHECK(Slurp(rec.wav_path) == Slurp(dir2 / rel));
  }
  fs::remove_all(dir1);
  fs::remove_all(dir2);
}

TEST_CASE("measured f0 tracks f0_base + speaker offset within 2%") {
  StyleSpec style = DefaultStyles()[0];
  style.f0_base = 220.0;
  SpeakerSpec spk{0, 10.0, 1.0};
  std::vector<int64_t> phones;
  std::vector<double> durs;
  DrawContent(9, 0, 0, &phones, &durs);
  auto wave = RenderUtterance(style, spk, phones, durs, 5);
  auto prof = ComputeAcousticProfile(wave);
  CHECK(prof.f0_mean == doctest::Approx(230.0).epsilon(0.02));
}

TEST_CASE("rate scales duration: same phones, rate 2 vs 1") {
  auto style1 = DefaultStyles()[1];  // rate 1.0
  auto style2 = style1;
  style2.rate = 2.0;
  SpeakerSpec spk{1, 0.0, 1.0};
  std::vector<int64_t> phones;
  std::vector<double> durs;
  DrawContent(3, 1, 0, &phones, &durs);
  auto w1 = RenderUtterance(style1, spk, phones, durs, 5);
  auto w2 = RenderUtterance(style2, spk, phones, durs, 5);
  double ratio = w2.duration() / w1.duration();
  CHECK(ratio == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("f0_base deltas survive the pipeline within 3%") {
  auto a = DefaultStyles()[1];  // deep, 100 Hz
  auto b = a;
  b.f0_base = 160.0;
  SpeakerSpec spk{2, 0.0, 1.0};
  std::vector<int64_t> phones;
  std::vector<double> durs;
  DrawContent(11, 2, 1, &phones, &durs);
  auto pa = ComputeAcousticProfile(RenderUtterance(a, spk, phones, durs, 1));
  auto pb = ComputeAcousticProfile(RenderUtterance(b, spk, phones, durs, 1));
  CHECK(pb.f0_mean - pa.f0_mean == doctest::Approx(60.0).epsilon(0.03));
}

TEST_CASE("every manifest prompt comes from its style's template list") {
  auto dir = TmpDir("ps_corpus_prompts");
  auto cfg = TinyConfig();
  cfg.annotated_fraction = 0.5;
  auto records = LoadManifest(GenerateCorpus(cfg, dir.string()));
  int annotated = 0;
  for (const auto& rec : records) {
    if (!rec.prompt_text) continue;
    ++annotated;
    bool found = false;
    for (const auto& style : cfg.styles) {
      if (style.name != rec.style_name) continue;
      for (const auto& tmpl : SeenTemplates(style)) found |= tmpl == *rec.prompt_text;
      // The held-out template must never be used for training data.
      CHECK(*rec.prompt_text != HeldOutTemplate(style));
    }
    CHECK(found);
  }
  CHECK(annotated == 2 * 2 * 2);  // ceil(0.5 * 3) per cell
  fs::remove_all(dir);
}

TEST_CASE("manifest loader errors") {
  auto dir = TmpDir("ps_corpus_manifest");
  fs::create_directories(dir);
  auto path = dir / "manifest.jsonl";

  SUBCASE("empty file loads as empty list") {
    std::ofstream(path).close();
    CHECK(LoadManifest(path.string()).empty());
  }
  SUBCASE("missing field names the field and line") {
    std::ofstream out(path);
    out << R"({"utt_id":"u0","wav_path":"x.wav","phonemes":[1],"style_name":"calm"})"
        << "\n";
    out.close();
    CHECK_THROWS_WITH_AS(LoadManifest(path.string()),
                         doctest::Contains("speaker_id"), std::runtime_error);
    CHECK_THROWS_WITH_AS(LoadManifest(path.string()), doctest::Contains("line 1"),
                         std::runtime_error);
  }
  SUBCASE("missing wav cites the utt_id") {
    std::ofstream out(path);
    out << R"({"utt_id":"ghost","wav_path":"nope.wav","phonemes":[1],"speaker_id":0,"style_name":"calm"})"
        << "\n";
    out.close();
    CHECK_THROWS_WITH_AS(LoadManifest(path.string()), doctest::Contains("ghost"),
                         std::runtime_error);
  }
  fs::remove_all(dir);
}

TEST_CASE("manifest save/load round-trips all fields") {
  auto dir = TmpDir("ps_corpus_roundtrip");
  auto cfg = TinyConfig();
  auto manifest = GenerateCorpus(cfg, dir.string());
  auto records = LoadManifest(manifest);
  auto copy = dir / "copy.jsonl";
  SaveManifest(copy.string(), records);
  auto again = LoadManifest(copy.string());
  REQUIRE(again.size() == records.size());
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(again[i].utt_id == records[i].utt_id);
    CHECK(again[i].phonemes == records[i].phonemes);
    CHECK(again[i].speaker_id == records[i].speaker_id);
    CHECK(again[i].style_name == records[i].style_name);
    CHECK(again[i].prompt_text == records[i].prompt_text);
  }
  fs::remove_all(dir);
}

TEST_CASE("batch assembly pads and masks consistently") {
  auto dir = TmpDir("ps_corpus_batch");
  auto records = LoadManifest(GenerateCorpus(TinyConfig(), dir.string()));
  FeatureProvider provider;

  SUBCASE("single record: padded length equals its own") {
    auto batch = MakeBatch({records[0]}, provider);
    CHECK(batch.size() == 1);
    CHECK(batch.phonemes.size(1) ==
          static_cast<int64_t>(records[0].phonemes.size()));
    CHECK(batch.linear.size(2) == batch.spec_lengths[0].item<int64_t>());
  }
  SUBCASE("batch of N: leading dims and mask sums") {
    std::vector<UtteranceRecord> subset(records.begin(), records.begin() + 4);
    auto batch = MakeBatch(subset, provider);
    CHECK(batch.size() == 4);
    CHECK(batch.linear.size(0) == 4);
    CHECK(batch.mel.size(0) == 4);
    CHECK(batch.wave.size(0) == 4);
    auto mask = SequenceMask(batch.phoneme_lengths, batch.phonemes.size(1));
    for (int64_t b = 0; b < 4; ++b) {
      CHECK(mask[b].sum().item<int64_t>() ==
            batch.phoneme_lengths[b].item<int64_t>());
      CHECK(batch.phoneme_lengths[b].item<int64_t>() <= batch.phonemes.size(1));
    }
    CHECK(batch.wave.size(1) == batch.linear.size(2) * 300);
  }
  fs::remove_all(dir);
}
