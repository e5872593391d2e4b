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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "dsp/features.h"
#include "dsp/pitch.h"
#include "dsp/wav.h"

// doctest last: its CHECK macros must win over the torch logging ones.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

using namespace promptstyle;

namespace {

Waveform Sine(double freq, double seconds, float amp = 0.5f, int sr = 24000) {
  Waveform w;
  w.sample_rate = sr;
  w.samples.resize(static_cast<size_t>(seconds * sr));
  for (size_t i = 0; i < w.samples.size(); ++i) {
    w.samples[i] = amp * static_cast<float>(std::sin(2.0 * M_PI * freq * i / sr));
  }
  return w;
}

std::filesystem::path TmpFile(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("stft frame grid matches 12.5ms/50ms at 24kHz") {
  FrameSpec spec;
  CHECK(spec.hop() == 300);
  CHECK(spec.win() == 1200);
  CHECK(spec.bins() == 1025);

  auto lin = Stft(Sine(200.0, 1.0));
  CHECK(lin.frames() == 80);  // ceil(24000 / 300)
  CHECK(lin.values.size(1) == 1025);
  CHECK(lin.values.min().item<float>() >= 0.0f);
}

TEST_CASE("stft of silence is zero") {
  Waveform w;
  w.samples.assign(24000, 0.0f);
  auto lin = Stft(w);
  CHECK(lin.values.abs().max().item<float>() == 0.0f);
}

TEST_CASE("stft rejects empty and too-short input") {
  Waveform w;
  CHECK_THROWS_AS(Stft(w), std::invalid_argument);
  w.samples.assign(600, 0.1f);
  CHECK_THROWS_AS(Stft(w), std::invalid_argument);
}

TEST_CASE("stft frame count is ceil(N/hop) over a randomized sweep") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(1200, 60000);
  for (int trial = 0; trial < 30; ++trial) {
    int n = len(rng);
    Waveform w;
    w.samples.assign(n, 0.01f);
    auto lin = Stft(w);
    CHECK(lin.frames() == (n + 299) / 300);
  }
}

TEST_CASE("mel spectrogram has 80 bins and preserves frame count") {
  auto lin = Stft(Sine(220.0, 1.0));
  auto mel = MelFromLinear(lin);
  CHECK(mel.values.size(1) == 80);
  CHECK(mel.frames() == lin.frames());
}

TEST_CASE("mel of zero input hits the log floor") {
  FrameSpec spec;
  LinearSpectrogram lin{torch::zeros({10, spec.bins()}), spec};
  auto mel = MelFromLinear(lin);
  float expect = std::log(spec.log_floor);
  CHECK(mel.values.max().item<float>() == doctest::Approx(expect));
  CHECK(mel.values.min().item<float>() == doctest::Approx(expect));
}

TEST_CASE("mel projection is monotone pre-log") {
  FrameSpec spec;
  auto fb = MelFilterbank(spec);
  CHECK(fb.min().item<float>() >= 0.0f);
  torch::manual_seed(3);
  auto a = torch::rand({12, spec.bins()});
  auto b = a + torch::rand({12, spec.bins()});  // elementwise larger
  auto ma = torch::matmul(a, fb);
  auto mb = torch::matmul(b, fb);
  CHECK((mb - ma).min().item<float>() >= 0.0f);
}

TEST_CASE("ssim self-similarity is exactly 1") {
  auto lin = Stft(Sine(180.0, 0.5));
  auto mel = MelFromLinear(lin);
  CHECK(Ssim(mel, mel) == 1.0f);
}

TEST_CASE("ssim constant-image closed form") {
  FrameSpec spec;
  MelSpectrogram a{torch::zeros({16, 80}), spec};
  MelSpectrogram b{torch::ones({16, 80}), spec};
  double c1 = 1e-4;
  CHECK(Ssim(a, b) == doctest::Approx(c1 / (1.0 + c1)).epsilon(1e-6));
}

TEST_CASE("ssim symmetry and joint-range shift invariance") {
  torch::manual_seed(11);
  FrameSpec spec;
  auto x = torch::rand({20, 80});
  auto y = torch::rand({20, 80});
  MelSpectrogram a{x, spec}, b{y, spec};
  MelSpectrogram bs{y, spec}, as{x, spec};
  CHECK(Ssim(a, b) == doctest::Approx(Ssim(bs, as)).epsilon(1e-7));

  MelSpectrogram a2{x + 3.5f, spec}, b2{y + 3.5f, spec};
  CHECK(Ssim(a2, b2) == doctest::Approx(Ssim(a, b)).epsilon(1e-5));
}

TEST_CASE("ssim rejects shape mismatch") {
  FrameSpec spec;
  MelSpectrogram a{torch::zeros({10, 80}), spec};
  MelSpectrogram b{torch::zeros({11, 80}), spec};
  CHECK_THROWS_AS(Ssim(a, b), std::invalid_argument);
}

TEST_CASE("f0 recovers sinusoid frequency within 1%") {
  for (double f : {80.0, 100.0, 120.0, 200.0, 400.0}) {
    auto prof = ComputeAcousticProfile(Sine(f, 1.0));
    CHECK(prof.f0_mean == doctest::Approx(f).epsilon(0.01));
  }
}

TEST_CASE("f0 reports low-level noise as unvoiced") {
  std::mt19937 rng(5);
  std::normal_distribution<float> noise(0.0f, 0.01f);
  Waveform w;
  w.samples.resize(24000);
  for (auto& s : w.samples) s = noise(rng);
  auto f0 = EstimateF0(w);
  int voiced = 0;
  for (float v : f0) voiced += v > 0.0f;
  CHECK(voiced < static_cast<int>(f0.size()) / 4);
}

TEST_CASE("acoustic profile of a sinusoid") {
  auto prof = ComputeAcousticProfile(Sine(150.0, 2.0, 0.5f));
  CHECK(prof.duration == doctest::Approx(2.0));
  CHECK(prof.f0_mean == doctest::Approx(150.0).epsilon(0.01));
  CHECK(prof.rms_energy == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(0.01));
}

TEST_CASE("acoustic profile of silence") {
  Waveform w;
  w.samples.assign(24000, 0.0f);
  auto prof = ComputeAcousticProfile(w);
  CHECK(prof.f0_mean == 0.0f);
  CHECK(prof.rms_energy == 0.0f);
}

TEST_CASE("self-concatenation doubles duration, keeps f0") {
  auto w = Sine(150.0, 1.0);
  Waveform ww = w;
  ww.samples.insert(ww.samples.end(), w.samples.begin(), w.samples.end());
  auto p1 = ComputeAcousticProfile(w);
  auto p2 = ComputeAcousticProfile(ww);
  CHECK(p2.duration == doctest::Approx(2 * p1.duration));
  CHECK(p2.f0_mean == doctest::Approx(p1.f0_mean).epsilon(0.005));
}

TEST_CASE("wav round-trip within quantization error") {
  auto w = Sine(330.0, 0.3);
  auto path = TmpFile("ps_dsp_roundtrip.wav");
  WriteWav(path.string(), w);
  auto r = ReadWav(path.string());
  REQUIRE(r.samples.size() == w.samples.size());
  CHECK(r.sample_rate == 24000);
  float max_err = 0.0f;
  for (size_t i = 0; i < w.samples.size(); ++i) {
    max_err = std::max(max_err, std::abs(r.samples[i] - w.samples[i]));
  }
  CHECK(max_err <= 1.0f / 32768.0f);
  std::filesystem::remove(path);
}

TEST_CASE("wav reader rejects stereo") {
  // Hand-built 2-channel header.
  auto path = TmpFile("ps_dsp_stereo.wav");
  {
    auto w = Sine(100.0, 0.05);
    WriteWav(path.string(), w);
    std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(22);
    char two[2] = {2, 0};
    f.write(two, 2);
  }
  CHECK_THROWS_WITH_AS(ReadWav(path.string()),
                       doctest::Contains("mono required"), std::runtime_error);
  std::filesystem::remove(path);
}

TEST_CASE("wav reader rejects unexpected sample rate, naming both") {
  auto path = TmpFile("ps_dsp_rate.wav");
  auto w = Sine(100.0, 0.1, 0.5f, 16000);
  WriteWav(path.string(), w);
  CHECK_THROWS_WITH_AS(ReadWav(path.string(), 24000),
                       doctest::Contains("16000"), std::runtime_error);
  CHECK_THROWS_WITH_AS(ReadWav(path.string(), 24000),
                       doctest::Contains("24000"), std::runtime_error);
  CHECK(ReadWav(path.string(), 0).sample_rate == 16000);
  std::filesystem::remove(path);
}
