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

#include "model/synthesizer.h"

#include <stdexcept>
#include <utility>

namespace promptstyle {

namespace {

std::optional<torch::Tensor> If(bool enabled, const torch::Tensor& t) {
  if (!enabled) return std::nullopt;
  return t;
}

}  // namespace

PromptStyleModelImpl::PromptStyleModelImpl(ModelConfig config)
    : config_(std::move(config)) {
  const auto& c = config_;
  text_encoder = register_module(
      "text_encoder", TextEncoder(c.phoneme_vocab, c.hidden, c.latent,
                                  c.text_layers, c.text_heads));
  posterior_encoder = register_module(
      "posterior_encoder",
      PosteriorEncoder(c.frame.bins(), c.hidden, c.latent,
                       c.cond.posterior_style, c.cond.posterior_speaker, 4,
                       c.style_dim, c.speaker_dim));
  flow = register_module(
      "flow", ConditionedFlow(c.latent, c.hidden, c.flow_blocks,
                              c.cond.flow_speaker, c.style_dim, c.speaker_dim));
  sdp = register_module(
      "sdp", StochasticDurationPredictor(c.hidden, c.cond.sdp_style,
                                         c.cond.sdp_speaker, 2, c.style_dim,
                                         c.speaker_dim));
  decoder = register_module(
      "decoder", Decoder(c.latent, c.cond.decoder_style, c.cond.decoder_speaker,
                         c.upsample, 128, c.style_dim, c.speaker_dim));
  reference_encoder = register_module(
      "reference_encoder", ReferenceEncoder(c.frame.num_mels, c.style_dim));
  speaker_classifier = register_module(
      "speaker_classifier", SpeakerClassifier(c.style_dim, c.n_speakers));
  speaker_table = register_module(
      "speaker_table", torch::nn::Embedding(c.n_speakers, c.speaker_dim));
  if (decoder->hop() != c.frame.hop()) {
    throw std::logic_error("decoder upsampling does not match the frame hop");
  }
}

PriorStats PromptStyleModelImpl::EncodeText(const torch::Tensor& phonemes,
                                            const torch::Tensor& lengths) {
  return text_encoder->forward(phonemes, lengths);
}

LatentSequence PromptStyleModelImpl::EncodePosterior(
    const torch::Tensor& linear, const torch::Tensor& mask,
    const torch::Tensor& style, const torch::Tensor& speaker,
    bool deterministic) {
  return posterior_encoder->forward(linear, mask,
                                    If(config_.cond.posterior_style, style),
                                    If(config_.cond.posterior_speaker, speaker),
                                    deterministic);
}

torch::Tensor PromptStyleModelImpl::FlowForward(const torch::Tensor& z,
                                                const torch::Tensor& mask,
                                                const torch::Tensor& style,
                                                const torch::Tensor& speaker) {
  return flow->forward(z, mask, If(config_.cond.flow_style, style),
                       If(config_.cond.flow_speaker, speaker));
}

torch::Tensor PromptStyleModelImpl::FlowInverse(const torch::Tensor& z_p,
                                                const torch::Tensor& mask,
                                                const torch::Tensor& style,
                                                const torch::Tensor& speaker) {
  return flow->inverse(z_p, mask, If(config_.cond.flow_style, style),
                       If(config_.cond.flow_speaker, speaker));
}

torch::Tensor PromptStyleModelImpl::Decode(const torch::Tensor& z,
                                           const torch::Tensor& style,
                                           const torch::Tensor& speaker) {
  return decoder->forward(z, If(config_.cond.decoder_style, style),
                          If(config_.cond.decoder_speaker, speaker));
}

torch::Tensor PromptStyleModelImpl::SdpLoss(const torch::Tensor& hidden,
                                            const torch::Tensor& mask,
                                            const torch::Tensor& durations,
                                            const torch::Tensor& style,
                                            const torch::Tensor& speaker) {
  return sdp->loss(hidden, mask, durations, If(config_.cond.sdp_style, style),
                   If(config_.cond.sdp_speaker, speaker));
}

torch::Tensor PromptStyleModelImpl::SdpSample(const torch::Tensor& hidden,
                                              const torch::Tensor& mask,
                                              const torch::Tensor& style,
                                              const torch::Tensor& speaker,
                                              double noise_scale) {
  return sdp->sample(hidden, mask, If(config_.cond.sdp_style, style),
                     If(config_.cond.sdp_speaker, speaker), noise_scale);
}

torch::Tensor PromptStyleModelImpl::SpeakerEmbedding(
    const torch::Tensor& speaker_ids) {
  if ((speaker_ids < 0).any().item<bool>() ||
      (speaker_ids >= config_.n_speakers).any().item<bool>()) {
    throw std::invalid_argument("unknown speaker id");
  }
  return speaker_table->forward(speaker_ids);
}

torch::Tensor ExpandByDurations(const torch::Tensor& x,
                                const torch::Tensor& durations) {
  int64_t batch = x.size(0);
  std::vector<torch::Tensor> rows;
  int64_t max_t = 0;
  for (int64_t b = 0; b < batch; ++b) {
    rows.push_back(torch::repeat_interleave(x[b], durations[b], /*dim=*/1));
    max_t = std::max(max_t, rows.back().size(1));
  }
  for (auto& row : rows) {
    int64_t pad = max_t - row.size(1);
    if (pad > 0) {
      row = torch::constant_pad_nd(row, {0, pad});
    }
  }
  return torch::stack(rows, 0);
}

SynthesisResult PromptStyleModelImpl::Synthesize(
    const std::vector<int64_t>& phoneme_ids, int speaker_id,
    const torch::Tensor& style_vector, double noise_scale,
    double duration_noise_scale) {
  if (phoneme_ids.empty()) {
    throw std::invalid_argument("empty phoneme sequence");
  }
  torch::NoGradGuard no_grad;
  eval();
  auto phonemes =
      torch::tensor(phoneme_ids, torch::kInt64).unsqueeze(0);  // (1, L)
  auto lengths = torch::tensor({static_cast<int64_t>(phoneme_ids.size())},
                               torch::kInt64);
  auto style = style_vector.reshape({1, -1});
  auto speaker =
      SpeakerEmbedding(torch::tensor({static_cast<int64_t>(speaker_id)},
                                     torch::kInt64));

  auto prior = EncodeText(phonemes, lengths);
  auto text_mask =
      torch::ones({1, 1, phonemes.size(1)}, prior.hidden.options());
  auto durations = SdpSample(prior.hidden, text_mask, style, speaker,
                             duration_noise_scale);  // (1, L)

  auto m_p = ExpandByDurations(prior.mean, durations);
  auto logs_p = ExpandByDurations(prior.log_std, durations);
  auto frame_mask = torch::ones({1, 1, m_p.size(2)}, m_p.options());
  auto z_p = m_p + torch::randn_like(m_p) * torch::exp(logs_p) * noise_scale;
  auto z = FlowInverse(z_p, frame_mask, style, speaker);
  auto wave = Decode(z, style, speaker);  // (1, hop*T)
  return {wave.squeeze(0), durations.squeeze(0)};
}

}  // namespace promptstyle
