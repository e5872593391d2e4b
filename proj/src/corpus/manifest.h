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

#ifndef CORPUS_MANIFEST_H_
#define CORPUS_MANIFEST_H_

#include <string>
#include <vector>

#include "corpus/spec.h"

namespace promptstyle {

// JSON-lines manifest, one UtteranceRecord per line. wav_path entries are
// stored as written; on load, relative paths are resolved against the
// manifest's directory and each wav's existence is checked.
std::vector<UtteranceRecord> LoadManifest(const std::string& path,
                                          bool check_wavs = true);
void SaveManifest(const std::string& path,
                  const std::vector<UtteranceRecord>& records);

}  // namespace promptstyle

#endif  // CORPUS_MANIFEST_H_
