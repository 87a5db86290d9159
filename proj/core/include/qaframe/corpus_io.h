// Copyright 2026 The qaframe Authors.
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

// JSONL corpora: annotated frames, gold PropBank arguments, and the aligned
// output. Errors name the file and line of the offending record.

#ifndef QAFRAME_CORPUS_IO_H_
#define QAFRAME_CORPUS_IO_H_

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qaframe/frame.h"
#include "qaframe/framealign.h"
#include "qaframe/inflection.h"
#include "qaframe/selection.h"

namespace qaframe {

struct FrameRecord {
  Frame frame;
  // SRL arguments of the same predicate, when the record carries "srl".
  std::optional<std::vector<SrlArgument>> srl;
  nlohmann::json raw;
  int line = 0;
};

// {"sentence_id", "tokens", "predicate": {"index", "lemma", "sense"?},
//  "entries": [{"slots": {...}, "answers": [{"start", "end"}]}],
//  "srl"?: [{"role", "start", "end"}]}
FrameRecord ParseFrameRecord(const nlohmann::json &j, const InflectionLexicon &lexicon);
std::vector<FrameRecord> ReadFrames(std::istream &in, const std::string &source,
                                    const InflectionLexicon &lexicon);
nlohmann::json FrameToJson(const Frame &frame, const InflectionLexicon &lexicon);

// {"sentence_id", "tokens", "predicate": {...}, "arguments": [{"role", "start", "end"}]}
GoldInstance ParseGoldInstance(const nlohmann::json &j);
std::vector<GoldInstance> ReadGold(std::istream &in, const std::string &source);
nlohmann::json GoldToJson(const GoldInstance &instance);

// The input record plus "prototype", "contextualized", "fills" and
// "unfilled" per entry and "placeholder_stats" per frame.
nlohmann::json AlignedToJson(const FrameRecord &record, const AlignedFrame &aligned);

std::string ReadFile(const std::string &path);
// Writes to a temporary file in the same directory, then renames it.
void WriteFileAtomic(const std::string &path, const std::string &content);

}  // namespace qaframe

#endif  // QAFRAME_CORPUS_IO_H_
