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

#ifndef QAFRAME_INFLECTION_H_
#define QAFRAME_INFLECTION_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qaframe {

enum class VerbForm {
  kStem,
  kPresent3sg,
  kPast,
  kPastParticiple,
  kPresentParticiple,
};

// Tag names used in records and debug output: "stem", "present3sg", "past",
// "past-participle", "present-participle".
std::string_view VerbFormName(VerbForm form);
std::optional<VerbForm> VerbFormFromName(std::string_view name);

struct VerbInflections {
  std::string stem;
  std::string present3sg;
  std::string past;
  std::string past_participle;
  std::string present_participle;

  const std::string &Get(VerbForm form) const;
  bool operator==(const VerbInflections &) const = default;
};

// Result of Inflect(). `guessed` is set when the forms come from regular
// morphology rather than the lexicon.
struct InflectionResult {
  VerbInflections forms;
  bool guessed = false;
};

// One reading of a surface verb token.
struct VerbAnalysis {
  std::string lemma;
  VerbForm form;
};

// Regular English morphology for verbs the lexicon does not know.
VerbInflections RegularInflections(std::string_view lemma);

// Read-only table of verb inflections keyed by stem, with an inverse index
// from surface form to (lemma, form) readings.
class InflectionLexicon {
 public:
  InflectionLexicon() = default;

  // TSV: stem, present3sg, past, past_participle, present_participle.
  // Blank lines and lines starting with '#' are skipped. `source` names the
  // input in error messages.
  static InflectionLexicon Parse(std::istream &in,
                                 const std::string &source = "<stream>");
  static InflectionLexicon Load(const std::string &path);

  // Bundled lexicon from the installed data directory (or $QAFRAME_DATA_DIR).
  static const InflectionLexicon &Default();

  void Add(VerbInflections forms);

  const VerbInflections *Find(std::string_view stem) const;

  // Lexicon hit is returned verbatim; a miss falls back to regular
  // morphology. Throws on an empty lemma.
  InflectionResult Inflect(std::string_view lemma) const;

  // All readings of `surface`, in lexicon order.
  std::vector<VerbAnalysis> Analyze(std::string_view surface) const;

  size_t size() const { return entries_.size(); }

 private:
  std::vector<VerbInflections> entries_;
  std::unordered_map<std::string, size_t> by_stem_;
  std::unordered_map<std::string, std::vector<VerbAnalysis>> by_surface_;
};

// Directory holding bundled data files.
std::string DataDirectory();

}  // namespace qaframe

#endif  // QAFRAME_INFLECTION_H_
