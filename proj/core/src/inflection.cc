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

#include "qaframe/inflection.h"

#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qaframe/errors.h"

#ifndef QAFRAME_DATA_DIR
#define QAFRAME_DATA_DIR "data"
#endif

namespace qaframe {

namespace {

constexpr std::array<std::pair<VerbForm, std::string_view>, 5> kFormNames = {{
    {VerbForm::kStem, "stem"},
    {VerbForm::kPresent3sg, "present3sg"},
    {VerbForm::kPast, "past"},
    {VerbForm::kPastParticiple, "past-participle"},
    {VerbForm::kPresentParticiple, "present-participle"},
}};

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

int VowelGroups(std::string_view s) {
  int groups = 0;
  bool in_group = false;
  for (char c : s) {
    bool v = IsVowel(c) || (c == 'y' && in_group);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  return groups;
}

// Short monosyllables ending consonant-vowel-consonant double the final
// consonant: stop -> stopped. w, x and y never double.
bool DoublesFinalConsonant(std::string_view s) {
  if (s.size() < 3) return false;
  char last = s[s.size() - 1];
  char mid = s[s.size() - 2];
  char first = s[s.size() - 3];
  if (IsVowel(last) || last == 'w' || last == 'x' || last == 'y') return false;
  if (!IsVowel(mid) || IsVowel(first)) return false;
  return VowelGroups(s) == 1;
}

bool ConsonantY(std::string_view s) {
  return s.size() >= 2 && s.back() == 'y' && !IsVowel(s[s.size() - 2]);
}

}  // namespace

std::string_view VerbFormName(VerbForm form) {
  for (const auto &[f, name] : kFormNames) {
    if (f == form) return name;
  }
  return "stem";
}

std::optional<VerbForm> VerbFormFromName(std::string_view name) {
  for (const auto &[f, n] : kFormNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

const std::string &VerbInflections::Get(VerbForm form) const {
  switch (form) {
    case VerbForm::kStem: return stem;
    case VerbForm::kPresent3sg: return present3sg;
    case VerbForm::kPast: return past;
    case VerbForm::kPastParticiple: return past_participle;
    case VerbForm::kPresentParticiple: return present_participle;
  }
  return stem;
}

VerbInflections RegularInflections(std::string_view lemma) {
  std::string stem(lemma);
  VerbInflections out;
  out.stem = stem;

  if (ConsonantY(stem)) {
    out.present3sg = stem.substr(0, stem.size() - 1) + "ies";
  } else if (EndsWith(stem, "s") || EndsWith(stem, "x") ||
             EndsWith(stem, "z") || EndsWith(stem, "ch") ||
             EndsWith(stem, "sh") || EndsWith(stem, "o")) {
    out.present3sg = stem + "es";
  } else {
    out.present3sg = stem + "s";
  }

  if (EndsWith(stem, "e")) {
    out.past = stem + "d";
  } else if (ConsonantY(stem)) {
    out.past = stem.substr(0, stem.size() - 1) + "ied";
  } else if (DoublesFinalConsonant(stem)) {
    out.past = stem + stem.back() + "ed";
  } else {
    out.past = stem + "ed";
  }
  out.past_participle = out.past;

  if (EndsWith(stem, "ie")) {
    out.present_participle = stem.substr(0, stem.size() - 2) + "ying";
  } else if (EndsWith(stem, "e") && !EndsWith(stem, "ee") &&
             !EndsWith(stem, "ye") && !EndsWith(stem, "oe") && stem.size() > 2) {
    out.present_participle = stem.substr(0, stem.size() - 1) + "ing";
  } else if (DoublesFinalConsonant(stem)) {
    out.present_participle = stem + stem.back() + "ing";
  } else {
    out.present_participle = stem + "ing";
  }
  return out;
}

InflectionLexicon InflectionLexicon::Parse(std::istream &in,
                                           const std::string &source) {
  InflectionLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t')) cols.push_back(col);
    bool ok = cols.size() == 5;
    for (const auto &c : cols) ok = ok && !c.empty();
    if (!ok) {
      throw Error(ErrorKind::kFormat,
                  source + ":" + std::to_string(line_no) +
                      ": expected 5 nonempty tab-separated verb forms");
    }
    lexicon.Add({cols[0], cols[1], cols[2], cols[3], cols[4]});
  }
  return lexicon;
}

InflectionLexicon InflectionLexicon::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open inflection lexicon " + path);
  return Parse(in, path);
}

const InflectionLexicon &InflectionLexicon::Default() {
  static const InflectionLexicon lexicon =
      Load(DataDirectory() + "/inflections.tsv");
  return lexicon;
}

void InflectionLexicon::Add(VerbInflections forms) {
  if (by_stem_.count(forms.stem)) return;  // first entry wins
  size_t index = entries_.size();
  by_stem_.emplace(forms.stem, index);
  for (const auto &[form, name] : kFormNames) {
    auto &readings = by_surface_[forms.Get(form)];
    readings.push_back({forms.stem, form});
  }
  entries_.push_back(std::move(forms));
}

const VerbInflections *InflectionLexicon::Find(std::string_view stem) const {
  auto it = by_stem_.find(std::string(stem));
  if (it == by_stem_.end()) return nullptr;
  return &entries_[it->second];
}

InflectionResult InflectionLexicon::Inflect(std::string_view lemma) const {
  if (lemma.empty()) throw Error(ErrorKind::kFormat, "empty verb lemma");
  if (const VerbInflections *hit = Find(lemma)) return {*hit, false};
  return {RegularInflections(lemma), true};
}

std::vector<VerbAnalysis> InflectionLexicon::Analyze(
    std::string_view surface) const {
  auto it = by_surface_.find(std::string(surface));
  if (it == by_surface_.end()) return {};
  return it->second;
}

std::string DataDirectory() {
  if (const char *env = std::getenv("QAFRAME_DATA_DIR")) return env;
  return QAFRAME_DATA_DIR;
}

}  // namespace qaframe
