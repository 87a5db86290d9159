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

#include "qaframe/corpus_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "qaframe/errors.h"

namespace qaframe {

namespace {

using nlohmann::json;

const json &Field(const json &j, const char *name) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorKind::kFormat, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::string StringField(const json &j, const char *name) {
  const json &v = Field(j, name);
  if (!v.is_string()) {
    throw Error(ErrorKind::kFormat, std::string("field \"") + name + "\" must be a string");
  }
  return v.get<std::string>();
}

int IntField(const json &j, const char *name) {
  const json &v = Field(j, name);
  if (!v.is_number_integer()) {
    throw Error(ErrorKind::kFormat, std::string("field \"") + name + "\" must be an integer");
  }
  return v.get<int>();
}

std::vector<std::string> Tokens(const json &j) {
  const json &v = Field(j, "tokens");
  if (!v.is_array() || v.empty()) {
    throw Error(ErrorKind::kFormat, "\"tokens\" must be a non-empty array");
  }
  std::vector<std::string> tokens;
  for (const json &t : v) {
    if (!t.is_string() || t.get<std::string>().empty()) {
      throw Error(ErrorKind::kFormat, "tokens must be non-empty strings");
    }
    tokens.push_back(t.get<std::string>());
  }
  return tokens;
}

Predicate ParsePredicate(const json &j, size_t num_tokens) {
  const json &p = Field(j, "predicate");
  Predicate pred;
  pred.index = IntField(p, "index");
  pred.lemma = StringField(p, "lemma");
  if (p.contains("sense") && !p["sense"].is_null()) pred.sense = StringField(p, "sense");
  if (pred.index < 0 || pred.index >= static_cast<int>(num_tokens)) {
    throw Error(ErrorKind::kFormat, "predicate index out of range");
  }
  if (pred.lemma.empty()) throw Error(ErrorKind::kFormat, "empty predicate lemma");
  return pred;
}

Span ParseSpan(const json &j, size_t num_tokens) {
  Span s{IntField(j, "start"), IntField(j, "end")};
  if (!SpanWithin(s, num_tokens) || s.size() == 0) {
    throw Error(ErrorKind::kFormat, "span [" + std::to_string(s.start) + "," +
                                        std::to_string(s.end) + ") out of range");
  }
  return s;
}

json PredicateJson(const Predicate &p) {
  json j = {{"index", p.index}, {"lemma", p.lemma}};
  if (!p.sense.empty()) j["sense"] = p.sense;
  return j;
}

template <typename T, typename ParseFn>
std::vector<T> ReadJsonl(std::istream &in, const std::string &source, ParseFn parse) {
  std::vector<T> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::kFormat, where + "invalid JSON");
    try {
      out.push_back(parse(j, line_no));
    } catch (const Error &e) {
      throw Error(e.kind(), where + e.what());
    } catch (const json::exception &e) {
      throw Error(ErrorKind::kFormat, where + e.what());
    }
  }
  return out;
}

}  // namespace

FrameRecord ParseFrameRecord(const json &j, const InflectionLexicon &lexicon) {
  FrameRecord rec;
  rec.raw = j;
  Frame &f = rec.frame;
  f.sentence_id = StringField(j, "sentence_id");
  f.tokens = Tokens(j);
  f.predicate = ParsePredicate(j, f.tokens.size());
  const json &entries = Field(j, "entries");
  if (!entries.is_array()) throw Error(ErrorKind::kFormat, "\"entries\" must be an array");
  for (size_t i = 0; i < entries.size(); ++i) {
    const json &e = entries[i];
    const json &slots = Field(e, "slots");
    if (!slots.is_object()) throw Error(ErrorKind::kFormat, "\"slots\" must be an object");
    auto slot = [&](const char *name) -> std::string {
      if (!slots.contains(name) || slots[name].is_null()) return "";
      return StringField(slots, name);
    };
    SlotRecord record{slot("wh"),  slot("aux"),       slot("subj"), slot("verb"),
                      slot("verb_form"), slot("obj"), slot("prep"), slot("misc")};
    QaEntry entry;
    try {
      entry.question = ParseSlots(record, lexicon);
    } catch (const Error &err) {
      throw Error(err.kind(), "entry " + std::to_string(i) + ": " + err.what());
    }
    const json &answers = Field(e, "answers");
    if (!answers.is_array()) throw Error(ErrorKind::kFormat, "\"answers\" must be an array");
    for (const json &a : answers) entry.answers.push_back(ParseSpan(a, f.tokens.size()));
    f.entries.push_back(std::move(entry));
  }
  ValidateFrame(f);
  if (j.contains("srl")) {
    const json &srl = j["srl"];
    if (!srl.is_array()) throw Error(ErrorKind::kFormat, "\"srl\" must be an array");
    std::vector<SrlArgument> args;
    for (const json &a : srl) {
      args.push_back({NormalizeRole(StringField(a, "role")), ParseSpan(a, f.tokens.size())});
    }
    rec.srl = std::move(args);
  }
  return rec;
}

std::vector<FrameRecord> ReadFrames(std::istream &in, const std::string &source,
                                    const InflectionLexicon &lexicon) {
  return ReadJsonl<FrameRecord>(in, source, [&](const json &j, int line) {
    FrameRecord rec = ParseFrameRecord(j, lexicon);
    rec.line = line;
    return rec;
  });
}

json FrameToJson(const Frame &frame, const InflectionLexicon &lexicon) {
  json entries = json::array();
  for (const QaEntry &e : frame.entries) {
    SlotRecord r = ToRecord(e.question, lexicon);
    json answers = json::array();
    for (Span s : e.answers) answers.push_back({{"start", s.start}, {"end", s.end}});
    entries.push_back({{"slots",
                        {{"wh", r.wh},
                         {"aux", r.aux},
                         {"subj", r.subj},
                         {"verb", r.verb},
                         {"verb_form", r.verb_form},
                         {"obj", r.obj},
                         {"prep", r.prep},
                         {"misc", r.misc}}},
                       {"answers", answers}});
  }
  return {{"sentence_id", frame.sentence_id},
          {"tokens", frame.tokens},
          {"predicate", PredicateJson(frame.predicate)},
          {"entries", entries}};
}

GoldInstance ParseGoldInstance(const json &j) {
  GoldInstance g;
  g.sentence_id = StringField(j, "sentence_id");
  g.tokens = Tokens(j);
  g.predicate = ParsePredicate(j, g.tokens.size());
  const json &args = Field(j, "arguments");
  if (!args.is_array()) throw Error(ErrorKind::kFormat, "\"arguments\" must be an array");
  for (const json &a : args) {
    g.arguments.push_back({NormalizeRole(StringField(a, "role")), ParseSpan(a, g.tokens.size())});
  }
  return g;
}

std::vector<GoldInstance> ReadGold(std::istream &in, const std::string &source) {
  return ReadJsonl<GoldInstance>(in, source,
                                 [](const json &j, int) { return ParseGoldInstance(j); });
}

json GoldToJson(const GoldInstance &g) {
  json args = json::array();
  for (const GoldArgument &a : g.arguments) {
    args.push_back({{"role", a.role}, {"start", a.span.start}, {"end", a.span.end}});
  }
  return {{"sentence_id", g.sentence_id},
          {"tokens", g.tokens},
          {"predicate", PredicateJson(g.predicate)},
          {"arguments", args}};
}

json AlignedToJson(const FrameRecord &record, const AlignedFrame &aligned) {
  json out = record.raw;
  const Frame &f = record.frame;
  for (size_t i = 0; i < aligned.entries.size(); ++i) {
    const AlignedEntry &a = aligned.entries[i];
    json fills = json::array();
    for (const Fill &fill : a.fills) {
      fills.push_back({{"slot", SlotName(fill.slot)},
                       {"source_entry", fill.source_entry},
                       {"answer_index", fill.answer_index},
                       {"start", fill.span.start},
                       {"end", fill.span.end},
                       {"text", Decapitalize(fill.span, f.tokens)},
                       {"rule", FillRuleName(fill.rule)}});
    }
    json &e = out["entries"][i];
    e["prototype"] = a.prototype;
    e["contextualized"] = a.contextualized;
    e["fills"] = fills;
    e["unfilled"] = a.unfilled;
    e["reading"] = DescribeReading(aligned.resolutions[i].reading);
    e["resolution"] = ResolutionRuleName(aligned.resolutions[i].rule);
    if (a.agreement_fixed) e["agreement_fixed"] = true;
    if (a.agreement_fallback) e["agreement_fallback"] = true;
  }
  out["placeholder_stats"] = {{"total", aligned.stats.total},
                              {"filled_base", aligned.stats.filled_base},
                              {"filled_with_extras", aligned.stats.filled_with_extras}};
  return out;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::string &path, const std::string &content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error(ErrorKind::kIo, "write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::kIo, "cannot rename onto " + path);
  }
}

}  // namespace qaframe
