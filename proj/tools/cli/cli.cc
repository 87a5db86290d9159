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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qaframe/backend.h"
#include "qaframe/corpus_io.h"
#include "qaframe/declarative.h"
#include "qaframe/errors.h"
#include "qaframe/framealign.h"
#include "qaframe/inflection.h"
#include "qaframe/pipeline.h"
#include "qaframe/prototype.h"
#include "qaframe/qgrammar.h"
#include "qaframe/selection.h"
#include "qaframe/text.h"

namespace qaframe::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string inflections;
  int verbose = 0;
  std::string backend;
  int timeout_ms = static_cast<int>(kDefaultBackendTimeout.count());
  int workers = 0;
};

const InflectionLexicon &LoadInflections(const Common &c,
                                         std::unique_ptr<InflectionLexicon> &holder) {
  if (c.inflections.empty()) return InflectionLexicon::Default();
  holder = std::make_unique<InflectionLexicon>(InflectionLexicon::Load(c.inflections));
  return *holder;
}

int Workers(const Common &c) {
  if (c.workers > 0) return c.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::shared_ptr<BackendConnection> Connect(const Common &c) {
  return BackendConnection::SpawnShell(c.backend, std::chrono::milliseconds(c.timeout_ms));
}

std::vector<std::string> ReadLines(const std::string &path) {
  std::istringstream in(ReadFile(path));
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!CollapseSpaces(line).empty()) lines.push_back(line);
  }
  return lines;
}

std::string Percent(int part, int whole) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", whole == 0 ? 0.0 : 100.0 * part / whole);
  return buf;
}

// --- parse / prototype / readings -----------------------------------------

struct QuestionArgs {
  std::vector<std::string> questions;
  std::string in;
};

std::vector<std::string> Questions(const QuestionArgs &a) {
  std::vector<std::string> qs = a.questions;
  if (!a.in.empty()) {
    for (std::string &l : ReadLines(a.in)) qs.push_back(std::move(l));
  }
  if (qs.empty()) throw CLI::ValidationError("give --question or --in");
  return qs;
}

void RunParse(const Common &c, const QuestionArgs &a, std::ostream &out) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  bool first = true;
  for (const std::string &text : Questions(a)) {
    SlotQuestion q = ParseSurface(text, lex);
    SlotRecord r = ToRecord(q, lex);
    if (!first) out << '\n';
    first = false;
    out << "WH\t" << r.wh << "\nAUX\t" << r.aux << "\nSUBJ\t" << r.subj << "\nVERB\t" << r.verb
        << "\nVERB_FORM\t" << r.verb_form << "\nOBJ\t" << r.obj << "\nPREP\t" << r.prep
        << "\nMISC\t" << r.misc << "\nTAMVN\t" << DescribeSignature(DecomposeTamvn(q)) << '\n';
  }
}

void RunPrototype(const Common &c, const QuestionArgs &a, std::ostream &out) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  for (const std::string &text : Questions(a)) {
    out << Render(ToPrototype(ParseSurface(text, lex)), lex) << '\n';
  }
}

void RunReadings(const Common &c, const QuestionArgs &a, std::ostream &out) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  std::vector<SlotQuestion> qs;
  for (const std::string &text : Questions(a)) qs.push_back(ParseSurface(text, lex));
  std::vector<Resolution> resolved = ResolveFrame(qs);
  for (size_t i = 0; i < qs.size(); ++i) {
    out << Render(qs[i], lex) << '\n';
    for (const DeclarativeReading &r : EnumerateReadings(qs[i])) {
      out << "  reading\t" << DescribeReading(r) << '\n';
    }
    const Resolution &res = resolved[i];
    out << "  resolved\t" << DescribeReading(res.reading) << "\t" << ResolutionRuleName(res.rule)
        << "\tsupport=" << res.support << (res.flagged() ? "\tflagged" : "") << '\n';
  }
}

// --- align / stats --------------------------------------------------------

struct AlignArgs {
  std::string in;
  std::string out;
  std::string seq2seq;
  std::string stats;
  std::string extras = "on";
};

struct CorpusStats {
  int frames = 0;
  int entries = 0;
  PlaceholderStats placeholders;
  std::map<std::string, int> rules;
  int flagged_resolutions = 0;
  int agreement_fixed = 0;
  int agreement_fallback = 0;

  json ToJson() const {
    return {{"frames", frames},
            {"entries", entries},
            {"placeholders", placeholders.total},
            {"filled_base", placeholders.filled_base},
            {"filled_with_extras", placeholders.filled_with_extras},
            {"rules", rules},
            {"flagged_resolutions", flagged_resolutions},
            {"agreement_fixed", agreement_fixed},
            {"agreement_fallback", agreement_fallback}};
  }
};

void AddFrame(CorpusStats &s, const AlignedFrame &a) {
  ++s.frames;
  s.entries += static_cast<int>(a.entries.size());
  s.placeholders += a.stats;
  for (const AlignedEntry &e : a.entries) {
    for (const Fill &f : e.fills) ++s.rules[std::string(FillRuleName(f.rule))];
    s.agreement_fixed += e.agreement_fixed;
    s.agreement_fallback += e.agreement_fallback;
  }
  for (const Resolution &r : a.resolutions) s.flagged_resolutions += r.flagged();
}

void PrintStats(const CorpusStats &s, std::ostream &out) {
  const int total = s.placeholders.total;
  char line[160];
  auto print = [&](const std::string &name, int value, const std::string &note) {
    std::snprintf(line, sizeof(line), "%-26s %8d", name.c_str(), value);
    out << line;
    if (!note.empty()) out << "  " << note;
    out << '\n';
  };
  print("frames", s.frames, "");
  print("entries", s.entries, "");
  print("placeholders", total, "");
  print("filled (base)", s.placeholders.filled_base, Percent(s.placeholders.filled_base, total));
  print("filled (with extras)", s.placeholders.filled_with_extras,
        Percent(s.placeholders.filled_with_extras, total));
  for (const auto &[rule, n] : s.rules) print("rule " + rule, n, "");
  print("flagged resolutions", s.flagged_resolutions, "");
  print("agreement fixed", s.agreement_fixed, "");
  print("agreement fallback", s.agreement_fallback, "");
  out << "summary " << s.ToJson().dump() << '\n';
}

bool ParseOnOff(const std::string &v) { return v == "on"; }

std::vector<AlignedFrame> AlignAll(const std::vector<FrameRecord> &records,
                                   const InflectionLexicon &lex, const Common &c, bool extras) {
  std::vector<AlignedFrame> out(records.size());
  std::atomic<size_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  auto run = [&] {
    try {
      std::unique_ptr<AgreementChooser> chooser;
      if (!c.backend.empty()) chooser = std::make_unique<BackendAgreementChooser>(Connect(c));
      AlignOptions opts{extras, chooser.get()};
      for (size_t i = next++; i < records.size(); i = next++) {
        out[i] = BuildFrameAligned(records[i].frame, lex, opts);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (!error) error = std::current_exception();
      next = records.size();
    }
  };
  const int workers = std::min<int>(Workers(c), std::max<size_t>(1, records.size()));
  if (workers <= 1) {
    run();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < workers; ++i) threads.emplace_back(run);
    for (auto &t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<FrameRecord> LoadFrames(const std::string &path, const InflectionLexicon &lex) {
  std::istringstream in(ReadFile(path));
  return ReadFrames(in, path, lex);
}

void RunAlign(const Common &c, const AlignArgs &a, std::ostream &out) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  std::vector<FrameRecord> records = LoadFrames(a.in, lex);
  std::vector<AlignedFrame> aligned = AlignAll(records, lex, c, ParseOnOff(a.extras));

  std::string jsonl, tsv;
  CorpusStats stats;
  for (size_t i = 0; i < records.size(); ++i) {
    jsonl += AlignedToJson(records[i], aligned[i]).dump() + "\n";
    AddFrame(stats, aligned[i]);
    for (size_t e = 0; e < aligned[i].entries.size(); ++e) {
      Seq2SeqExample ex =
          BuildSeq2SeqExample(records[i].frame, e, aligned[i].entries[e].contextualized, lex);
      tsv += ex.input + "\t" + ex.target + "\n";
    }
  }
  WriteFileAtomic(a.out, jsonl);
  if (!a.seq2seq.empty()) WriteFileAtomic(a.seq2seq, tsv);
  if (!a.stats.empty()) WriteFileAtomic(a.stats, stats.ToJson().dump() + "\n");
  PrintStats(stats, out);
}

struct StatsArgs {
  std::string in;
  std::string extras = "on";
  std::string lexicon;
  std::string gold;
};

void RunStats(const Common &c, const StatsArgs &a, std::ostream &out) {
  if (a.in.empty() && a.lexicon.empty()) {
    throw CLI::ValidationError("give --in, or --lexicon with --gold");
  }
  if (!a.in.empty()) {
    std::unique_ptr<InflectionLexicon> holder;
    const InflectionLexicon &lex = LoadInflections(c, holder);
    std::vector<FrameRecord> records = LoadFrames(a.in, lex);
    std::vector<AlignedFrame> aligned = AlignAll(records, lex, c, ParseOnOff(a.extras));
    CorpusStats stats;
    for (const AlignedFrame &f : aligned) AddFrame(stats, f);
    PrintStats(stats, out);
  }
  if (!a.lexicon.empty()) {
    if (a.gold.empty()) throw CLI::ValidationError("--lexicon needs --gold");
    std::istringstream lin(ReadFile(a.lexicon));
    RoleLexicon lexicon = RoleLexicon::Read(lin, a.lexicon);
    std::istringstream gin(ReadFile(a.gold));
    Coverage cov = ComputeCoverage(lexicon, ReadGold(gin, a.gold));
    out << "lexicon entries            " << lexicon.size() << '\n'
        << "instances covered          " << cov.instances_covered << " / "
        << cov.instances_total << "  " << Percent(cov.instances_covered, cov.instances_total)
        << '\n';
    out << "summary "
        << json{{"entries", lexicon.size()},
                {"instances_total", cov.instances_total},
                {"instances_covered", cov.instances_covered}}
               .dump()
        << '\n';
  }
}

// --- candidates / build-lexicon -------------------------------------------

struct CandidatesArgs {
  std::string in;
  std::string out;
  double iou = kDefaultIouThreshold;
};

void RunCandidates(const Common &c, const CandidatesArgs &a, std::ostream &out) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  std::vector<FrameRecord> records = LoadFrames(a.in, lex);
  std::vector<JointRecord> joint;
  int without_srl = 0;
  for (const FrameRecord &r : records) {
    if (!r.srl) {
      ++without_srl;
      continue;
    }
    for (JointRecord &j : AlignQaToSrl(r.frame, r.frame.predicate.index, *r.srl, a.iou)) {
      joint.push_back(std::move(j));
    }
  }
  CandidateTable table = AggregateCandidates(joint, lex);
  std::ostringstream tsv;
  table.Write(tsv);
  WriteFileAtomic(a.out, tsv.str());
  out << "frames " << records.size() << " (without srl: " << without_srl << ")\n"
      << "joint records " << joint.size() << '\n'
      << "role keys " << table.Keys().size() << '\n';
}

struct LexiconArgs {
  std::string candidates;
  std::string gold;
  std::string out;
  double threshold = 0.5;
  uint64_t seed = kDefaultSeed;
  std::string oracle = "backend";
  std::string contextualizer = "fallback";
};

// Returns the gold answer; for checking the plumbing without a model.
class GoldOracle : public QaOracle {
 public:
  std::optional<std::string> Answer(const QaQuery &query) override { return query.gold; }
};

void RunBuildLexicon(const Common &c, const LexiconArgs &a, std::ostream &out,
                     std::ostream &err) {
  if ((a.oracle == "backend" || a.contextualizer == "backend") && c.backend.empty()) {
    throw CLI::ValidationError("--backend is required for a backend oracle or contextualizer");
  }
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  std::istringstream cin_(ReadFile(a.candidates));
  CandidateTable table = CandidateTable::Read(cin_, a.candidates);
  std::istringstream gin(ReadFile(a.gold));
  std::vector<GoldInstance> gold = ReadGold(gin, a.gold);

  std::mutex conns_mu;
  std::vector<std::shared_ptr<BackendConnection>> conns;
  WorkerFactory factory = [&]() {
    SelectionWorker w;
    std::shared_ptr<BackendConnection> conn;
    if (!c.backend.empty()) {
      conn = Connect(c);
      std::lock_guard<std::mutex> lock(conns_mu);
      conns.push_back(conn);
    }
    if (a.oracle == "backend") {
      w.oracle = std::make_unique<BackendQaOracle>(conn);
    } else {
      w.oracle = std::make_unique<GoldOracle>();
    }
    std::shared_ptr<ContextualizerBackend> ctx;
    if (a.contextualizer == "backend") ctx = std::make_shared<BackendContextualizer>(conn);
    w.contextualize = [&lex, ctx](const std::string &prototype, const ArgumentSample &s) {
      SlotQuestion q = ParseSurface(prototype, lex);
      q.verb_lemma = s.predicate.lemma;
      RoleQuestionRequest req{s.tokens, s.predicate, s.role, std::nullopt, {}};
      ContextualizedQuestion cq = Contextualize(q, req, lex, {ctx.get(), nullptr});
      if (cq.backend_failed) throw Error(ErrorKind::kBackend, "contextualizer unavailable");
      return cq.text;
    };
    return w;
  };
  LexiconOptions opts{a.threshold, a.seed, Workers(c)};
  LexiconBuild build = BuildAndFilterLexicon(table, gold, factory, opts);
  for (const auto &conn : conns) {
    if (conn->broken()) {
      throw Error(ErrorKind::kBackend, "backend connection failed during the lexicon build");
    }
  }
  std::ostringstream tsv;
  build.lexicon.Write(tsv);
  WriteFileAtomic(a.out, tsv.str());
  if (c.verbose > 0) {
    for (const LexiconEntry &e : build.dropped) {
      err << "dropped " << e.lemma << "." << e.sense << " " << e.role << " \"" << e.prototype
          << "\" mean_f1=" << *e.mean_f1 << '\n';
    }
    for (const LexiconEntry &e : build.flagged) {
      err << "flagged " << e.lemma << "." << e.sense << " " << e.role
          << ": samples failed and scored 0\n";
    }
  }
  out << "entries kept " << build.lexicon.size() << ", dropped " << build.dropped.size()
      << ", flagged " << build.flagged.size() << '\n'
      << "instances covered " << build.coverage.instances_covered << " / "
      << build.coverage.instances_total << "  "
      << Percent(build.coverage.instances_covered, build.coverage.instances_total) << '\n'
      << "summary "
      << json{{"kept", build.lexicon.size()},
              {"dropped", build.dropped.size()},
              {"flagged", build.flagged.size()},
              {"instances_total", build.coverage.instances_total},
              {"instances_covered", build.coverage.instances_covered}}
             .dump()
      << '\n';
}

// --- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string lexicon;
  std::string inventory;
  std::string sentence;
  int pred_index = -1;
  std::string lemma;
  std::string sense;
  std::vector<std::string> roles;
  bool all_roles = false;
  std::vector<std::string> adjuncts;
  std::vector<std::string> fills;
  std::string batch;
  std::string out;
};

std::map<Slot, Span> ParseFills(const std::vector<std::string> &specs) {
  std::map<Slot, Span> fills;
  for (const std::string &spec : specs) {
    size_t eq = spec.find('='), colon = spec.find(':');
    std::optional<Slot> slot;
    Span span;
    if (eq != std::string::npos && colon != std::string::npos && colon > eq) {
      slot = SlotFromName(spec.substr(0, eq));
      try {
        span = {std::stoi(spec.substr(eq + 1, colon - eq - 1)), std::stoi(spec.substr(colon + 1))};
      } catch (const std::exception &) {
        slot.reset();
      }
    }
    if (!slot) throw CLI::ValidationError("--fill expects SLOT=START:END, got '" + spec + "'");
    fills[*slot] = span;
  }
  return fills;
}

std::map<Slot, Span> FillsFromJson(const json &j) {
  std::map<Slot, Span> fills;
  if (!j.contains("fills")) return fills;
  for (const auto &[name, span] : j["fills"].items()) {
    std::optional<Slot> slot = SlotFromName(name);
    if (!slot) throw Error(ErrorKind::kFormat, "unknown fill slot '" + name + "'");
    fills[*slot] = {span.at("start").get<int>(), span.at("end").get<int>()};
  }
  return fills;
}

std::vector<std::string> NormalizeRoles(const std::vector<std::string> &roles) {
  std::vector<std::string> out;
  for (const std::string &r : roles) out.push_back(NormalizeRole(r));
  return out;
}

void RunGenerate(const Common &c, const GenerateArgs &a, std::ostream &out, std::ostream &err) {
  std::unique_ptr<InflectionLexicon> holder;
  const InflectionLexicon &lex = LoadInflections(c, holder);
  std::istringstream lin(ReadFile(a.lexicon));
  RoleLexicon lexicon = RoleLexicon::Read(lin, a.lexicon);
  RoleInventory inventory;
  if (!a.inventory.empty()) {
    std::istringstream iin(ReadFile(a.inventory));
    inventory = RoleInventory::Read(iin, a.inventory);
  }
  std::vector<std::string> adjuncts =
      a.adjuncts.empty() ? DefaultAdjunctRoles() : NormalizeRoles(a.adjuncts);

  std::shared_ptr<BackendConnection> conn;
  std::unique_ptr<BackendContextualizer> ctx;
  std::unique_ptr<BackendAgreementChooser> chooser;
  if (!c.backend.empty()) {
    conn = Connect(c);
    ctx = std::make_unique<BackendContextualizer>(conn);
    chooser = std::make_unique<BackendAgreementChooser>(conn);
  }
  ContextualizeOptions opts{ctx.get(), chooser.get()};

  auto roles_for = [&](const Predicate &p, const std::vector<std::string> &explicit_roles,
                       bool all) {
    if (!all) return NormalizeRoles(explicit_roles);
    if (a.inventory.empty()) {
      throw CLI::ValidationError("--all-roles needs --inventory for the core roles");
    }
    return RolesFor(inventory, p, adjuncts);
  };
  auto report = [&](const RoleQuestions &rq, const std::string &where) {
    for (const std::string &m : rq.missing) err << where << "missing prototype for " << m << '\n';
    for (const auto &[r1, r2] : rq.duplicates) {
      err << where << "duplicate question for " << r1 << " and " << r2 << '\n';
    }
    if (c.verbose > 0) {
      for (const RoleQuestion &q : rq.questions) {
        if (q.backend_failed) err << where << q.role << ": backend failed, used fallback\n";
      }
    }
  };

  if (a.batch.empty()) {
    if (a.sentence.empty() || a.pred_index < 0 || a.lemma.empty()) {
      throw CLI::ValidationError("give --sentence, --pred-index and --lemma, or --batch");
    }
    if (!a.all_roles && a.roles.empty()) throw CLI::ValidationError("give --role or --all-roles");
    RoleQuestionRequest req;
    req.tokens = SplitWhitespace(a.sentence);
    req.predicate = {a.pred_index, a.lemma, a.sense};
    req.fills = ParseFills(a.fills);
    ValidateRequest(req);
    RoleQuestions rq = GenerateRoleQuestions(req, lexicon, roles_for(req.predicate, a.roles,
                                                                     a.all_roles),
                                             lex, opts);
    std::string text;
    for (const RoleQuestion &q : rq.questions) text += q.role + "\t" + q.question + "\n";
    if (a.out.empty()) {
      out << text;
    } else {
      WriteFileAtomic(a.out, text);
    }
    report(rq, "");
    return;
  }

  std::istringstream in(ReadFile(a.batch));
  std::string line, result;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (CollapseSpaces(line).empty()) continue;
    const std::string where = a.batch + ":" + std::to_string(line_no) + ": ";
    RoleQuestions rq;
    json rec;
    try {
      json j = json::parse(line);
      RoleQuestionRequest req;
      for (const auto &t : j.at("tokens")) req.tokens.push_back(t.get<std::string>());
      const json &p = j.at("predicate");
      req.predicate = {p.at("index").get<int>(), p.at("lemma").get<std::string>(),
                       p.value("sense", std::string())};
      req.fills = FillsFromJson(j);
      ValidateRequest(req);
      std::vector<std::string> roles;
      if (j.contains("roles")) {
        roles = NormalizeRoles(j["roles"].get<std::vector<std::string>>());
      } else {
        roles = roles_for(req.predicate, {}, true);
      }
      rq = GenerateRoleQuestions(req, lexicon, roles, lex, opts);
      rec["sentence_id"] = j.value("sentence_id", std::string());
    } catch (const json::exception &e) {
      throw Error(ErrorKind::kFormat, where + e.what());
    } catch (const Error &e) {
      throw Error(e.kind(), where + e.what());
    }
    json qs = json::array();
    for (const RoleQuestion &q : rq.questions) {
      qs.push_back({{"role", q.role},
                    {"prototype", q.prototype},
                    {"question", q.question},
                    {"match", LookupMatchName(q.match)}});
    }
    rec["questions"] = qs;
    rec["missing"] = rq.missing;
    json dups = json::array();
    for (const auto &[r1, r2] : rq.duplicates) dups.push_back({r1, r2});
    rec["duplicates"] = dups;
    result += rec.dump() + "\n";
    report(rq, where);
  }
  if (a.out.empty()) {
    out << result;
  } else {
    WriteFileAtomic(a.out, result);
  }
}

int ExitCodeFor(ErrorKind kind) {
  return kind == ErrorKind::kBackend ? kBackendFailure : kData;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Role question generation over QA-SRL style question grammars", "qaframe"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App *sub, bool backend, bool workers) {
    sub->add_option("--inflections", common.inflections,
                    "Verb inflection TSV (default: bundled lexicon)")
        ->check(CLI::ExistingFile);
    sub->add_flag("-v,--verbose", common.verbose, "Report warnings on stderr");
    if (backend) {
      sub->add_option("--backend", common.backend,
                      "Backend command speaking the line protocol on stdin/stdout");
      sub->add_option("--timeout-ms", common.timeout_ms, "Backend reply timeout")
          ->check(CLI::PositiveNumber);
    }
    if (workers) {
      sub->add_option("--workers", common.workers, "Worker threads (default: all processors)")
          ->check(CLI::NonNegativeNumber);
    }
  };
  auto add_questions = [](CLI::App *sub, QuestionArgs &a) {
    sub->add_option("-q,--question", a.questions, "Question text (repeatable)");
    sub->add_option("--in", a.in, "File with one question per line")->check(CLI::ExistingFile);
  };

  QuestionArgs parse_args, proto_args, readings_args;
  CLI::App *parse = app.add_subcommand("parse", "Show the slots and TAMVN of questions");
  add_questions(parse, parse_args);
  add_common(parse, false, false);
  CLI::App *proto = app.add_subcommand("prototype", "Print the prototype of questions");
  add_questions(proto, proto_args);
  add_common(proto, false, false);
  CLI::App *readings =
      app.add_subcommand("readings", "List declarative readings of a frame's questions");
  add_questions(readings, readings_args);
  add_common(readings, false, false);

  AlignArgs align_args;
  CLI::App *align = app.add_subcommand("align", "Fill placeholders across a frames corpus");
  align->add_option("--in", align_args.in, "Frames JSONL")->required()->check(CLI::ExistingFile);
  align->add_option("--out", align_args.out, "Aligned JSONL output")->required();
  align->add_option("--seq2seq", align_args.seq2seq, "Seq2seq TSV output (input<TAB>target)");
  align->add_option("--stats", align_args.stats, "Stats JSON output");
  align->add_option("--extras", align_args.extras, "Extra correspondences")
      ->check(CLI::IsMember({"on", "off"}));
  add_common(align, true, true);

  StatsArgs stats_args;
  CLI::App *stats = app.add_subcommand("stats", "Placeholder and lexicon coverage report");
  stats->add_option("--in", stats_args.in, "Frames JSONL")->check(CLI::ExistingFile);
  stats->add_option("--extras", stats_args.extras, "Extra correspondences")
      ->check(CLI::IsMember({"on", "off"}));
  stats->add_option("--lexicon", stats_args.lexicon, "Role lexicon TSV")
      ->check(CLI::ExistingFile);
  stats->add_option("--gold", stats_args.gold, "Gold argument JSONL")->check(CLI::ExistingFile);
  add_common(stats, true, true);

  CandidatesArgs cand_args;
  CLI::App *cand = app.add_subcommand(
      "candidates", "Aggregate prototype candidates from frames with SRL arguments");
  cand->add_option("--in", cand_args.in, "Frames JSONL with \"srl\"")
      ->required()
      ->check(CLI::ExistingFile);
  cand->add_option("--out", cand_args.out, "Candidate TSV output")->required();
  cand->add_option("--iou", cand_args.iou, "Minimum answer/argument IoU")
      ->check(CLI::Range(0.0, 1.0));
  add_common(cand, false, false);

  LexiconArgs lex_args;
  CLI::App *lex = app.add_subcommand("build-lexicon", "Select one prototype per role");
  lex->add_option("--candidates", lex_args.candidates, "Candidate TSV")
      ->required()
      ->check(CLI::ExistingFile);
  lex->add_option("--gold", lex_args.gold, "Gold argument JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  lex->add_option("--out", lex_args.out, "Role lexicon TSV output")->required();
  lex->add_option("--threshold", lex_args.threshold, "Minimum mean F1 to keep an entry")
      ->check(CLI::Range(0.0, 1.0));
  lex->add_option("--seed", lex_args.seed, "Sampling seed");
  lex->add_option("--oracle", lex_args.oracle, "QA oracle: backend, or gold (echoes the answer)")
      ->check(CLI::IsMember({"backend", "gold"}));
  lex->add_option("--contextualizer", lex_args.contextualizer, "fallback or backend")
      ->check(CLI::IsMember({"fallback", "backend"}));
  add_common(lex, true, true);

  GenerateArgs gen_args;
  CLI::App *gen = app.add_subcommand("generate", "Generate role questions for a predicate");
  gen->add_option("--lexicon", gen_args.lexicon, "Role lexicon TSV")
      ->required()
      ->check(CLI::ExistingFile);
  gen->add_option("--inventory", gen_args.inventory, "Role inventory TSV")
      ->check(CLI::ExistingFile);
  gen->add_option("--sentence", gen_args.sentence, "Whitespace-tokenized sentence");
  gen->add_option("--pred-index", gen_args.pred_index, "Predicate token index");
  gen->add_option("--lemma", gen_args.lemma, "Predicate lemma");
  gen->add_option("--sense", gen_args.sense, "Predicate sense");
  gen->add_option("--role", gen_args.roles, "Role label (repeatable)");
  gen->add_flag("--all-roles", gen_args.all_roles, "Core roles from the inventory plus adjuncts");
  gen->add_option("--adjuncts", gen_args.adjuncts, "Adjunct roles for --all-roles")
      ->delimiter(',');
  gen->add_option("--fill", gen_args.fills, "Placeholder filler SLOT=START:END (repeatable)");
  gen->add_option("--batch", gen_args.batch, "Request JSONL")->check(CLI::ExistingFile);
  gen->add_option("--out", gen_args.out, "Output file (default: stdout)");
  add_common(gen, true, false);

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*parse) RunParse(common, parse_args, out);
    else if (*proto) RunPrototype(common, proto_args, out);
    else if (*readings) RunReadings(common, readings_args, out);
    else if (*align) RunAlign(common, align_args, out);
    else if (*stats) RunStats(common, stats_args, out);
    else if (*cand) RunCandidates(common, cand_args, out);
    else if (*lex) RunBuildLexicon(common, lex_args, out, err);
    else if (*gen) RunGenerate(common, gen_args, out, err);
  } catch (const CLI::ValidationError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
  return kOk;
}

}  // namespace qaframe::cli
