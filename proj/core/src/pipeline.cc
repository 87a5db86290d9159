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

#include "qaframe/pipeline.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "qaframe/errors.h"
#include "qaframe/text.h"

namespace qaframe {

void ValidateRequest(const RoleQuestionRequest &request) {
  const int n = static_cast<int>(request.tokens.size());
  if (request.predicate.index < 0 || request.predicate.index >= n) {
    throw Error(ErrorKind::kFormat, "predicate index " +
                                        std::to_string(request.predicate.index) +
                                        " outside the sentence");
  }
  if (request.predicate.lemma.empty()) throw Error(ErrorKind::kFormat, "empty lemma");
  if (!request.role.empty() && !IsRoleLabel(request.role)) {
    throw Error(ErrorKind::kVocabulary, "unknown role label '" + request.role + "'");
  }
  for (const auto &[slot, span] : request.fills) {
    if (slot != Slot::kSubj && slot != Slot::kObj && slot != Slot::kMisc) {
      throw Error(ErrorKind::kFormat,
                  "fills apply to SUBJ, OBJ or MISC, not " + std::string(SlotName(slot)));
    }
    if (!SpanWithin(span, request.tokens.size()) || span.size() == 0) {
      throw Error(ErrorKind::kFormat, std::string(SlotName(slot)) + " fill span [" +
                                          std::to_string(span.start) + "," +
                                          std::to_string(span.end) + ") is invalid");
    }
  }
}

std::optional<PrototypeLookup> LookupPrototype(const RoleLexicon &lexicon,
                                               const std::string &lemma,
                                               const std::string &sense,
                                               const std::string &role,
                                               const InflectionLexicon &inflections) {
  std::optional<LexiconHit> hit = lexicon.Lookup(lemma, sense, role);
  if (!hit) return std::nullopt;
  PrototypeLookup out;
  out.prototype = ParseSurface(hit->entry->prototype, inflections);
  // Adjunct prototypes may be shared across predicates; re-anchor the verb.
  if (hit->match == LookupMatch::kGlobal) out.prototype.verb_lemma = lemma;
  out.text = Render(out.prototype, inflections);
  out.match = hit->match;
  return out;
}

namespace {

const std::set<std::string_view> kModals = {"will", "would", "can",  "could", "may",
                                            "might", "shall", "should", "must"};
const std::set<std::string_view> kDoForms = {"do", "does", "did"};
const std::set<std::string_view> kBeForms = {"be",  "am",   "is",   "are",
                                             "was", "were", "been", "being"};
const std::set<std::string_view> kHaveForms = {"have", "has", "had", "having"};
const std::set<std::string_view> kNegations = {"not", "never"};
const std::set<std::string_view> kAdverbs = {"just", "already", "still", "also",  "soon",
                                             "ever", "always",  "really", "then", "probably",
                                             "certainly", "finally", "all", "both"};

bool IsChainWord(const std::string &w) {
  return kModals.count(w) || kDoForms.count(w) || kBeForms.count(w) || kHaveForms.count(w);
}

// Splits clitics: "might've" -> might have, "won't" -> will not.
std::vector<std::string> ExpandToken(const std::string &raw, bool next_is_participle,
                                     const std::string &next) {
  const std::string t = ToLower(raw);
  auto ends = [&](std::string_view suffix) {
    return t.size() >= suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  auto stem = [&](size_t cut) { return t.substr(0, t.size() - cut); };
  if (t == "n't") return {"not"};
  if (t == "won't") return {"will", "not"};
  if (t == "can't") return {"can", "not"};
  if (t == "shan't") return {"shall", "not"};
  if (t == "cannot") return {"can", "not"};
  if (t == "wo" || t == "ca" || t == "sha") {
    // PTB splits won't into wo + n't.
    return {t == "wo" ? "will" : t == "ca" ? "can" : "shall"};
  }
  if (ends("n't")) return {stem(3), "not"};
  std::vector<std::string> out;
  auto with_host = [&](size_t cut, const std::string &word) {
    if (t.size() > cut) out.push_back(stem(cut));
    out.push_back(word);
    return out;
  };
  if (ends("'ve")) return with_host(3, "have");
  if (ends("'ll")) return with_host(3, "will");
  if (ends("'re")) return with_host(3, "are");
  if (ends("'m")) return with_host(2, "am");
  if (ends("'d")) return with_host(2, next_is_participle ? "had" : "would");
  if (ends("'s")) return with_host(2, next == "been" ? "has" : "is");
  return {t};
}

bool Skippable(const std::string &w) {
  return kNegations.count(w) || kAdverbs.count(w) || (w.size() > 3 && w.ends_with("ly"));
}

}  // namespace

TamvnSignature DetectSignature(const std::vector<std::string> &tokens, int index,
                               const InflectionLexicon &inflections) {
  if (index < 0 || index >= static_cast<int>(tokens.size())) {
    throw Error(ErrorKind::kFormat, "predicate index outside the sentence");
  }
  const std::string pred = ToLower(tokens[index]);
  std::set<VerbForm> forms;
  for (const VerbAnalysis &a : inflections.Analyze(pred)) forms.insert(a.form);
  const bool participle_reading =
      forms.count(VerbForm::kPastParticiple) && !forms.count(VerbForm::kStem);

  // Words of the three preceding tokens, with clitics split.
  std::vector<std::string> window;
  for (int i = std::max(0, index - 3); i < index; ++i) {
    const std::string next = i + 1 < index ? ToLower(tokens[i + 1]) : pred;
    for (std::string &w : ExpandToken(tokens[i], i + 1 == index && participle_reading, next)) {
      window.push_back(std::move(w));
    }
  }
  // Contiguous auxiliary chain ending at the predicate; adverbs and
  // negation may interleave.
  std::vector<std::string> chain;
  bool negated = false;
  for (auto it = window.rbegin(); it != window.rend(); ++it) {
    if (IsChainWord(*it)) {
      chain.insert(chain.begin(), *it);
    } else if (Skippable(*it)) {
      if (kNegations.count(*it)) negated = true;
    } else {
      break;
    }
  }

  TamvnSignature sig;
  sig.negated = negated;
  auto next_is_pp = [&](size_t i) {
    if (i + 1 < chain.size()) return chain[i + 1] == "been";
    return static_cast<bool>(forms.count(VerbForm::kPastParticiple));
  };
  std::optional<Tense> finite;
  for (size_t i = 0; i < chain.size(); ++i) {
    const std::string &w = chain[i];
    if (kModals.count(w)) {
      if (!finite) {
        sig.modal = w;
        finite = w == "will" ? Tense::kFuture : Tense::kPresent;
      }
    } else if (kHaveForms.count(w)) {
      if (next_is_pp(i)) sig.perfect = true;
      if (!finite && w != "having") finite = w == "had" ? Tense::kPast : Tense::kPresent;
    } else if (kDoForms.count(w)) {
      if (!finite) finite = w == "did" ? Tense::kPast : Tense::kPresent;
    } else if (kBeForms.count(w)) {
      if (!finite && w != "be" && w != "been" && w != "being") {
        finite = (w == "was" || w == "were") ? Tense::kPast : Tense::kPresent;
      }
    }
  }
  const bool after_be = !chain.empty() && kBeForms.count(chain.back());
  if (after_be && forms.count(VerbForm::kPresentParticiple)) sig.progressive = true;
  if (after_be && forms.count(VerbForm::kPastParticiple)) sig.voice = Voice::kPassive;
  if (after_be && chain.back() == "being" && sig.voice == Voice::kPassive) {
    sig.progressive = true;
  }
  if (!finite) {
    if (chain.empty() && forms.count(VerbForm::kPast) && !forms.count(VerbForm::kPresent3sg) &&
        !forms.count(VerbForm::kStem)) {
      finite = Tense::kPast;
    } else {
      finite = Tense::kPresent;
    }
  }
  sig.tense = *finite;
  return sig;
}

namespace {

const std::unordered_set<std::string> &AnimateWords() {
  static const std::unordered_set<std::string> words = {
      // pronouns
      "i", "you", "he", "she", "we", "they", "me", "him", "her", "us", "them",
      "myself", "himself", "herself", "ourselves", "themselves", "who", "whom",
      "someone", "somebody", "everyone", "everybody", "anyone", "anybody", "nobody",
      // honorifics
      "mr", "mr.", "mrs", "mrs.", "ms", "ms.", "dr", "dr.", "prof", "prof.", "sir",
      "madam", "lord", "lady", "president", "senator", "king", "queen", "minister",
      "governor", "mayor", "judge", "general", "captain", "professor", "rev.",
      // person nouns
      "person", "people", "man", "men", "woman", "women", "child", "children", "boy",
      "girl", "baby", "kid", "adult", "family", "friend", "mother", "father", "parent",
      "son", "daughter", "brother", "sister", "wife", "husband", "tourist", "traveler",
      "passenger", "student", "teacher", "scientist", "geologist", "researcher",
      "engineer", "doctor", "nurse", "patient", "lawyer", "worker", "employee",
      "official", "officer", "soldier", "player", "coach", "manager", "leader",
      "member", "citizen", "resident", "voter", "customer", "investor", "analyst",
      "author", "writer", "reporter", "artist", "singer", "actor", "farmer",
      "driver", "pilot", "police", "spokesman", "spokeswoman", "chairman", "director",
      "executive", "owner", "buyer", "seller", "user", "visitor", "guest", "neighbor",
      "committee", "team", "crowd", "audience",
      // given names
      "john", "mary", "james", "robert", "michael", "william", "david", "richard",
      "joseph", "thomas", "charles", "linda", "patricia", "jennifer", "elizabeth",
      "susan", "sarah", "karen", "nancy", "lisa", "peter", "paul", "george", "anna",
      "maria", "tom", "bob", "alice", "jack", "emma",
  };
  return words;
}

}  // namespace

bool HasAnimateCue(const std::vector<std::string> &words) {
  const auto &animate = AnimateWords();
  for (const std::string &raw : words) {
    std::string w = ToLower(raw);
    if (animate.count(w)) return true;
    if (w.size() > 3 && w.ends_with("s") && animate.count(w.substr(0, w.size() - 1))) {
      return true;
    }
  }
  return false;
}

namespace {

// Realizes `sig`, giving up negation and then modality when the grammar has
// no chain for them.
SlotQuestion ApplyClosest(const SlotQuestion &prototype, TamvnSignature sig) {
  try {
    return ApplyTamvn(prototype, sig);
  } catch (const Error &e) {
    if (e.kind() != ErrorKind::kGrammar) throw;
  }
  if (sig.negated) {
    sig.negated = false;
    try {
      return ApplyTamvn(prototype, sig);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kGrammar) throw;
    }
  }
  sig.modal.clear();
  if (sig.tense == Tense::kFuture) sig.tense = Tense::kPresent;
  return ApplyTamvn(prototype, sig);
}

std::vector<std::string> SpanWords(Span span, const std::vector<std::string> &tokens) {
  return {tokens.begin() + span.start, tokens.begin() + span.end};
}

}  // namespace

ContextualizedQuestion Contextualize(const SlotQuestion &prototype,
                                     const RoleQuestionRequest &request,
                                     const InflectionLexicon &inflections,
                                     const ContextualizeOptions &options) {
  ValidateRequest(request);
  ContextualizedQuestion out;
  if (options.backend != nullptr) {
    const std::string input = Seq2SeqInput(request.tokens, request.predicate,
                                           RenderTokenized(prototype, inflections));
    std::string text;
    try {
      text = options.backend->Contextualize(input);
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kBackend) throw;
      out.backend_failed = true;
    }
    if (!out.backend_failed) {
      const std::string collapsed = CollapseSpaces(text);
      if (collapsed.empty() || collapsed.back() != '?' ||
          text.find('\n') != std::string::npos) {
        throw Error(ErrorKind::kBackend, "contextualizer returned an invalid question: '" +
                                             text + "'");
      }
      out.text = collapsed;
      out.used_backend = true;
      return out;
    }
  }

  TamvnSignature sig = request.signature
                           ? *request.signature
                           : DetectSignature(request.tokens, request.predicate.index,
                                             inflections);
  sig.voice = VoiceOf(prototype);
  sig.wh = sig.subj = sig.obj = sig.misc = Animacy::kNotApplicable;
  // The wh-word stands for the gapped argument; a hint for that position
  // tells its animacy.
  if (!IsAdverbialWh(prototype.wh)) {
    auto hint = [&](Slot slot) -> std::optional<Animacy> {
      auto it = request.fills.find(slot);
      if (it == request.fills.end()) return std::nullopt;
      return HasAnimateCue(SpanWords(it->second, request.tokens)) ? Animacy::kAnimate
                                                                  : Animacy::kInanimate;
    };
    if (prototype.subj == Placeholder::kNone) {
      if (auto a = hint(Slot::kSubj)) sig.subj = *a;
    } else if (prototype.obj == Placeholder::kNone && prototype.prep.empty()) {
      if (auto a = hint(Slot::kObj)) sig.wh = *a;
    }
  }
  SlotQuestion q = ApplyClosest(prototype, sig);

  std::vector<std::pair<Slot, std::string>> fillers;
  for (Slot slot : FillableSlots(q)) {
    auto it = request.fills.find(slot);
    if (it != request.fills.end()) {
      fillers.emplace_back(slot, Decapitalize(it->second, request.tokens));
    }
  }
  SurfaceQuestion surface = FillQuestionText(q, fillers, inflections);
  HeuristicAgreementChooser heuristic;
  FixAgreement(surface, options.chooser ? *options.chooser : heuristic);
  out.text = surface.Text();
  out.surface = std::move(surface);
  return out;
}

void RoleInventory::Add(const std::string &lemma, const std::string &sense,
                        const std::string &role, const std::string &gloss) {
  roles_[{lemma, sense}][NormalizeRole(role)] = gloss;
}

std::vector<std::string> RoleInventory::Roles(const std::string &lemma,
                                              const std::string &sense) const {
  std::vector<std::string> out;
  auto it = roles_.find({lemma, sense});
  if (it == roles_.end()) return out;
  for (const auto &[role, gloss] : it->second) {
    if (!IsAdjunctRole(role)) out.push_back(role);
  }
  return out;
}

std::optional<std::string> RoleInventory::Gloss(const std::string &lemma,
                                                const std::string &sense,
                                                const std::string &role) const {
  auto it = roles_.find({lemma, sense});
  if (it == roles_.end()) return std::nullopt;
  auto r = it->second.find(role);
  if (r == it->second.end()) return std::nullopt;
  return r->second;
}

RoleInventory RoleInventory::Read(std::istream &in, const std::string &source) {
  RoleInventory inventory;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    size_t pos = 0;
    while (true) {
      size_t tab = line.find('\t', pos);
      cols.push_back(line.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    const std::string where = source + ":" + std::to_string(line_no) + ": ";
    if (cols.size() != 4) throw Error(ErrorKind::kFormat, where + "expected 4 columns");
    try {
      inventory.Add(cols[0], cols[1], cols[2], cols[3]);
    } catch (const Error &e) {
      throw Error(e.kind(), where + e.what());
    }
  }
  return inventory;
}

std::vector<std::string> RolesFor(const RoleInventory &inventory, const Predicate &predicate,
                                  const std::vector<std::string> &adjuncts) {
  std::vector<std::string> roles = inventory.Roles(predicate.lemma, predicate.sense);
  for (const std::string &a : adjuncts) {
    if (std::find(roles.begin(), roles.end(), a) == roles.end()) roles.push_back(a);
  }
  return roles;
}

RoleQuestions GenerateRoleQuestions(const RoleQuestionRequest &request,
                                    const RoleLexicon &lexicon,
                                    const std::vector<std::string> &roles,
                                    const InflectionLexicon &inflections,
                                    const ContextualizeOptions &options) {
  RoleQuestions out;
  std::set<std::string> seen;
  for (const std::string &role : roles) {
    if (!seen.insert(role).second) continue;
    auto lookup = LookupPrototype(lexicon, request.predicate.lemma, request.predicate.sense,
                                  role, inflections);
    if (!lookup) {
      out.missing.push_back(role);
      continue;
    }
    RoleQuestionRequest per_role = request;
    per_role.role = role;
    ContextualizedQuestion c = Contextualize(lookup->prototype, per_role, inflections, options);
    out.questions.push_back(
        {role, lookup->text, c.text, lookup->match, c.used_backend, c.backend_failed});
  }
  for (size_t i = 0; i < out.questions.size(); ++i) {
    for (size_t j = i + 1; j < out.questions.size(); ++j) {
      if (out.questions[i].question == out.questions[j].question) {
        out.duplicates.emplace_back(out.questions[i].role, out.questions[j].role);
      }
    }
  }
  return out;
}

}  // namespace qaframe
