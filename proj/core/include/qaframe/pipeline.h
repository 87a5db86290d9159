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

// Role question generation: prototype lookup followed by contextualization,
// through a model backend or the rule-based fallback.

#ifndef QAFRAME_PIPELINE_H_
#define QAFRAME_PIPELINE_H_

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaframe/frame.h"
#include "qaframe/framealign.h"
#include "qaframe/inflection.h"
#include "qaframe/qgrammar.h"
#include "qaframe/selection.h"

namespace qaframe {

struct RoleQuestionRequest {
  std::vector<std::string> tokens;
  Predicate predicate;
  std::string role;
  std::optional<TamvnSignature> signature;  // detected from the sentence if absent
  std::map<Slot, Span> fills;               // SUBJ / OBJ / MISC fillers
};

// Throws kFormat for an out-of-range predicate or fill span, kVocabulary for
// an unknown role.
void ValidateRequest(const RoleQuestionRequest &request);

struct PrototypeLookup {
  SlotQuestion prototype;
  std::string text;
  LookupMatch match = LookupMatch::kExact;
};

// nullopt when no entry serves (lemma, sense, role).
std::optional<PrototypeLookup> LookupPrototype(const RoleLexicon &lexicon,
                                               const std::string &lemma,
                                               const std::string &sense,
                                               const std::string &role,
                                               const InflectionLexicon &inflections);

// Tense, modality, negation and aspect of the predicate token, read off the
// token's inflection and the auxiliaries among the three tokens before it.
// Voice is active unless a be-form governs a past participle; animacy is
// left unset.
TamvnSignature DetectSignature(const std::vector<std::string> &tokens, int index,
                               const InflectionLexicon &inflections);

// Personal pronouns, honorifics, person nouns and given names.
bool HasAnimateCue(const std::vector<std::string> &words);

// Model that rewrites a seq2seq input (tokens with predicate markers,
// lemma and tokenized prototype) into a question.
class ContextualizerBackend {
 public:
  virtual ~ContextualizerBackend() = default;
  virtual std::string Contextualize(const std::string &input) = 0;
};

struct ContextualizeOptions {
  ContextualizerBackend *backend = nullptr;
  AgreementChooser *chooser = nullptr;  // heuristic when null
};

struct ContextualizedQuestion {
  std::string text;
  bool used_backend = false;
  bool backend_failed = false;  // protocol failure; fallback used
  std::optional<SurfaceQuestion> surface;  // fallback path only
};

// Backend output must be a non-empty question ending in "?" (kBackend
// otherwise). The fallback realizes the detected signature with the
// prototype's voice, substitutes fills, restores animacy from cues, then
// decapitalizes and fixes agreement.
ContextualizedQuestion Contextualize(const SlotQuestion &prototype,
                                     const RoleQuestionRequest &request,
                                     const InflectionLexicon &inflections,
                                     const ContextualizeOptions &options = {});

// Core roles per lemma.sense, from a lemma<TAB>sense<TAB>role<TAB>gloss file.
class RoleInventory {
 public:
  void Add(const std::string &lemma, const std::string &sense, const std::string &role,
           const std::string &gloss);
  std::vector<std::string> Roles(const std::string &lemma, const std::string &sense) const;
  std::optional<std::string> Gloss(const std::string &lemma, const std::string &sense,
                                   const std::string &role) const;
  static RoleInventory Read(std::istream &in, const std::string &source);

 private:
  std::map<std::pair<std::string, std::string>, std::map<std::string, std::string>> roles_;
};

struct RoleQuestion {
  std::string role;
  std::string prototype;
  std::string question;
  LookupMatch match = LookupMatch::kExact;
  bool used_backend = false;
  bool backend_failed = false;
};

struct RoleQuestions {
  std::vector<RoleQuestion> questions;  // one per role with a prototype
  std::vector<std::string> missing;     // roles without a prototype
  std::vector<std::pair<std::string, std::string>> duplicates;  // roles sharing a text
};

// Every role in `roles` (core roles, then adjuncts) gets a question whether
// or not the sentence realizes it. `request.role` is ignored.
RoleQuestions GenerateRoleQuestions(const RoleQuestionRequest &request,
                                    const RoleLexicon &lexicon,
                                    const std::vector<std::string> &roles,
                                    const InflectionLexicon &inflections,
                                    const ContextualizeOptions &options = {});

// Core roles of the predicate's sense followed by `adjuncts`.
std::vector<std::string> RolesFor(const RoleInventory &inventory, const Predicate &predicate,
                                  const std::vector<std::string> &adjuncts);

}  // namespace qaframe

#endif  // QAFRAME_PIPELINE_H_
