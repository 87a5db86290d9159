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

#include "qaframe/declarative.h"

#include <algorithm>
#include <sstream>

namespace qaframe {

std::string_view ArgKindName(ArgKind kind) {
  switch (kind) {
    case ArgKind::kNone: return "none";
    case ArgKind::kObj2: return "obj2";
    case ArgKind::kPp: return "pp";
    case ArgKind::kXcomp: return "xcomp";
    case ArgKind::kLoc: return "loc";
  }
  return "none";
}

std::string_view FunctionName(Function f) {
  switch (f) {
    case Function::kSubj: return "subj";
    case Function::kObj: return "obj";
    case Function::kObj2: return "obj2";
    case Function::kPpObject: return "pp-obj";
    case Function::kLoc: return "loc";
    case Function::kXcomp: return "xcomp";
    case Function::kAdverbial: return "adverbial";
  }
  return "subj";
}

StructureKey KeyOf(const DeclarativeReading &r) {
  return {r.voice, r.has_subj, r.has_obj, r.particle, r.misc, r.misc_prep};
}

StructureKey StrippedKey(const StructureKey &key) {
  StructureKey k = key;
  k.particle.clear();
  k.misc = ArgKind::kNone;
  k.misc_prep.clear();
  return k;
}

std::string KeyString(const StructureKey &key) {
  std::string s(VoiceName(key.voice));
  if (key.has_subj) s += "|subj";
  if (key.has_obj) s += "|obj";
  if (!key.particle.empty()) s += "|prt:" + key.particle;
  if (key.misc != ArgKind::kNone) {
    s += "|" + std::string(ArgKindName(key.misc));
    if (!key.misc_prep.empty()) s += ":" + key.misc_prep;
  }
  return s;
}

std::string DescribeReading(const DeclarativeReading &r) {
  std::ostringstream out;
  out << "[" << KeyString(KeyOf(r)) << "] gap=" << FunctionName(r.gap);
  if (r.gap == Function::kPpObject) out << "(" << r.gap_prep << ")";
  if (r.gap == Function::kAdverbial) out << "(" << WhName(r.wh) << ")";
  auto slot = [&](const char *name, const std::optional<Function> &f) {
    if (f) out << " " << name << "=" << FunctionName(*f);
  };
  slot("SUBJ", r.subj_slot);
  slot("OBJ", r.obj_slot);
  slot("MISC", r.misc_slot);
  return out.str();
}

namespace {

// Reads the PREP/MISC pair when PREP is not stranded.
void SetMisc(const SlotQuestion &q, DeclarativeReading &r) {
  const bool has_prep = !q.prep.empty();
  switch (q.misc) {
    case Placeholder::kNone:
      break;
    case Placeholder::kSomething:
    case Placeholder::kSomeone:
      if (has_prep) {
        r.misc = ArgKind::kPp;
        r.misc_prep = q.prep;
        r.misc_slot = Function::kPpObject;
      } else {
        r.misc = ArgKind::kObj2;
        r.misc_slot = Function::kObj2;
      }
      break;
    case Placeholder::kSomewhere:
      if (has_prep) {
        r.misc = ArgKind::kPp;
        r.misc_prep = q.prep;
        r.misc_slot = Function::kPpObject;
      } else {
        r.misc = ArgKind::kLoc;
        r.misc_slot = Function::kLoc;
      }
      break;
    case Placeholder::kDoSomething:
    case Placeholder::kDoingSomething:
      r.misc = ArgKind::kXcomp;
      r.misc_prep = q.prep;
      r.misc_slot = Function::kXcomp;
      break;
  }
}

void MakePpGap(const SlotQuestion &q, DeclarativeReading &r) {
  r.misc = ArgKind::kPp;
  r.misc_prep = q.prep;
  r.gap = Function::kPpObject;
  r.gap_prep = q.prep;
}

}  // namespace

std::vector<DeclarativeReading> EnumerateReadings(const SlotQuestion &q) {
  DeclarativeReading base;
  base.voice = VoiceOf(q);
  base.wh = q.wh;
  if (q.subj != Placeholder::kNone) {
    base.has_subj = true;
    base.subj_slot = Function::kSubj;
  }
  if (q.obj != Placeholder::kNone) {
    base.has_obj = true;
    base.obj_slot = Function::kObj;
  }
  const bool stranded = !q.prep.empty() && q.misc == Placeholder::kNone;

  std::vector<DeclarativeReading> out;
  if (IsAdverbialWh(q.wh)) {
    // The adverbial is left out of the clause.
    DeclarativeReading r = base;
    r.gap = Function::kAdverbial;
    if (stranded) {
      r.particle = q.prep;
    } else {
      SetMisc(q, r);
    }
    out.push_back(r);
    if (q.wh == WhWord::kWhere && q.misc == Placeholder::kNone) {
      DeclarativeReading loc = base;
      if (stranded) {
        MakePpGap(q, loc);
      } else {
        loc.misc = ArgKind::kLoc;
        loc.gap = Function::kLoc;
      }
      out.push_back(loc);
    }
    return out;
  }

  if (q.subj == Placeholder::kNone) {
    DeclarativeReading r = base;
    r.has_subj = true;
    r.gap = Function::kSubj;
    if (stranded) {
      r.particle = q.prep;
    } else {
      SetMisc(q, r);
    }
    out.push_back(r);
    return out;
  }

  if (q.obj == Placeholder::kNone) {
    DeclarativeReading r = base;
    r.has_obj = true;
    r.gap = Function::kObj;
    if (stranded) {
      r.particle = q.prep;
      out.push_back(r);
      DeclarativeReading pp = base;
      MakePpGap(q, pp);
      out.push_back(pp);
    } else {
      SetMisc(q, r);
      out.push_back(r);
    }
    return out;
  }

  if (stranded) {
    DeclarativeReading r = base;
    MakePpGap(q, r);
    out.push_back(r);
    return out;
  }

  // Two objects, one extracted: either the first ("someone gave [gap]
  // someone") or the second ("someone gave someone [gap]").
  DeclarativeReading first = base;
  first.misc = ArgKind::kObj2;
  first.gap = Function::kObj;
  first.obj_slot = Function::kObj2;
  out.push_back(first);
  DeclarativeReading second = base;
  second.misc = ArgKind::kObj2;
  second.gap = Function::kObj2;
  out.push_back(second);
  return out;
}

std::string_view ResolutionRuleName(ResolutionRule rule) {
  switch (rule) {
    case ResolutionRule::kUnambiguous: return "unambiguous";
    case ResolutionRule::kMajority: return "majority";
    case ResolutionRule::kParticleHeuristic: return "particle-heuristic";
    case ResolutionRule::kLocativeHeuristic: return "locative-heuristic";
    case ResolutionRule::kDitransitiveHeuristic: return "ditransitive-heuristic";
    case ResolutionRule::kLexicographic: return "lexicographic";
  }
  return "unambiguous";
}

namespace {

using Pool = std::vector<const DeclarativeReading *>;

template <typename Pred>
bool Any(const Pool &pool, Pred pred) {
  return std::any_of(pool.begin(), pool.end(), pred);
}

template <typename Pred>
Pool Keep(const Pool &pool, Pred pred) {
  Pool out;
  for (const auto *r : pool) {
    if (pred(r)) out.push_back(r);
  }
  return out;
}

}  // namespace

Resolution ResolveReading(
    const SlotQuestion &q,
    const std::vector<std::vector<DeclarativeReading>> &sibling_readings) {
  const std::vector<DeclarativeReading> readings = EnumerateReadings(q);

  std::vector<int> support(readings.size(), 0);
  for (size_t i = 0; i < readings.size(); ++i) {
    const StructureKey key = KeyOf(readings[i]);
    for (const auto &sibling : sibling_readings) {
      bool shares = std::any_of(sibling.begin(), sibling.end(),
                                [&](const DeclarativeReading &s) {
                                  return KeyOf(s) == key;
                                });
      if (shares) ++support[i];
    }
  }

  if (readings.size() == 1) {
    return {readings[0], ResolutionRule::kUnambiguous, support[0]};
  }

  const int best = *std::max_element(support.begin(), support.end());
  Pool pool;
  for (size_t i = 0; i < readings.size(); ++i) {
    if (support[i] == best) pool.push_back(&readings[i]);
  }
  if (pool.size() == 1) return {*pool[0], ResolutionRule::kMajority, best};

  ResolutionRule rule = ResolutionRule::kLexicographic;

  // Particle vs. preposition: place the gap after the preposition.
  auto is_pp_gap = [](const DeclarativeReading *r) {
    return r->gap == Function::kPpObject;
  };
  auto has_particle = [](const DeclarativeReading *r) { return !r->particle.empty(); };
  if (Any(pool, is_pp_gap) && Any(pool, has_particle)) {
    pool = Keep(pool, is_pp_gap);
    rule = ResolutionRule::kParticleHeuristic;
  }

  // Locative argument vs. adverbial: prefer the adverbial.
  auto is_adverbial = [](const DeclarativeReading *r) {
    return r->gap == Function::kAdverbial;
  };
  auto is_loc_gap = [](const DeclarativeReading *r) {
    return r->gap == Function::kLoc || (r->gap == Function::kPpObject &&
                                        r->wh == WhWord::kWhere);
  };
  if (pool.size() > 1 && Any(pool, is_adverbial) && Any(pool, is_loc_gap)) {
    pool = Keep(pool, is_adverbial);
    rule = ResolutionRule::kLocativeHeuristic;
  }

  // Ditransitives: who -> first object, what -> second object.
  auto is_obj = [](const DeclarativeReading *r) { return r->gap == Function::kObj; };
  auto is_obj2 = [](const DeclarativeReading *r) { return r->gap == Function::kObj2; };
  if (pool.size() > 1 && Any(pool, is_obj) && Any(pool, is_obj2)) {
    pool = Keep(pool, q.wh == WhWord::kWho ? is_obj : is_obj2);
    rule = ResolutionRule::kDitransitiveHeuristic;
  }

  if (pool.size() > 1) {
    std::stable_sort(pool.begin(), pool.end(), [](const auto *a, const auto *b) {
      auto ka = KeyOf(*a), kb = KeyOf(*b);
      if (ka != kb) return KeyString(ka) < KeyString(kb);
      return DescribeReading(*a) < DescribeReading(*b);
    });
    rule = ResolutionRule::kLexicographic;
  }
  return {*pool[0], rule, best};
}

std::vector<Resolution> ResolveFrame(const std::vector<SlotQuestion> &questions) {
  std::vector<std::vector<DeclarativeReading>> all;
  all.reserve(questions.size());
  for (const auto &q : questions) all.push_back(EnumerateReadings(q));
  std::vector<Resolution> out;
  for (size_t i = 0; i < questions.size(); ++i) {
    std::vector<std::vector<DeclarativeReading>> siblings;
    for (size_t j = 0; j < questions.size(); ++j) {
      if (j != i) siblings.push_back(all[j]);
    }
    out.push_back(ResolveReading(questions[i], siblings));
  }
  return out;
}

}  // namespace qaframe
