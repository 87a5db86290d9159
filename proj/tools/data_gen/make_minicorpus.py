#!/usr/bin/env python3
# Copyright 2026 The qaframe Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the mini-corpus under tests/data/.

  questions.tsv        question, expected prototype, AUX/VERB case
  frames.jsonl         annotated frames (with SRL arguments)
  frames_expected.tsv  frame, entry, slot, source entry, rule: every fill
                       the correspondence rules should produce
  gold.jsonl           gold PropBank arguments of the same sentences

Expected prototypes and fills are derived here from the construction of
each item, independently of the library.

  python3 tools/data_gen/make_minicorpus.py
"""

import json
import os
import random

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..")
OUT = os.path.join(ROOT, "tests", "data")
SEED = 7


def load_forms():
  forms = {}
  with open(os.path.join(ROOT, "core", "data", "inflections.tsv")) as f:
    for line in f:
      if line.startswith("#") or not line.strip():
        continue
      stem, s3, past, pp, ing = line.rstrip("\n").split("\t")
      forms[stem] = {"stem": stem, "present3sg": s3, "past": past,
                     "past-participle": pp, "present-participle": ing}
  return forms


FORMS = load_forms()


# --- questions --------------------------------------------------------------

# (aux, prefix, verb form) per AUX/VERB case.
ACTIVE_NO_SUBJ = [
    ("", "", "present3sg"), ("", "", "past"), ("will", "", "stem"),
    ("won't", "", "stem"), ("might", "", "stem"), ("can", "", "stem"),
    ("should", "", "stem"), ("would", "", "stem"), ("couldn't", "", "stem"),
    ("must", "", "stem"), ("has", "", "past-participle"),
    ("had", "", "past-participle"), ("is", "", "present-participle"),
    ("was", "", "present-participle"), ("will", "be", "present-participle"),
    ("might", "have", "past-participle"),
    ("has", "been", "present-participle"), ("doesn't", "", "stem"),
    ("didn't", "", "stem"), ("hasn't", "", "past-participle"),
]
ACTIVE_SUBJ = [
    ("does", "", "stem"), ("did", "", "stem"), ("will", "", "stem"),
    ("won't", "", "stem"), ("might", "", "stem"), ("can't", "", "stem"),
    ("should", "", "stem"), ("would", "", "stem"), ("has", "", "past-participle"),
    ("had", "", "past-participle"), ("is", "", "present-participle"),
    ("was", "", "present-participle"), ("doesn't", "", "stem"),
    ("didn't", "", "stem"), ("might", "have", "past-participle"),
    ("could", "be", "present-participle"),
    ("had", "been", "present-participle"),
]
PASSIVE = [
    ("is", "", "past-participle"), ("was", "", "past-participle"),
    ("will", "be", "past-participle"), ("won't", "be", "past-participle"),
    ("might", "be", "past-participle"), ("has", "been", "past-participle"),
    ("had", "been", "past-participle"), ("isn't", "", "past-participle"),
    ("wasn't", "", "past-participle"), ("is", "being", "past-participle"),
    ("should", "have been", "past-participle"), ("can", "be", "past-participle"),
]

# (wh, subj, obj, prep, misc) shapes per case; the wh-word is the gap.
SHAPES_NO_SUBJ = [
    ("who", "", "something", "", ""), ("what", "", "something", "", ""),
    ("who", "", "", "", ""), ("what", "", "someone", "to", "someone"),
    ("who", "", "something", "to", "someone"), ("what", "", "", "into", "something"),
    ("who", "", "something", "", "somewhere"),
]
SHAPES_SUBJ = [
    ("what", "someone", "", "", ""), ("who", "something", "", "", ""),
    ("where", "someone", "something", "", ""), ("when", "someone", "", "", ""),
    ("why", "something", "something", "", ""), ("how", "someone", "something", "", ""),
    ("what", "someone", "something", "for", ""), ("who", "someone", "something", "to", ""),
    ("what", "something", "", "into", ""), ("how much", "someone", "something", "", ""),
    ("how long", "someone", "", "", ""),
]
SHAPES_PASSIVE = [
    ("what", "", "", "", ""), ("who", "", "", "", ""),
    ("what", "something", "", "for", ""), ("who", "something", "", "by", ""),
    ("what", "", "", "by", "someone"), ("where", "something", "", "", ""),
    ("when", "someone", "", "", ""), ("what", "", "", "to", "someone"),
    ("why", "something", "", "", ""),
]

VERBS = ["bring", "fix", "sell", "change", "study", "give", "visit", "build",
         "move", "take", "win", "send", "deliver", "hire", "approve", "hide"]


def realize(aux, prefix, form, verb):
  return " ".join(w for w in [aux, prefix, FORMS[verb][form]] if w)


def mid_sentence(phrase):
  """Phrase as it reads after the sentence start."""
  first = phrase.split()[0]
  if first.isupper():
    return phrase
  return phrase[0].lower() + phrase[1:]


def initial(phrase):
  return phrase[0].upper() + phrase[1:]


def question_text(words):
  text = " ".join(w for w in words if w)
  return text[0].upper() + text[1:] + "?"


def prototype_of(case, wh, subj, verb, obj, prep, misc):
  anim = {"who": "what", "someone": "something"}
  wh, subj, obj, misc = (anim.get(x, x) for x in (wh, subj, obj, misc))
  if case == "passive":
    chain = ["is", FORMS[verb]["past-participle"]]
    return question_text([wh, chain[0], subj, chain[1], obj, prep, misc])
  if case == "active-no-subj":
    return question_text([wh, FORMS[verb]["present3sg"], obj, prep, misc])
  return question_text([wh, "does", subj, verb, obj, prep, misc])


def make_questions(rng):
  rows = []
  seen = set()
  for case, chains, shapes in (("active-no-subj", ACTIVE_NO_SUBJ, SHAPES_NO_SUBJ),
                               ("active-subj", ACTIVE_SUBJ, SHAPES_SUBJ),
                               ("passive", PASSIVE, SHAPES_PASSIVE)):
    while sum(1 for r in rows if r[2] == case) < 80:
      aux, prefix, form = rng.choice(chains)
      wh, subj, obj, prep, misc = rng.choice(shapes)
      verb = rng.choice(VERBS)
      words = [wh, aux, subj, realize("", prefix, form, verb), obj, prep, misc]
      q = question_text(words)
      if q in seen:
        continue
      seen.add(q)
      rows.append((q, prototype_of(case, wh, subj, verb, obj, prep, misc), case))
  return rows


# --- frames -----------------------------------------------------------------

def tokens_of(sentence):
  return sentence.split()


def find(tokens, phrase, start=0):
  words = phrase.split()
  for i in range(start, len(tokens) - len(words) + 1):
    if tokens[i:i + len(words)] == words:
      return [i, i + len(words)]
  raise ValueError(f"{phrase!r} not in {tokens!r}")


def slots(wh, aux, subj, verb, form, obj="", prep="", misc=""):
  return {"wh": wh, "aux": aux, "subj": subj, "verb": verb, "verb_form": form,
          "obj": obj, "prep": prep, "misc": misc}


class FrameBuilder:
  def __init__(self):
    self.frames = []
    self.expected = []
    self.gold = []

  def add(self, sid, sentence, lemma, sense, pred_word, entries, fills, srl):
    tokens = tokens_of(sentence)
    index = tokens.index(pred_word)
    frame = {
        "sentence_id": sid, "tokens": tokens,
        "predicate": {"index": index, "lemma": lemma, "sense": sense},
        "entries": [{"slots": s, "answers": [dict(zip(("start", "end"), find(tokens, a)))]}
                    for s, a in entries],
        "srl": [{"role": role, "start": sp[0], "end": sp[1]}
                for role, sp in ((r, find(tokens, p)) for r, p in srl)],
    }
    self.frames.append(frame)
    for entry, slot, source, rule in fills:
      self.expected.append((sid, entry, slot, source, rule))
    self.gold.append({"sentence_id": sid, "tokens": tokens, "predicate": frame["predicate"],
                      "arguments": frame["srl"]})


TRANSITIVE = [
    ("The courier", "deliver", "the package"),
    ("Engineers", "fix", "the bridge"),
    ("The committee", "approve", "the budget"),
    ("NASA engineers", "build", "the rover"),
    ("The chef", "cook", "the dinner"),
    ("Volunteers", "build", "the shelter"),
    ("The company", "hire", "new workers"),
    ("Researchers", "study", "the samples"),
]


def transitive_frames(b):
  for n, (agent, verb, theme) in enumerate(TRANSITIVE):
    f = FORMS[verb]
    # Active subject/object questions with passive counterparts: the passive
    # subject and the by-phrase object supply the active placeholders.
    b.add(f"act-pas-{n}", f"{agent} {f['past']} {theme} .", verb, "01", f["past"],
          [(slots("who", "", "", f["past"], "past", "something"), agent),
           (slots("what", "was", "", f["past-participle"], "past-participle"), theme),
           (slots("what", "was", "", f["past-participle"], "past-participle", "", "by",
                  "someone"), theme)],
          [(0, "OBJ", 1, "obj-passive-subj"), (2, "MISC", 0, "subj-by-pp")],
          [("A0", agent), ("A1", theme)])
    b.add(f"by-pp-{n}", f"{initial(theme)} {'were' if theme.endswith('s') else 'was'} {f['past-participle']} by {mid_sentence(agent)} .",
          verb, "01", f["past-participle"],
          [(slots("what", "did", "someone", verb, "stem"), initial(theme)),
           (slots("who", "were" if theme.endswith("s") else "was", "something",
                  f["past-participle"], "past-participle", "", "by"), mid_sentence(agent))],
          [(0, "SUBJ", 1, "subj-by-pp"), (1, "SUBJ", 0, "obj-passive-subj")],
          [("A1", initial(theme)), ("A0", mid_sentence(agent))])


LOCATIVE = [
    ("The cook", "leave", "the knife", "in the kitchen"),
    ("Thieves", "hide", "the jewels", "under the floor"),
    ("The workers", "store", "the tools", "in the shed"),
    ("The librarian", "put", "the books", "on the shelf"),
    ("Farmers", "keep", "the grain", "in the barn"),
    ("The museum", "display", "the painting", "in the hall"),
    ("The Pentagon", "send", "troops", "to the border"),
]


def locative_frames(b):
  for n, (agent, verb, theme, place) in enumerate(LOCATIVE):
    f = FORMS[verb]
    b.add(f"loc-{n}", f"{agent} {f['past']} {theme} {place} .", verb, "01", f["past"],
          [(slots("who", "", "", f["past"], "past", "something"), agent),
           (slots("what", "did", "someone", verb, "stem"), theme),
           (slots("where", "did", "someone", verb, "stem", "something"), place),
           (slots("what", "did", "someone", verb, "stem", "", "", "somewhere"), theme)],
          [(0, "OBJ", 1, "base"), (1, "SUBJ", 0, "base"), (2, "SUBJ", 0, "base"),
           (2, "OBJ", 1, "base"), (3, "SUBJ", 0, "stripped-misc"),
           (3, "MISC", 2, "loc-where")],
          [("A0", agent), ("A1", theme), ("AM-LOC", place)])


PRICED = [
    ("Farmers", "sell", "the wheat", "ten dollars"),
    ("The gallery", "sell", "the sculpture", "a fortune"),
    ("My neighbor", "buy", "the car", "cash"),
    ("The club", "trade", "its striker", "two players"),
    ("The town", "pay", "the contractor", "the repairs"),
    ("Collectors", "buy", "the stamps", "a bargain"),
]


def priced_frames(b):
  for n, (agent, verb, theme, price) in enumerate(PRICED):
    f = FORMS[verb]
    b.add(f"price-{n}", f"{agent} {f['past']} {theme} for {price} .", verb, "01", f["past"],
          [(slots("who", "", "", f["past"], "past", "something"), agent),
           (slots("what", "did", "someone", verb, "stem"), theme),
           (slots("what", "did", "someone", verb, "stem", "something", "for"), price)],
          [(0, "OBJ", 1, "base"), (1, "SUBJ", 0, "base"),
           (2, "SUBJ", 0, "stripped-misc"), (2, "OBJ", 1, "stripped-misc")],
          [("A0", agent), ("A1", theme), ("A3", price)])


COLLISIONS = [
    ("Air molecules", "bump", "things", "present"),
    ("The waves", "crash", "the rocks", "present"),
    ("The car", "crash", "the wall", "past"),
    ("Children", "run", "the room", "present"),
    ("The boat", "bump", "the dock", "past"),
    ("Shoppers", "bump", "each other", "present"),
]


def collision_frames(b):
  for n, (agent, verb, thing, tense) in enumerate(COLLISIONS):
    f = FORMS[verb]
    word = f["past"] if tense == "past" else (
        f["stem"] if agent.split()[-1].endswith("s") or agent == "Children" else f["present3sg"])
    q0 = (slots("what", "", "", f["past"], "past", "", "into", "something") if tense == "past"
          else slots("what", "", "", f["present3sg"], "present3sg", "", "into", "something"))
    q1 = slots("what", "did" if tense == "past" else "does", "something", verb, "stem", "",
               "into")
    b.add(f"into-{n}", f"{agent} {word} into {thing} .", verb, "01", word,
          [(q0, agent), (q1, thing)],
          [(0, "MISC", 1, "base"), (1, "SUBJ", 0, "base")],
          [("A0", agent), ("A1", thing)])


ARRIVALS = [
    ("The tourists", "arrive", "in Mexico"),
    ("The train", "arrive", "at the station"),
    ("Guests", "arrive", "at the hotel"),
    ("The letter", "arrive", "in the mail"),
    ("Refugees", "arrive", "at the border"),
    ("The delegates", "arrive", "in Geneva"),
    ("Spring", "arrive", "in the valley"),
]


def arrival_frames(b):
  for n, (agent, verb, place) in enumerate(ARRIVALS):
    f = FORMS[verb]
    b.add(f"arrive-{n}", f"{agent} {f['past']} {place} .", verb, "01", f["past"],
          [(slots("who", "", "", f["past"], "past", "", "", "somewhere"), agent),
           (slots("where", "did", "someone", verb, "stem"), place)],
          [(0, "MISC", 1, "base"), (1, "SUBJ", 0, "base")],
          [("A1", agent), ("A4", place)])


GIVING = [
    ("The teacher", "give", "the students", "homework"),
    ("Grandma", "send", "her grandson", "a letter"),
    ("The bank", "lend", "the family", "money"),
    ("A stranger", "hand", "the boy", "a map"),
]


def ditransitive_frames(b):
  for n, (agent, verb, recipient, theme) in enumerate(GIVING):
    f = FORMS[verb]
    b.add(f"give-{n}", f"{agent} {f['past']} {recipient} {theme} .", verb, "01", f["past"],
          [(slots("who", "", "", f["past"], "past", "someone", "", "something"), agent),
           (slots("who", "did", "someone", verb, "stem", "something"), recipient),
           (slots("what", "did", "someone", verb, "stem", "someone"), theme)],
          [(0, "OBJ", 1, "base"), (0, "MISC", 2, "base"), (1, "SUBJ", 0, "base"),
           (1, "OBJ", 2, "base"), (2, "SUBJ", 0, "base"), (2, "OBJ", 1, "base")],
          [("A0", agent), ("A2", recipient), ("A1", theme)])


SINGLES = [
    ("Prices rose sharply .", "rise", "rose", slots("what", "", "", "rose", "past"), "Prices"),
    ("The geologist studied the rocks .", "study", "studied",
     slots("who", "", "", "studied", "past", "something"), "The geologist"),
    ("The old bridge collapsed .", "collapse", "collapsed",
     slots("what", "", "", "collapsed", "past"), "The old bridge"),
    ("Someone opened the window .", "open", "opened",
     slots("what", "did", "someone", "open", "stem"), "the window"),
    ("The storm destroyed the harbor .", "destroy", "destroyed",
     slots("what", "was", "", "destroyed", "past-participle"), "the harbor"),
    ("Nobody answered .", "answer", "answered", slots("who", "", "", "answered", "past"),
     "Nobody"),
]


def single_frames(b):
  for n, (sentence, lemma, word, s, answer) in enumerate(SINGLES):
    b.add(f"single-{n}", sentence, lemma, "01", word, [(s, answer)], [], [])


def main():
  rng = random.Random(SEED)
  rows = make_questions(rng)
  with open(os.path.join(OUT, "questions.tsv"), "w") as f:
    f.write("# question\tprototype\tcase\n")
    for r in rows:
      f.write("\t".join(r) + "\n")

  b = FrameBuilder()
  transitive_frames(b)
  locative_frames(b)
  priced_frames(b)
  collision_frames(b)
  arrival_frames(b)
  ditransitive_frames(b)
  single_frames(b)
  with open(os.path.join(OUT, "frames.jsonl"), "w") as f:
    for fr in b.frames:
      f.write(json.dumps(fr, sort_keys=True) + "\n")
  with open(os.path.join(OUT, "frames_expected.tsv"), "w") as f:
    f.write("# sentence_id\tentry\tslot\tsource_entry\trule\n")
    for e in b.expected:
      f.write("\t".join(str(x) for x in e) + "\n")
  with open(os.path.join(OUT, "gold.jsonl"), "w") as f:
    for g in b.gold:
      f.write(json.dumps(g, sort_keys=True) + "\n")
  print(f"{len(rows)} questions, {len(b.frames)} frames, {len(b.expected)} expected fills")


if __name__ == "__main__":
  main()
