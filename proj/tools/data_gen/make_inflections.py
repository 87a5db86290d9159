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

"""Regenerates core/data/inflections.tsv.

Takes the most frequent English verbs (wordfreq) with their inflections
(lemminflect):

  python3 tools/data_gen/make_inflections.py > core/data/inflections.tsv
"""

import gzip
import os
import sys

import lemminflect
import wordfreq

LIMIT = 3000
# Auxiliaries and modals are closed-class tokens in the question grammar.
SKIP = {"be", "do", "have", "will", "shall", "can", "may", "must", "might",
        "would", "could", "should", "ought", "need", "dare"}
# Words the question grammar reads as prepositions, particles or placeholders.
SKIP |= {"about", "above", "across", "after", "along", "around", "back",
         "down", "home", "near", "off", "out", "over", "up", "forward",
         "something", "someone", "somewhere", "while", "like", "even", "well",
         "just", "still", "right", "last", "next", "best", "better", "no",
         "yes", "okay", "ok", "please", "thank", "thanks"}


def verb_lemmas():
    path = os.path.join(os.path.dirname(lemminflect.__file__), "resources",
                        "infl_lu.csv.gz")
    with gzip.open(path, "rt") as f:
        for line in f:
            cols = line.strip().split(",")
            lemma = cols[0]
            if cols[1] == "verb" and lemma.isalpha() and lemma.islower() \
                    and lemma not in SKIP:
                yield lemma


def main():
    verbs = sorted(set(verb_lemmas()),
                   key=lambda v: (-wordfreq.word_frequency(v, "en"), v))
    out = sys.stdout
    out.write("# stem\tpresent3sg\tpast\tpast_participle\tpresent_participle\n")
    written = 0
    for lemma in verbs:
        forms = [lemma]
        for tag in ("VBZ", "VBD", "VBN", "VBG"):
            infl = lemminflect.getInflection(lemma, tag=tag)
            forms.append(infl[0] if infl else "")
        if not all(f.isalpha() for f in forms):
            continue
        out.write("\t".join(forms) + "\n")
        written += 1
        if written == LIMIT:
            break


if __name__ == "__main__":
    main()
