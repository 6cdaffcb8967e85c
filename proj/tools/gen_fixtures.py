#!/usr/bin/env python3
# Copyright 2026 The Annolog Authors.
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

"""Writes the parse-document fixtures under data/fixtures/docs.

Each fixture lists tokens as (surface, lemma, tag, semantic types); node ids
are 1-based token positions and offsets are computed from the text.
Multi-word determiners such as "How many" are single tokens.
"""

import json
import os
import sys

PERSON = "com.ibm.hutt.Person"
COMPOSITION = "com.ibm.hutt.Composition"

FIXTURES = {
    "q_symbol": dict(
        text="What is the democratic party symbol?",
        tokens=[("What", "what", "WP"), ("is", "be", "VBZ"),
                ("the", "the", "DT"), ("democratic", "democratic", "JJ"),
                ("party", "party", "NN"), ("symbol", "symbol", "NN"),
                ("?", "?", ".")],
        root=6,
        edges=[("subj", 2, 1), ("pred", 2, 6), ("modifier", 6, 4),
               ("modifier", 6, 5), ("child", 6, 1), ("child", 6, 2),
               ("child", 6, 3), ("child", 6, 4), ("child", 6, 5),
               ("child", 6, 7)]),
    "q_river": dict(
        text="What is the longest river in the world?",
        tokens=[("What", "what", "WP"), ("is", "be", "VBZ"),
                ("the", "the", "DT"), ("longest", "long", "JJS"),
                ("river", "river", "NN"), ("in", "in", "IN"),
                ("the", "the", "DT"), ("world", "world", "NN"),
                ("?", "?", ".")],
        root=5,
        edges=[("subj", 2, 1), ("pred", 2, 5), ("modifier", 5, 4),
               ("modifier", 5, 6), ("objprep", 6, 8), ("child", 5, 1),
               ("child", 5, 2), ("child", 5, 3), ("child", 5, 4),
               ("child", 5, 6), ("child", 6, 8), ("child", 8, 7),
               ("child", 5, 9)]),
    "q_hexagons": dict(
        text="How many hexagons are on a soccer ball?",
        tokens=[("How many", "how many", "DT"),
                ("hexagons", "hexagon", "NNS"), ("are", "be", "VBP"),
                ("on", "on", "IN"), ("a", "a", "DT"),
                ("soccer", "soccer", "NN"), ("ball", "ball", "NN"),
                ("?", "?", ".")],
        root=3,
        edges=[("subj", 3, 2), ("modifier", 2, 1), ("modifier", 3, 4),
               ("objprep", 4, 7), ("modifier", 7, 6), ("child", 3, 2),
               ("child", 2, 1), ("child", 3, 4), ("child", 4, 7),
               ("child", 7, 5), ("child", 7, 6), ("child", 3, 8)]),
    "q_dome": dict(
        text="How much does the capitol dome weigh?",
        tokens=[("How much", "how much", "DT"), ("does", "do", "VBZ"),
                ("the", "the", "DT"), ("capitol", "capitol", "NN"),
                ("dome", "dome", "NN"), ("weigh", "weigh", "VB"),
                ("?", "?", ".")],
        root=6,
        edges=[("subj", 6, 5), ("modifier", 6, 1), ("modifier", 5, 4),
               ("child", 6, 1), ("child", 6, 2), ("child", 6, 5),
               ("child", 5, 3), ("child", 5, 4), ("child", 6, 7)]),
    "q_capitol": dict(
        text="When was the US capitol built?",
        tokens=[("When", "when", "WRB"), ("was", "be", "VBD"),
                ("the", "the", "DT"), ("US", "us", "NNP"),
                ("capitol", "capitol", "NN"), ("built", "build", "VBN"),
                ("?", "?", ".")],
        root=6,
        edges=[("whadv", 6, 1), ("subj", 6, 5), ("modifier", 5, 4),
               ("child", 6, 1), ("child", 6, 2), ("child", 6, 5),
               ("child", 5, 3), ("child", 5, 4), ("child", 6, 7)]),
    "q_woolf": dict(
        text="How did Virginia Woolf die?",
        tokens=[("How", "how", "WRB"), ("did", "do", "VBD"),
                ("Virginia", "virginia", "NNP"), ("Woolf", "woolf", "NNP"),
                ("die", "die", "VB"), ("?", "?", ".")],
        root=5,
        edges=[("whadv", 5, 1), ("subj", 5, 4), ("modifier", 4, 3),
               ("child", 5, 1), ("child", 5, 2), ("child", 5, 4),
               ("child", 4, 3), ("child", 5, 6)]),
    "q_club": dict(
        text="What Liverpool club spawned the Beatles?",
        tokens=[("What", "what", "WDT"), ("Liverpool", "liverpool", "NNP"),
                ("club", "club", "NN"), ("spawned", "spawn", "VBD"),
                ("the", "the", "DT"), ("Beatles", "beatles", "NNPS"),
                ("?", "?", ".")],
        root=4,
        edges=[("subj", 4, 3), ("modifier", 3, 2), ("child", 4, 3),
               ("child", 3, 1), ("child", 3, 2), ("child", 4, 6),
               ("child", 6, 5), ("child", 4, 7)]),
    "q_imperative": dict(
        text="Name the longest river in Africa.",
        tokens=[("Name", "name", "VB"), ("the", "the", "DT"),
                ("longest", "long", "JJS"), ("river", "river", "NN"),
                ("in", "in", "IN"), ("Africa", "africa", "NNP"),
                (".", ".", ".")],
        root=1,
        edges=[("modifier", 4, 3), ("modifier", 4, 5), ("objprep", 5, 6),
               ("child", 1, 4), ("child", 4, 2), ("child", 4, 3),
               ("child", 4, 5), ("child", 5, 6), ("child", 1, 7)]),
    "q_empty": dict(text="", tokens=[], root=0, edges=[]),
    "s_castof": dict(
        text="Olivier portrayed Hamlet in the film.",
        tokens=[("Olivier", "olivier", "NNP", [PERSON]),
                ("portrayed", "portray", "VBD"),
                ("Hamlet", "hamlet", "NNP"), ("in", "in", "IN"),
                ("the", "the", "DT"), ("film", "film", "NN", [COMPOSITION]),
                (".", ".", ".")],
        root=2,
        edges=[("subj", 2, 1), ("pred", 2, 3), ("modifier", 2, 4),
               ("objprep", 4, 6), ("child", 2, 1), ("child", 2, 3),
               ("child", 2, 4), ("child", 4, 6), ("child", 6, 5),
               ("child", 2, 7)]),
    "s_castof_two": dict(
        text="Olivier played Hamlet in the film and in the musical.",
        tokens=[("Olivier", "olivier", "NNP", [PERSON]),
                ("played", "play", "VBD"), ("Hamlet", "hamlet", "NNP"),
                ("in", "in", "IN"), ("the", "the", "DT"),
                ("film", "film", "NN", [COMPOSITION]), ("and", "and", "CC"),
                ("in", "in", "IN"), ("the", "the", "DT"),
                ("musical", "musical", "NN", [COMPOSITION]),
                (".", ".", ".")],
        root=2,
        edges=[("subj", 2, 1), ("pred", 2, 3), ("modifier", 2, 4),
               ("objprep", 4, 6), ("modifier", 2, 8), ("objprep", 8, 10),
               ("child", 2, 1), ("child", 2, 3), ("child", 2, 4),
               ("child", 4, 6), ("child", 6, 5), ("child", 2, 7),
               ("child", 2, 8), ("child", 8, 10), ("child", 10, 9),
               ("child", 2, 11)]),
}


def build(name, spec):
    text = spec["text"]
    nodes = []
    pos = 0
    for i, tok in enumerate(spec["tokens"], start=1):
        surface, lemma, tag = tok[:3]
        begin = text.index(surface, pos)
        end = begin + len(surface)
        pos = end
        nodes.append({"id": i, "begin": begin, "end": end, "lemma": lemma,
                      "pennTag": tag,
                      "semanticTypes": list(tok[3]) if len(tok) > 3 else []})
    edges = [{"type": t, "from": a, "to": b} for t, a, b in spec["edges"]]
    return {"id": name, "text": text, "root": spec["root"], "nodes": nodes,
            "edges": edges}


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(__file__), "..", "data", "fixtures", "docs")
    os.makedirs(out, exist_ok=True)
    for name, spec in FIXTURES.items():
        with open(os.path.join(out, name + ".json"), "w") as f:
            json.dump(build(name, spec), f, indent=2)
            f.write("\n")


if __name__ == "__main__":
    main()
