#!/usr/bin/env python3
# Copyright 2026 The attagree Authors.
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

"""Writes the small synthetic corpus used by the test suite.

The sentences come from a toy premise/hypothesis grammar; attribution
profiles are drawn around a shared latent token importance with
method-specific noise and word-class biases, so that methods disagree in
plausible ways. Output is deterministic for a given --seed.

    python3 tools/make_fixture.py --out fixtures/mini.jsonl
"""

import argparse
import json
import random

DETS = ["a", "the", "two", "some"]
ADJS = ["young", "old", "red", "small", "happy", "tall"]
NOUNS = ["man", "woman", "dog", "child", "car", "ball", "street", "guitar",
         "truck", "park", "boat", "shirt"]
VERBS = ["is", "plays", "walks", "rides", "holds", "sits", "runs", "is unloading"]
ADPS = ["in", "on", "near", "with"]
ADVS = ["quickly", "outside", "together"]
PRONS = ["he", "she", "they"]
STOP = {"a", "the", "two", "some", "is", "in", "on", "near", "with", "he",
        "she", "they", "not", "are"}
# Words split into subwords by the (imaginary) model tokenizer.
SUBWORDS = {"unloading": ["un", "##loading"], "guitar": ["gui", "##tar"],
            "together": ["to", "##gether"]}

METHODS = ["PartSHAP", "LIME", "VanGrad", "GradxI", "IntGrad", "IntGradxI"]


def noun_phrase(rng):
    words = [(rng.choice(DETS), "DET")]
    if rng.random() < 0.3:
        words.append((rng.choice(ADJS), "ADJ"))
    words.append((rng.choice(NOUNS), "NOUN"))
    return [("NP", words)]


def verb_phrase(rng):
    verb = rng.choice(VERBS)
    if " " in verb:
        aux, main = verb.split()
        chunks = [("VP", [(aux, "AUX"), (main, "VERB")])]
    else:
        chunks = [("VP", [(verb, "AUX" if verb == "is" else "VERB")])]
    r = rng.random()
    if r < 0.45:
        chunks += [("PP", [(rng.choice(ADPS), "ADP")])] + noun_phrase(rng)
    elif r < 0.75:
        chunks += noun_phrase(rng)
    if rng.random() < 0.2:
        chunks.append(("ADVP", [(rng.choice(ADVS), "ADV")]))
    return chunks


def sentence(rng, hypothesis=False):
    if hypothesis and rng.random() < 0.3:
        subject = [("NP", [(rng.choice(PRONS), "PRON")])]
    else:
        subject = noun_phrase(rng)
    chunks = subject + verb_phrase(rng)
    if rng.random() < 0.15:
        chunks.append(("O", [(",", "PUNCT")]))
        chunks += noun_phrase(rng)
    return chunks + [("O", [(".", "PUNCT")])]


def tokenize(chunks):
    tokens, spans, word_ids = [], [], []
    word = 0
    for label, words in chunks:
        start = len(tokens)
        for text, pos in words:
            pieces = SUBWORDS.get(text, [text])
            for piece in pieces:
                tokens.append({"text": piece, "pos": pos,
                               "is_stop": text in STOP,
                               "is_punct": pos == "PUNCT"})
                word_ids.append(word)
            word += 1
        if label == "O":
            label = "PUNCT"
        spans.append({"start": start, "end": len(tokens), "label": label})
    return tokens, spans, word_ids


def profiles(rng, tokens, word_ids):
    n = len(tokens)
    latent = []
    for t in tokens:
        base = {"NOUN": 0.9, "VERB": 0.8, "ADJ": 0.7, "ADV": 0.5, "PRON": 0.4,
                "AUX": 0.2, "ADP": 0.2, "DET": 0.1, "PUNCT": 0.15}[t["pos"]]
        latent.append(base * rng.uniform(0.3, 1.3))
    out = {}
    for m in METHODS:
        gradient_x = m in ("GradxI", "IntGrad", "IntGradxI")
        scores = []
        for i, t in enumerate(tokens):
            s = latent[i] + rng.gauss(0, 0.25)
            if gradient_x:
                if t["is_stop"]:
                    s += 0.35
                if t["is_punct"]:
                    s += 0.4
                s = s * rng.choice([1, 1, 1, -1]) if m != "IntGrad" else s
            scores.append(round(s, 6))
        out[m] = scores
    # Human rationale: fraction of three annotators, shared by subwords.
    votes = {}
    for i, w in enumerate(word_ids):
        if w not in votes:
            p = min(0.95, latent[i])
            votes[w] = sum(rng.random() < p * 0.8 for _ in range(3)) / 3
    human = [round(votes[w], 6) for w in word_ids]
    return out, human


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", required=True)
    ap.add_argument("--count", type=int, default=40)
    ap.add_argument("--seed", type=int, default=2024)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    with open(args.out, "w", encoding="utf-8") as f:
        for i in range(args.count):
            chunks = sentence(rng) + sentence(rng, hypothesis=True)
            tokens, spans, word_ids = tokenize(chunks)
            scores, human = profiles(rng, tokens, word_ids)
            record = {
                "id": f"fx-{i:03d}",
                "label": rng.choice(["entailment", "neutral", "contradiction"]),
                "tokens": tokens,
                "spans": spans,
                "profiles": scores,
                "human": human,
            }
            f.write(json.dumps(record, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
