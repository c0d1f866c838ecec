#!/usr/bin/env python3
"""Expected letter-bigram counts of English running text, from a wordfreq word list.

Words are sampled by frequency and concatenated with spaces removed, so each
word contributes its internal bigrams and each word boundary contributes a
(last letter, first letter) pair. Counts are scaled to `--words` words of text.

usage: wordfreq_bigrams.py large_en.msgpack.gz [--words N] > english_bigrams.txt
"""
import argparse
import gzip
import string

import msgpack


def load_frequencies(path):
    with gzip.open(path, "rb") as f:
        data = msgpack.load(f, raw=False)
    freqs = {}
    for bucket, words in enumerate(data[1:]):
        p = 10.0 ** (-bucket / 100)
        for w in words:
            letters = "".join(c for c in w.lower() if c in string.ascii_lowercase)
            if letters and letters.isascii():
                freqs[letters] = freqs.get(letters, 0.0) + p
    return freqs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("data")
    ap.add_argument("--words", type=float, default=1e8)
    args = ap.parse_args()

    freqs = load_frequencies(args.data)
    total = sum(freqs.values())
    letters = string.ascii_lowercase
    counts = {a + b: 0.0 for a in letters for b in letters}
    first = dict.fromkeys(letters, 0.0)
    last = dict.fromkeys(letters, 0.0)
    for w, f in freqs.items():
        p = f / total
        for i in range(len(w) - 1):
            counts[w[i : i + 2]] += p
        first[w[0]] += p
        last[w[-1]] += p
    for a in letters:
        for b in letters:
            counts[a + b] += last[a] * first[b]
    for bg in sorted(counts):
        print(bg, round(counts[bg] * args.words))


if __name__ == "__main__":
    main()
