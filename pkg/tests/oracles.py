"""Independent reference implementations used to check the real ones.

These stay deliberately naive: full-matrix dynamic programming for edit
distance and a direct transcription of the BLEU formula with explicit
n-gram enumeration.
"""

import math
from collections import Counter


def levenshtein_full_matrix(a: str, b: str) -> int:
    la, lb = len(a), len(b)
    d = [[0] * (lb + 1) for _ in range(la + 1)]
    for i in range(la + 1):
        d[i][0] = i
    for j in range(lb + 1):
        d[0][j] = j
    for i in range(1, la + 1):
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost)
    return d[la][lb]


def levenshtein_ratio_oracle(a: str, b: str) -> float:
    if not a and not b:
        return 100.0
    return 100.0 * (1.0 - levenshtein_full_matrix(a, b) / max(len(a), len(b)))


def _ngrams(tokens, n):
    return [tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1)]


def bleu_oracle(candidate: str, reference: str, max_n: int = 4) -> float:
    cand = candidate.split()
    ref = reference.split()
    n_max = min(max_n, len(cand), len(ref))
    if n_max == 0:
        return 0.0
    precisions = []
    for n in range(1, n_max + 1):
        cand_counts = Counter(_ngrams(cand, n))
        ref_counts = Counter(_ngrams(ref, n))
        clipped = sum(min(count, ref_counts[gram]) for gram, count in cand_counts.items())
        total = sum(cand_counts.values())
        precisions.append(clipped / total)
    if any(p == 0 for p in precisions):
        return 0.0
    geo_mean = math.exp(sum(math.log(p) for p in precisions) / n_max)
    bp = 1.0 if len(cand) >= len(ref) else math.exp(1.0 - len(ref) / len(cand))
    return bp * geo_mean
