"""Similarity scoring and automatic labeling of layout boxes.

Each ordered box is compared against the known metadata fields with a
mixed score: the mean of a normalized edit-distance ratio and a BLEU
score, both on a 0-100 scale. A field is assigned to the best-scoring
compatible box at or above the acceptance threshold; everything else is
labeled O.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import exp, log

from .charstream import MetadataRecord
from .errors import MissingRecord
from .layout import LayoutParams, TextBox, detect_language
from .textnorm import normalize_text

# Label set, in the listing order used for tie-breaks.
LABELS = (
    "O",
    "title_ko",
    "title_en",
    "org_ko",
    "org_en",
    "abstract_ko",
    "abstract_en",
    "keywords_ko",
    "keywords_en",
    "author_name_ko",
    "author_name_en",
)

LABEL_RANK = {label: i for i, label in enumerate(LABELS)}

# record field -> (label, joiner for list fields)
FIELD_LABELS = {
    "title_ko": ("title_ko", None),
    "title_en": ("title_en", None),
    "affiliations_ko": ("org_ko", "; "),
    "affiliations_en": ("org_en", "; "),
    "abstract_ko": ("abstract_ko", None),
    "abstract_en": ("abstract_en", None),
    "keywords_ko": ("keywords_ko", "; "),
    "keywords_en": ("keywords_en", "; "),
    "author_names_ko": ("author_name_ko", ", "),
    "author_names_en": ("author_name_en", ", "),
}


@dataclass(frozen=True, slots=True)
class MatcherParams:
    threshold: float = 80.0
    bleu_max_n: int = 4

    def __post_init__(self):
        if not 0 <= self.threshold <= 100:
            raise ValueError("threshold must be in [0, 100]")
        if self.bleu_max_n < 1:
            raise ValueError("bleu_max_n must be >= 1")


@dataclass(frozen=True, slots=True)
class LabeledBox:
    box: TextBox
    label: str
    score: float


@dataclass(frozen=True, slots=True)
class LabeledPage:
    doc_id: str
    journal_id: str
    boxes: tuple[LabeledBox, ...]


def levenshtein_distance(a: str, b: str) -> int:
    """Unit-cost edit distance over Unicode scalars, rolling two rows."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0:
        return lb
    if lb == 0:
        return la
    if lb > la:
        a, b, la, lb = b, a, lb, la
    prev = list(range(lb + 1))
    for i, ca in enumerate(a, 1):
        cur = [i] + [0] * lb
        for j, cb in enumerate(b, 1):
            sub = prev[j - 1] + (ca != cb)
            dele = prev[j] + 1
            ins = cur[j - 1] + 1
            best = sub if sub <= dele else dele
            cur[j] = best if best <= ins else ins
        prev = cur
    return prev[lb]


def levenshtein_ratio(a: str, b: str) -> float:
    """100 * (1 - distance / max length); 100 when both strings are empty."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 100.0
    return 100.0 * (1.0 - levenshtein_distance(a, b) / longest)


def _ngram_counts(tokens: list[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu(candidate: str, reference: str, params: MatcherParams | None = None) -> float:
    """BLEU with clipped n-gram precisions and brevity penalty, no smoothing.

    The n-gram order is capped by both token counts so that short metadata
    strings are not zeroed out by unreachable orders; a zero precision at
    any used order still yields 0.
    """
    params = params or MatcherParams()
    cand = candidate.split()
    ref = reference.split()
    max_n = min(params.bleu_max_n, len(cand), len(ref))
    if max_n == 0:
        return 0.0
    log_sum = 0.0
    for n in range(1, max_n + 1):
        counts = _ngram_counts(cand, n)
        ref_counts = _ngram_counts(ref, n)
        clipped = sum(min(c, ref_counts[g]) for g, c in counts.items())
        if clipped == 0:
            return 0.0
        log_sum += log(clipped / sum(counts.values()))
    bp = 1.0 if len(cand) >= len(ref) else exp(1.0 - len(ref) / len(cand))
    return bp * exp(log_sum / max_n)


def mixed_similarity(
    a: str, b: str, params: MatcherParams | None = None, combine: str = "mean"
) -> float:
    """Combine the edit-distance ratio and 100*BLEU on a 0-100 scale.

    "mean" is the default; "max" and "min" are available for experiments.
    """
    params = params or MatcherParams()
    lev = levenshtein_ratio(a, b)
    bl = 100.0 * bleu(a, b, params)
    if combine == "mean":
        return (lev + bl) / 2.0
    if combine == "max":
        return max(lev, bl)
    if combine == "min":
        return min(lev, bl)
    raise ValueError(f"unknown combine mode {combine!r}")


def reference_strings(record: MetadataRecord) -> dict[str, str]:
    """Normalized reference text per label for the populated fields."""
    refs = {}
    for field_name, value in record.populated_fields().items():
        label, joiner = FIELD_LABELS[field_name]
        text = joiner.join(value) if joiner is not None else value
        normalized, _ = normalize_text(text)
        if normalized:
            refs[label] = normalized
    return refs


def _language_compatible(label: str, box_language: str) -> bool:
    if label.endswith("_ko"):
        return box_language in ("ko", "mixed")
    return box_language in ("en", "mixed")


def label_page(
    boxes: list[TextBox],
    record: MetadataRecord,
    params: MatcherParams | None = None,
    layout_params: LayoutParams | None = None,
    doc_id: str | None = None,
    journal_id: str = "",
) -> LabeledPage:
    """Assign at most one box to each populated metadata field.

    Candidate (field, box) pairs are restricted to language-compatible,
    cleanly encoded boxes, then consumed greedily by descending mixed
    score; ties prefer the earlier box, then the label listing order.
    Boxes left over are labeled O with score 0.

    Raises MissingRecord when the record has no populated fields.
    """
    params = params or MatcherParams()
    layout_params = layout_params or LayoutParams()
    refs = reference_strings(record)
    if not refs:
        raise MissingRecord(f"record {record.doc_id} has no populated fields")

    prepared = []
    for idx, box in enumerate(boxes):
        normalized, ok = normalize_text(box.text)
        language = detect_language(normalized, layout_params) if normalized else None
        prepared.append((idx, normalized, ok, language))

    # A mixed score of at least t requires BLEU >= (2t - 100)/100, since the
    # edit-ratio component can contribute at most 100. Scoring the cheap
    # component first skips almost every non-matching pair.
    min_bleu = max(0.0, (2.0 * params.threshold - 100.0) / 100.0)

    candidates = []
    for label, ref in sorted(refs.items(), key=lambda kv: LABEL_RANK[kv[0]]):
        for idx, text, ok, language in prepared:
            if not ok or not text or language is None:
                continue
            if not _language_compatible(label, language):
                continue
            bl = bleu(text, ref, params)
            if min_bleu > 0.0 and bl < min_bleu:
                continue
            score = (levenshtein_ratio(text, ref) + 100.0 * bl) / 2.0
            if score >= params.threshold:
                candidates.append((-score, idx, LABEL_RANK[label], label))

    candidates.sort()
    assigned_box: dict[int, tuple[str, float]] = {}
    used_labels = set()
    for neg_score, idx, _, label in candidates:
        if idx in assigned_box or label in used_labels:
            continue
        assigned_box[idx] = (label, -neg_score)
        used_labels.add(label)

    labeled = []
    for idx, box in enumerate(boxes):
        label, score = assigned_box.get(idx, ("O", 0.0))
        labeled.append(LabeledBox(box=box, label=label, score=score))
    return LabeledPage(
        doc_id=record.doc_id if doc_id is None else doc_id,
        journal_id=journal_id,
        boxes=tuple(labeled),
    )


def labeled_box_to_dict(doc_id: str, journal_id: str, lb: LabeledBox) -> dict:
    """Row for the labeled-output JSONL interface."""
    return {
        "doc_id": doc_id,
        "journal_id": journal_id,
        "order": lb.box.order,
        "label": lb.label,
        "score": lb.score,
        "text": lb.box.text,
        "x0": lb.box.x0,
        "y0": lb.box.y0,
        "x1": lb.box.x1,
        "y1": lb.box.y1,
    }
