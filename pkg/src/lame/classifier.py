"""Baseline box classifier and the evaluation harness.

The classifier is a multinomial bag-of-features model with add-one
smoothing, standing in for a fine-tuned sequence model: deterministic,
dependency-free, and good enough to study how text features generalize
across journals while absolute position features do not.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    EmptySide,
    LengthMismatch,
    MissingPosition,
    SchemaError,
    UnknownLabel,
)
from .matcher import LABELS, LABEL_RANK
from .textnorm import normalize_text

MODEL_TAG = "lame.model/1"

# Position features quantize the box center on a fixed 100pt grid (10
# cells covering pages up to 1000pt a side) plus a reading-order bucket.
_GRID_CELL = 100.0
_GRID_MAX = 9
_RANK_MAX = 9


@dataclass(frozen=True)
class FeatureSpec:
    use_text: bool = True
    use_position: bool = False

    def __post_init__(self):
        if not (self.use_text or self.use_position):
            raise ValueError("at least one feature family must be enabled")


@dataclass(frozen=True)
class BoxPosition:
    """Geometry of a box: bounding box plus reading-order rank."""

    x0: float
    y0: float
    x1: float
    y1: float
    order: int


@dataclass(frozen=True)
class DataRow:
    """One classifier example: a labeled box with its context."""

    text: str
    label: str
    doc_id: str
    journal_id: str
    position: BoxPosition


@dataclass
class Model:
    feature_spec: FeatureSpec
    labels: tuple[str, ...]
    priors: dict[str, float]
    counts: dict[str, dict[str, float]]  # label -> feature -> smoothed count
    totals: dict[str, float]  # label -> sum of smoothed counts

    def scale(self, factor: float) -> "Model":
        """Uniformly scale all stored counts; predictions must not change."""
        return Model(
            feature_spec=self.feature_spec,
            labels=self.labels,
            priors=dict(self.priors),
            counts={l: {f: c * factor for f, c in per.items()} for l, per in self.counts.items()},
            totals={l: t * factor for l, t in self.totals.items()},
        )


def text_features(text: str) -> list[str]:
    normalized, _ = normalize_text(text)
    return ["t:" + tok for tok in normalized.split()]


def position_features(position: BoxPosition) -> list[str]:
    cx = (position.x0 + position.x1) / 2.0
    cy = (position.y0 + position.y1) / 2.0
    gx = min(_GRID_MAX, max(0, int(cx // _GRID_CELL)))
    gy = min(_GRID_MAX, max(0, int(cy // _GRID_CELL)))
    rank = min(_RANK_MAX, max(0, position.order))
    return [f"px:{gx}", f"py:{gy}", f"rank:{rank}"]


def _row_features(spec: FeatureSpec, text: str, position: BoxPosition | None) -> list[str]:
    feats: list[str] = []
    if spec.use_text:
        feats.extend(text_features(text))
    if spec.use_position:
        if position is None:
            raise MissingPosition("model uses position features but none was supplied")
        feats.extend(position_features(position))
    return feats


def train(rows: Sequence[DataRow], spec: FeatureSpec | None = None) -> Model:
    """Fit the multinomial model; smoothing is baked into the stored counts."""
    spec = spec or FeatureSpec()
    if not rows:
        raise ValueError("no training rows")
    for row in rows:
        if row.label not in LABEL_RANK:
            raise UnknownLabel(f"label {row.label!r} not in the label set")

    raw: dict[str, dict[str, int]] = {}
    label_counts: dict[str, int] = {}
    vocab: set[str] = set()
    for row in rows:
        label_counts[row.label] = label_counts.get(row.label, 0) + 1
        per = raw.setdefault(row.label, {})
        for feat in _row_features(spec, row.text, row.position):
            per[feat] = per.get(feat, 0) + 1
            vocab.add(feat)

    labels = tuple(l for l in LABELS if l in label_counts)
    total_rows = len(rows)
    priors = {l: label_counts[l] / total_rows for l in labels}

    counts: dict[str, dict[str, float]] = {}
    totals: dict[str, float] = {}
    for label in labels:
        per = raw.get(label, {})
        smoothed = {feat: per.get(feat, 0) + 1.0 for feat in sorted(vocab)}
        counts[label] = smoothed
        totals[label] = sum(per.values()) + len(vocab)
    return Model(feature_spec=spec, labels=labels, priors=priors, counts=counts, totals=totals)


def predict(
    model: Model, text: str, position: BoxPosition | None = None
) -> tuple[str, dict[str, float]]:
    """Posterior over labels and the argmax; ties go to the listing order.

    Features never seen in training fall back to the smoothing floor of
    one pseudo-occurrence, so the posterior stays proper.
    """
    feats = _row_features(model.feature_spec, text, position)
    log_scores = {}
    for label in model.labels:
        per = model.counts[label]
        total = model.totals[label]
        score = math.log(model.priors[label])
        for feat in feats:
            score += math.log(per.get(feat, 1.0) / total)
        log_scores[label] = score

    peak = max(log_scores.values())
    weights = {l: math.exp(s - peak) for l, s in log_scores.items()}
    norm = sum(weights.values())
    posterior = {l: w / norm for l, w in weights.items()}
    best = min(posterior.items(), key=lambda kv: (-kv[1], LABEL_RANK[kv[0]]))[0]
    return best, posterior


@dataclass(frozen=True)
class LabelScores:
    precision: float
    recall: float
    f1: float
    support: int


@dataclass(frozen=True)
class EvalReport:
    per_label: dict[str, LabelScores]
    micro_f1: float
    macro_f1: float
    split: str = ""


def evaluate(predictions: Sequence[str], golds: Sequence[str], split: str = "") -> EvalReport:
    """Per-label precision/recall/F1 plus micro and macro aggregates.

    A zero denominator yields 0; macro-F1 averages only labels that occur
    in the gold sequence.
    """
    if len(predictions) != len(golds):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(golds)} golds")
    if not golds:
        raise LengthMismatch("empty evaluation")

    tp: dict[str, int] = {}
    fp: dict[str, int] = {}
    fn: dict[str, int] = {}
    support: dict[str, int] = {}
    for pred, gold in zip(predictions, golds):
        support[gold] = support.get(gold, 0) + 1
        if pred == gold:
            tp[gold] = tp.get(gold, 0) + 1
        else:
            fp[pred] = fp.get(pred, 0) + 1
            fn[gold] = fn.get(gold, 0) + 1

    seen = sorted(
        set(support) | set(fp), key=lambda l: (LABEL_RANK.get(l, len(LABELS)), l)
    )
    per_label = {}
    for label in seen:
        t, p, n = tp.get(label, 0), fp.get(label, 0), fn.get(label, 0)
        precision = t / (t + p) if t + p else 0.0
        recall = t / (t + n) if t + n else 0.0
        f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        per_label[label] = LabelScores(precision, recall, f1, support.get(label, 0))

    pooled_tp = sum(tp.values())
    pooled_fp = sum(fp.values())
    pooled_fn = sum(fn.values())
    micro_p = pooled_tp / (pooled_tp + pooled_fp) if pooled_tp + pooled_fp else 0.0
    micro_r = pooled_tp / (pooled_tp + pooled_fn) if pooled_tp + pooled_fn else 0.0
    micro_f1 = 2 * micro_p * micro_r / (micro_p + micro_r) if micro_p + micro_r else 0.0

    gold_labels = [l for l in seen if support.get(l, 0) > 0]
    macro_f1 = sum(per_label[l].f1 for l in gold_labels) / len(gold_labels)
    return EvalReport(per_label=per_label, micro_f1=micro_f1, macro_f1=macro_f1, split=split)


def split_by_journal(
    rows: Sequence[DataRow], test_journals: Iterable[str]
) -> tuple[list[DataRow], list[DataRow]]:
    """Partition rows by journal so test layouts are unseen in training."""
    test_set = set(test_journals)
    train_rows = [r for r in rows if r.journal_id not in test_set]
    test_rows = [r for r in rows if r.journal_id in test_set]
    if not train_rows:
        raise EmptySide("journal split left no training rows")
    if not test_rows:
        raise EmptySide("journal split left no test rows")
    return train_rows, test_rows


def model_to_text(model: Model) -> str:
    """Versioned flat-text model file."""
    out = [MODEL_TAG]
    out.append(
        "features\tuse_text=%d\tuse_position=%d"
        % (model.feature_spec.use_text, model.feature_spec.use_position)
    )
    out.append("labels\t" + "\t".join(model.labels))
    for label in model.labels:
        out.append(f"prior\t{label}\t{model.priors[label]!r}")
        out.append(f"total\t{label}\t{model.totals[label]!r}")
    for label in model.labels:
        per = model.counts[label]
        for feat in sorted(per):
            out.append(f"count\t{label}\t{feat}\t{per[feat]!r}")
    return "\n".join(out) + "\n"


def model_from_text(text: str) -> Model:
    lines = text.splitlines()
    if not lines or lines[0] != MODEL_TAG:
        raise SchemaError(f"model file does not start with {MODEL_TAG!r}")
    spec = None
    labels: tuple[str, ...] = ()
    priors: dict[str, float] = {}
    totals: dict[str, float] = {}
    counts: dict[str, dict[str, float]] = {}
    for line in lines[1:]:
        if not line:
            continue
        parts = line.split("\t")
        kind = parts[0]
        if kind == "features":
            opts = dict(p.split("=", 1) for p in parts[1:])
            spec = FeatureSpec(
                use_text=opts.get("use_text") == "1",
                use_position=opts.get("use_position") == "1",
            )
        elif kind == "labels":
            labels = tuple(parts[1:])
            counts = {l: {} for l in labels}
        elif kind == "prior":
            priors[parts[1]] = float(parts[2])
        elif kind == "total":
            totals[parts[1]] = float(parts[2])
        elif kind == "count":
            counts[parts[1]][parts[2]] = float(parts[3])
        else:
            raise SchemaError(f"unknown model line kind {kind!r}")
    if spec is None or not labels:
        raise SchemaError("model file missing features or labels line")
    return Model(feature_spec=spec, labels=labels, priors=priors, counts=counts, totals=totals)


def report_to_text(report: EvalReport) -> str:
    """Aligned text table: one row per label plus the two aggregates."""
    rows = [("label", "precision", "recall", "f1", "support")]
    for label, scores in report.per_label.items():
        rows.append(
            (
                label,
                f"{scores.precision:.4f}",
                f"{scores.recall:.4f}",
                f"{scores.f1:.4f}",
                str(scores.support),
            )
        )
    rows.append(("Micro-F1", "", "", f"{report.micro_f1:.4f}", ""))
    rows.append(("Macro-F1", "", "", f"{report.macro_f1:.4f}", ""))
    widths = [max(len(r[i]) for r in rows) for i in range(5)]
    lines = []
    if report.split:
        lines.append(f"split: {report.split}")
    for r in rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def report_to_json(report: EvalReport) -> str:
    obj = {
        "split": report.split,
        "per_label": {
            label: {
                "precision": s.precision,
                "recall": s.recall,
                "f1": s.f1,
                "support": s.support,
            }
            for label, s in report.per_label.items()
        },
        "micro_f1": report.micro_f1,
        "macro_f1": report.macro_f1,
    }
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"
