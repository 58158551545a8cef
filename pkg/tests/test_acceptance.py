"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the verdict lines.
"""

import filecmp
import json
import random
import time
from pathlib import Path

import pytest

from lame import classifier
from lame.charstream import validate_charstream
from lame.cli import main
from lame.corpus import emit_model_config, join_box_texts, parse_pretrain_line
from lame.layout import LayoutParams, build_lines, merge_lines, order_boxes
from lame.matcher import (
    MatcherParams,
    bleu,
    levenshtein_ratio,
    mixed_similarity,
    normalize_text,
    reference_strings,
)
from lame.pipeline import PipelineConfig, process_page
from lame.synth import (
    ablation_styles,
    generate_synthetic,
    layout_styles,
    substitute_noise,
)

from oracles import bleu_oracle, levenshtein_ratio_oracle

SEED = 20240811


def _verdict(name: str, ok: bool, detail: str = "") -> None:
    state = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {name}: {state}{suffix}")
    assert ok, f"{name} failed {suffix}"


@pytest.fixture(scope="module")
def layout_corpus():
    """1,000 synthetic pages, 125 per style across the 8 layout styles."""
    return generate_synthetic(layout_styles(), docs_per_style=125, seed=SEED)


def test_levenshtein_oracle_equivalence():
    rng = random.Random(SEED)
    alphabet = (
        "abcdefghijklmnopqrstuvwxyz"
        "가나다라마바사아자차카타파하한국어분석추출 "
    )
    pairs = []
    for _ in range(1000):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randrange(41)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randrange(41)))
        pairs.append((a, b))
    start = time.perf_counter()
    mismatches = sum(
        1 for a, b in pairs if levenshtein_ratio(a, b) != levenshtein_ratio_oracle(a, b)
    )
    elapsed = time.perf_counter() - start
    _verdict(
        "levenshtein-oracle",
        mismatches == 0 and elapsed < 5.0,
        f"1000 pairs, {mismatches} mismatches, {elapsed:.2f}s",
    )


def test_bleu_oracle_equivalence():
    rng = random.Random(SEED + 1)
    vocab = ["the", "cat", "sat", "mat", "on", "a", "학습", "모델", "결과", "x1"]
    worst = 0.0
    for _ in range(200):
        cand = " ".join(rng.choice(vocab) for _ in range(rng.randrange(14)))
        ref = " ".join(rng.choice(vocab) for _ in range(rng.randrange(14)))
        worst = max(worst, abs(bleu(cand, ref) - bleu_oracle(cand, ref)))
    _verdict("bleu-oracle", worst <= 1e-9, f"200 pairs, max |diff| {worst:.2e}")


def test_layout_recovery(layout_corpus):
    docs = layout_corpus[::2]  # 500 pages, all 8 styles represented
    assert len(docs) == 500
    assert len({d.page.journal_id for d in docs}) >= 7
    params = LayoutParams()
    box_errors = glyph_errors = 0
    start = time.perf_counter()
    for doc in docs:
        lines = build_lines(doc.page, params)
        boxes = order_boxes(merge_lines(lines, params))
        if sum(len(l.chars) for b in boxes for l in b.lines) != len(doc.page.chars):
            glyph_errors += 1
        if len(boxes) != len(doc.gold) or any(
            b.text != g.text
            or (b.x0, b.y0, b.x1, b.y1, b.order) != (g.x0, g.y0, g.x1, g.y1, g.order)
            for b, g in zip(boxes, doc.gold)
        ):
            box_errors += 1
    elapsed = time.perf_counter() - start
    _verdict(
        "layout-recovery",
        box_errors == 0 and glyph_errors == 0 and elapsed < 10.0,
        f"500 pages, {box_errors} box errors, {glyph_errors} glyph errors, {elapsed:.2f}s",
    )


def test_auto_labeling_noiseless_and_noisy():
    docs = generate_synthetic(layout_styles(), docs_per_style=5, seed=SEED + 2)
    config = PipelineConfig()
    clean_errors = 0
    for doc in docs:
        labeled = process_page(doc.page, doc.record, config)
        if [lb.label for lb in labeled.boxes] != [g.label for g in doc.gold]:
            clean_errors += 1

    rng = random.Random(SEED + 3)
    params = MatcherParams()
    noisy_errors = 0
    retained = 0
    for doc in docs:
        noisy = substitute_noise(doc.page, 0.10, rng)
        labeled = process_page(noisy, doc.record, config)
        refs = reference_strings(doc.record)
        gold_by_order = {g.order: g.label for g in doc.gold}
        for lb in labeled.boxes:
            gold_label = gold_by_order[lb.box.order]
            if lb.label != "O" and lb.label != gold_label:
                noisy_errors += 1  # mislabeled to a wrong field
        for lb in labeled.boxes:
            gold_label = gold_by_order[lb.box.order]
            if gold_label == "O":
                continue
            text, ok = normalize_text(lb.box.text)
            if not ok:
                continue
            score = mixed_similarity(text, refs[gold_label], params)
            if score >= params.threshold:
                retained += 1
                if lb.label != gold_label:
                    noisy_errors += 1
    _verdict(
        "auto-labeling",
        clean_errors == 0 and noisy_errors == 0,
        f"{len(docs)} docs clean, {retained} noisy fields at threshold, "
        f"{clean_errors + noisy_errors} errors",
    )


def test_metrics_correctness():
    report = classifier.evaluate(["A", "A", "A", "B"], ["A", "A", "B", "B"])
    pa, ra = 2 / 3, 1.0
    pb, rb = 1.0, 0.5
    f1a = 2 * pa * ra / (pa + ra)
    f1b = 2 * pb * rb / (pb + rb)
    exact = report.micro_f1 == 0.75 and report.macro_f1 == (f1a + f1b) / 2

    rng = random.Random(SEED + 4)
    labels = ["O", "title_en", "title_ko", "abstract_en", "keywords_en"]
    worst = 0.0
    for _ in range(100):
        n = rng.randrange(1, 60)
        golds = [rng.choice(labels) for _ in range(n)]
        preds = [rng.choice(labels) for _ in range(n)]
        accuracy = sum(p == g for p, g in zip(preds, golds)) / n
        worst = max(worst, abs(classifier.evaluate(preds, golds).micro_f1 - accuracy))
    _verdict(
        "metrics-correctness",
        exact and worst <= 1e-12,
        f"hand example exact={exact}, max |micro-accuracy| {worst:.2e}",
    )


def test_position_ablation_direction():
    docs = generate_synthetic(ablation_styles(), docs_per_style=24, seed=SEED + 5)
    test_journals = {"ablj-6", "ablj-7"}
    fit_rows, val_rows, test_rows = [], [], []
    for doc in docs:
        rows = [
            classifier.DataRow(
                text=g.text,
                label=g.label,
                doc_id=doc.page.doc_id,
                journal_id=doc.page.journal_id,
                position=classifier.BoxPosition(g.x0, g.y0, g.x1, g.y1, g.order),
            )
            for g in doc.gold
        ]
        index = int(doc.page.doc_id.rsplit("-", 1)[1])
        if doc.page.journal_id in test_journals:
            test_rows.extend(rows)
        elif index >= 18:  # seen-journal validation quarter
            val_rows.extend(rows)
        else:
            fit_rows.extend(rows)

    def macro(spec, rows):
        model = classifier.train(fit_rows, spec)
        preds = [classifier.predict(model, r.text, r.position)[0] for r in rows]
        return classifier.evaluate(preds, [r.label for r in rows]).macro_f1

    text_spec = classifier.FeatureSpec(use_text=True, use_position=False)
    pos_spec = classifier.FeatureSpec(use_text=False, use_position=True)
    text_test = macro(text_spec, test_rows)
    pos_val = macro(pos_spec, val_rows)
    pos_test = macro(pos_spec, test_rows)
    _verdict(
        "position-ablation",
        text_test >= 0.90 and pos_val >= 0.90 and pos_test <= 0.50,
        f"text held-out {text_test:.4f} >= 0.90, position seen {pos_val:.4f} >= 0.90, "
        f"position held-out {pos_test:.4f} <= 0.50",
    )


def test_corpus_roundtrip(layout_corpus):
    docs = layout_corpus
    assert len(docs) == 1000
    with_sep = 0
    failures = 0
    for doc in docs:
        texts = [g.text for g in doc.gold]
        if any("[SEP]" in t for t in texts):
            with_sep += 1
        line = join_box_texts(texts)
        if line.count(" [SEP] ") != len(texts) - 1:
            failures += 1
        elif parse_pretrain_line(line) != texts:
            failures += 1
    _verdict(
        "corpus-roundtrip",
        failures == 0 and with_sep > 0,
        f"1000 pages, {with_sep} pages with a literal [SEP], {failures} failures",
    )


def test_config_presets():
    expected = {
        "base": (12, 768, 12),
        "small": (4, 512, 8),
        "tiny": (2, 128, 2),
    }
    ok = True
    for preset, (layers, hidden, heads) in expected.items():
        config = emit_model_config(preset)
        ok = ok and (
            config.layers == layers
            and config.hidden_size == hidden
            and config.attention_heads == heads
            and config.epochs == 5
            and config.batch_size == 32
            and config.learning_rate == 2e-5
            and config.max_seq_len == 256
            and config.vocab_size == 10000
        )
    _verdict("config-presets", ok, "base 12/768/12, small 4/512/8, tiny 2/128/2")


def _tree_bytes(root: Path) -> dict[str, bytes]:
    return {
        str(p.relative_to(root)): p.read_bytes()
        for p in sorted(root.rglob("*"))
        if p.is_file()
    }


def test_pipeline_determinism(tmp_path):
    args = [
        "pipeline", "--synth", "layout", "--docs", "3", "--seed", "5",
        "--vocab-size", "2000", "--test-journals", "synthj-g,synthj-h",
    ]
    runs = []
    for name in ("run1", "run2"):
        out = tmp_path / name
        assert main([*args, "--out", str(out)]) == 0
        runs.append(_tree_bytes(out))
    same_names = set(runs[0]) == set(runs[1])
    diffs = [k for k in runs[0] if runs[0][k] != runs[1].get(k)]
    _verdict(
        "pipeline-determinism",
        same_names and not diffs,
        f"{len(runs[0])} files compared, differing: {diffs[:4]}",
    )
