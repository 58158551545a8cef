"""Command-line entry point wiring the pipeline together.

Exit codes: 0 on success, 1 for input errors, 2 when an upstream service
fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import classifier, corpus, synth
from .charstream import load_metadata_records, record_to_dict, validate_charstream
from .doi import DoiClient, DoiClientConfig
from .errors import InputError, ServiceError
from .layout import box_to_dict, build_lines
from .matcher import labeled_box_to_dict
from .pipeline import PipelineConfig, labeled_page_rows, process_page, reconstruct_page
from .render import render_svg


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(parser):
    parser.add_argument("--config", help="pipeline config JSON")
    parser.add_argument("--out", help="output file or directory")
    parser.add_argument("--offline", action="store_true", help="force fixture mode for DOI lookups")
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers for documents")


def _load_config(args) -> PipelineConfig:
    config = PipelineConfig.from_file(args.config) if args.config else PipelineConfig()
    if getattr(args, "offline", False):
        config.doi = DoiClientConfig(
            base_url=config.doi.base_url,
            cache_dir=config.doi.cache_dir,
            mode="fixture",
            min_request_interval=config.doi.min_request_interval,
            timeout=config.doi.timeout,
        )
    if getattr(args, "seed", None) is not None:
        config.seed = args.seed
    return config


def _read_page(path: str):
    return validate_charstream(Path(path).read_text(encoding="utf-8"))


def _emit(args, name: str, text: str) -> None:
    """Write to --out (a file when it has a suffix, else a directory)."""
    if args.out:
        out = Path(args.out)
        if out.suffix:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
        else:
            out.mkdir(parents=True, exist_ok=True)
            (out / name).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _jsonl(rows) -> str:
    return "".join(json.dumps(row, ensure_ascii=False) + "\n" for row in rows)


def cmd_lines(args) -> int:
    config = _load_config(args)
    rows = []
    for path in args.charstreams:
        page = _read_page(path)
        for line in build_lines(page, config.layout):
            rows.append(
                {
                    "doc_id": page.doc_id,
                    "x0": line.x0,
                    "y0": line.y0,
                    "x1": line.x1,
                    "y1": line.y1,
                    "text": line.text,
                    "dominant_size": line.dominant_size,
                }
            )
    _emit(args, "lines.jsonl", _jsonl(rows))
    return 0


def cmd_boxes(args) -> int:
    config = _load_config(args)
    rows = []
    for path in args.charstreams:
        page = _read_page(path)
        for box in reconstruct_page(page, config):
            rows.append(box_to_dict(box, page.doc_id))
    _emit(args, "boxes.jsonl", _jsonl(rows))
    return 0


def _label_one(path: str, record_objs: dict, config: PipelineConfig):
    from .charstream import record_from_dict

    page = _read_page(path)
    # records are keyed by the doc_id inside the file, not the filename
    record_obj = record_objs.get(page.doc_id)
    record = record_from_dict(record_obj) if record_obj else None
    labeled = process_page(page, record, config)
    return page, labeled


def _label_documents(paths, records, config, jobs: int):
    """Label documents, optionally in parallel; output keeps input order."""
    record_objs = {doc_id: record_to_dict(r) for doc_id, r in records.items()}
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_label_one, paths,
                                    [record_objs] * len(paths), [config] * len(paths)))
    else:
        results = [_label_one(path, record_objs, config) for path in paths]
    return results


def _doc_id_keyed_records(args):
    if not args.records:
        return {}
    with open(args.records, encoding="utf-8") as fh:
        return load_metadata_records(fh)


def cmd_label(args) -> int:
    config = _load_config(args)
    records = _doc_id_keyed_records(args)
    rows = []
    for page, labeled in _label_documents(args.charstreams, records, config, args.jobs):
        for lb in labeled.boxes:
            rows.append(labeled_box_to_dict(labeled.doc_id, labeled.journal_id, lb))
    _emit(args, "labeled.jsonl", _jsonl(rows))
    return 0


def _group_labeled_rows(rows):
    """Group labeled JSONL rows by doc_id, preserving file order."""
    docs: dict[str, list[dict]] = {}
    for row in rows:
        docs.setdefault(row["doc_id"], []).append(row)
    for doc_rows in docs.values():
        doc_rows.sort(key=lambda r: r["order"])
    return docs


def _read_jsonl(path):
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def cmd_corpus(args) -> int:
    docs = _group_labeled_rows(_read_jsonl(args.labeled))
    pretrain_lines = []
    finetune_rows = []
    for doc_id, rows in docs.items():
        pretrain_lines.append(corpus.join_box_texts([r["text"] for r in rows]))
        for r in rows:
            finetune_rows.append(
                {
                    "text": r["text"],
                    "label": r["label"],
                    "doc_id": r["doc_id"],
                    "journal_id": r.get("journal_id", ""),
                    "order": r["order"],
                }
            )
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    (out / "pretrain.txt").write_text("".join(l + "\n" for l in pretrain_lines), encoding="utf-8")
    (out / "finetune.jsonl").write_text(_jsonl(finetune_rows), encoding="utf-8")
    return 0


def cmd_vocab(args) -> int:
    with open(args.corpus, encoding="utf-8") as fh:
        vocab = corpus.build_vocab(fh, target_size=args.size)
    _emit(args, "vocab.txt", corpus.vocab_file_text(vocab))
    return 0


def cmd_config(args) -> int:
    config = corpus.emit_model_config(args.preset)
    _emit(args, f"config-{args.preset}.txt", corpus.model_config_text(config))
    return 0


def _rows_from_labeled_file(path):
    rows = []
    for r in _read_jsonl(path):
        rows.append(
            classifier.DataRow(
                text=r["text"],
                label=r["label"],
                doc_id=r["doc_id"],
                journal_id=r.get("journal_id", ""),
                position=classifier.BoxPosition(
                    x0=r["x0"], y0=r["y0"], x1=r["x1"], y1=r["y1"], order=r["order"]
                ),
            )
        )
    return rows


def _feature_spec(text: str) -> classifier.FeatureSpec:
    names = {part.strip() for part in text.split(",") if part.strip()}
    unknown = names - {"text", "position"}
    if unknown:
        raise InputError(f"unknown feature names: {sorted(unknown)}")
    return classifier.FeatureSpec(use_text="text" in names, use_position="position" in names)


def cmd_train(args) -> int:
    rows = _rows_from_labeled_file(args.labeled)
    if args.test_journals:
        rows, _ = classifier.split_by_journal(rows, args.test_journals.split(","))
    model = classifier.train(rows, _feature_spec(args.features))
    _emit(args, "model.txt", classifier.model_to_text(model))
    return 0


def cmd_eval(args) -> int:
    with open(args.model, encoding="utf-8") as fh:
        model = classifier.model_from_text(fh.read())
    rows = _rows_from_labeled_file(args.labeled)
    split = "all"
    if args.test_journals:
        _, rows = classifier.split_by_journal(rows, args.test_journals.split(","))
        split = f"test_journals={args.test_journals}"
    preds = [classifier.predict(model, r.text, r.position)[0] for r in rows]
    report = classifier.evaluate(preds, [r.label for r in rows], split=split)
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.txt").write_text(classifier.report_to_text(report), encoding="utf-8")
    (out / "report.json").write_text(classifier.report_to_json(report), encoding="utf-8")
    sys.stdout.write(classifier.report_to_text(report))
    return 0


def cmd_render(args) -> int:
    config = _load_config(args)
    records = _doc_id_keyed_records(args)
    page = _read_page(args.charstream)
    record = records.get(page.doc_id)
    labeled = process_page(page, record, config)
    _emit(args, f"{page.doc_id}.svg", render_svg(page, labeled))
    return 0


def cmd_doi(args) -> int:
    mode = "fixture" if args.offline else "online"
    config = DoiClientConfig(cache_dir=args.cache, mode=mode)
    record = DoiClient(config).fetch_metadata(args.doi)
    sys.stdout.write(json.dumps(record_to_dict(record), ensure_ascii=False) + "\n")
    return 0


def _styles_for(family: str):
    registry = synth.style_registry()
    if family == "all":
        return [s for styles in registry.values() for s in styles]
    if family not in registry:
        raise InputError(f"unknown style family {family!r}; have {sorted(registry)} or 'all'")
    return registry[family]


def cmd_synth(args) -> int:
    docs = synth.generate_synthetic(_styles_for(args.family), args.docs, args.seed)
    synth.write_synthetic(docs, args.out or "synthetic")
    return 0


def cmd_pipeline(args) -> int:
    config = _load_config(args)
    out = Path(args.out or "pipeline-out")
    out.mkdir(parents=True, exist_ok=True)

    if args.synth:
        docs = synth.generate_synthetic(_styles_for(args.synth), args.docs, args.seed)
        synth.write_synthetic(docs, out / "synthetic")
        input_dir = out / "synthetic"
    else:
        if not args.input:
            raise InputError("pipeline needs --in DIR or --synth FAMILY")
        input_dir = Path(args.input)

    char_dir = input_dir / "charstreams"
    paths = sorted(str(p) for p in char_dir.glob("*.json"))
    if not paths:
        raise InputError(f"no charstreams under {char_dir}")
    records_path = input_dir / "records.jsonl"
    records = {}
    if records_path.is_file():
        with open(records_path, encoding="utf-8") as fh:
            records = load_metadata_records(fh)

    labeled_rows = []
    data_rows = []
    pretrain_lines = []
    finetune_rows = []
    for page, labeled in _label_documents(paths, records, config, args.jobs):
        for lb in labeled.boxes:
            labeled_rows.append(labeled_box_to_dict(labeled.doc_id, labeled.journal_id, lb))
        line, rows = corpus.serialize_page(labeled)
        pretrain_lines.append(line)
        finetune_rows.extend(rows)
        data_rows.extend(labeled_page_rows(page, labeled))

    (out / "labeled.jsonl").write_text(_jsonl(labeled_rows), encoding="utf-8")
    corpus_dir = out / "corpus"
    corpus_dir.mkdir(exist_ok=True)
    (corpus_dir / "pretrain.txt").write_text(
        "".join(l + "\n" for l in pretrain_lines), encoding="utf-8"
    )
    (corpus_dir / "finetune.jsonl").write_text(_jsonl(finetune_rows), encoding="utf-8")

    vocab = corpus.build_vocab(pretrain_lines, target_size=args.vocab_size)
    (out / "vocab.txt").write_text(corpus.vocab_file_text(vocab), encoding="utf-8")

    config_dir = out / "config"
    config_dir.mkdir(exist_ok=True)
    for preset in ("base", "small", "tiny"):
        (config_dir / f"{preset}.txt").write_text(
            corpus.model_config_text(corpus.emit_model_config(preset)), encoding="utf-8"
        )

    split = "all"
    train_rows, eval_rows = data_rows, data_rows
    if args.test_journals:
        train_rows, eval_rows = classifier.split_by_journal(
            data_rows, args.test_journals.split(",")
        )
        split = f"test_journals={args.test_journals}"
    model = classifier.train(train_rows, config.features)
    (out / "model.txt").write_text(classifier.model_to_text(model), encoding="utf-8")
    preds = [classifier.predict(model, r.text, r.position)[0] for r in eval_rows]
    report = classifier.evaluate(preds, [r.label for r in eval_rows], split=split)
    (out / "report.txt").write_text(classifier.report_to_text(report), encoding="utf-8")
    (out / "report.json").write_text(classifier.report_to_json(report), encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lame", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lines", help="dump reconstructed text lines")
    p.add_argument("charstreams", nargs="+")
    _add_common(p)
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("boxes", help="dump ordered text boxes")
    p.add_argument("charstreams", nargs="+")
    _add_common(p)
    p.set_defaults(func=cmd_boxes)

    p = sub.add_parser("label", help="auto-label boxes against metadata records")
    p.add_argument("charstreams", nargs="+")
    p.add_argument("--records", help="metadata records JSONL")
    _add_common(p)
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("corpus", help="build pretrain/finetune corpus from labeled boxes")
    p.add_argument("--labeled", required=True)
    _add_common(p)
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("vocab", help="build the subword vocabulary")
    p.add_argument("--corpus", required=True, help="pretrain corpus text file")
    p.add_argument("--size", type=int, default=10000)
    _add_common(p)
    p.set_defaults(func=cmd_vocab)

    p = sub.add_parser("config", help="emit a model config preset")
    p.add_argument("preset", choices=["base", "small", "tiny"])
    _add_common(p)
    p.set_defaults(func=cmd_config)

    p = sub.add_parser("train", help="train the baseline classifier")
    p.add_argument("--labeled", required=True)
    p.add_argument("--features", default="text", help="comma list: text,position")
    p.add_argument("--test-journals", help="journals to hold out")
    _add_common(p)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("eval", help="evaluate a trained classifier")
    p.add_argument("--model", required=True)
    p.add_argument("--labeled", required=True)
    p.add_argument("--test-journals", help="evaluate only on these journals")
    _add_common(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("render", help="render an SVG overlay of labeled boxes")
    p.add_argument("charstream")
    p.add_argument("--records", help="metadata records JSONL")
    _add_common(p)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("doi", help="fetch metadata for a DOI")
    p.add_argument("doi")
    p.add_argument("--cache", default="doi-cache")
    _add_common(p)
    p.set_defaults(func=cmd_doi)

    p = sub.add_parser("synth", help="generate the synthetic corpus")
    p.add_argument("--family", default="layout", help="layout, ablation, or all")
    p.add_argument("--docs", type=int, default=10, help="documents per style")
    _add_common(p)
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("pipeline", help="run the full pipeline")
    p.add_argument("--in", dest="input", help="input dir with charstreams/ and records.jsonl")
    p.add_argument("--synth", help="generate inputs from a style family instead")
    p.add_argument("--docs", type=int, default=5, help="documents per style for --synth")
    p.add_argument("--vocab-size", type=int, default=10000)
    p.add_argument("--test-journals", help="journal-disjoint eval split")
    _add_common(p)
    p.set_defaults(func=cmd_pipeline)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ServiceError as exc:
        print(f"lame: service error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"lame: input error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"lame: input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
