"""End-to-end document processing and pipeline configuration."""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path

from .charstream import MetadataRecord, Page, validate_charstream
from .classifier import BoxPosition, DataRow, FeatureSpec
from .doi import DoiClient, DoiClientConfig
from .layout import LayoutParams, build_lines, merge_lines, order_boxes
from .matcher import LabeledBox, LabeledPage, MatcherParams, label_page


@dataclass
class PipelineConfig:
    layout: LayoutParams = field(default_factory=LayoutParams)
    matcher: MatcherParams = field(default_factory=MatcherParams)
    doi: DoiClientConfig = field(default_factory=lambda: DoiClientConfig(mode="fixture"))
    features: FeatureSpec = field(default_factory=FeatureSpec)
    seed: int = 0

    @classmethod
    def from_file(cls, path: str | Path) -> "PipelineConfig":
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
        return cls.from_dict(obj)

    @classmethod
    def from_dict(cls, obj: dict) -> "PipelineConfig":
        return cls(
            layout=LayoutParams(**obj.get("layout", {})),
            matcher=MatcherParams(**obj.get("matcher", {})),
            doi=DoiClientConfig(**({"mode": "fixture"} | obj.get("doi", {}))),
            features=FeatureSpec(**obj.get("features", {})),
            seed=obj.get("seed", 0),
        )


def reconstruct_page(page: Page, config: PipelineConfig):
    lines = build_lines(page, config.layout)
    boxes = merge_lines(lines, config.layout)
    return order_boxes(boxes)


def _all_o(page: Page, boxes) -> LabeledPage:
    return LabeledPage(
        doc_id=page.doc_id,
        journal_id=page.journal_id,
        boxes=tuple(LabeledBox(box=b, label="O", score=0.0) for b in boxes),
    )


def process_page(
    page: Page,
    record: MetadataRecord | None,
    config: PipelineConfig,
    doi_client: DoiClient | None = None,
) -> LabeledPage:
    """Reconstruct boxes and label them against the record, if resolvable.

    A record whose only content is a DOI triggers a lookup; with no record
    at all the page comes back labeled all O. Lookup failures propagate.
    """
    boxes = reconstruct_page(page, config)
    if record is not None and not record.populated_fields() and record.doi:
        client = doi_client or DoiClient(config.doi)
        fetched = client.fetch_metadata(record.doi)
        record = dataclasses.replace(fetched, doc_id=record.doc_id)
    if record is None or not record.populated_fields():
        return _all_o(page, boxes)
    labeled = label_page(
        boxes,
        record,
        config.matcher,
        config.layout,
        doc_id=page.doc_id,
        journal_id=page.journal_id,
    )
    return labeled


def process_document(
    charstream_path: str | Path,
    record: MetadataRecord | None = None,
    config: PipelineConfig | None = None,
    doi_client: DoiClient | None = None,
) -> LabeledPage:
    config = config or PipelineConfig()
    content = Path(charstream_path).read_text(encoding="utf-8")
    page = validate_charstream(content)
    return process_page(page, record, config, doi_client=doi_client)


def labeled_page_rows(page: Page, labeled: LabeledPage) -> list[DataRow]:
    """Classifier rows for one labeled page, geometry included."""
    rows = []
    for lb in labeled.boxes:
        b = lb.box
        rows.append(
            DataRow(
                text=b.text,
                label=lb.label,
                doc_id=labeled.doc_id,
                journal_id=labeled.journal_id,
                position=BoxPosition(x0=b.x0, y0=b.y0, x1=b.x1, y1=b.y1, order=b.order),
            )
        )
    return rows
