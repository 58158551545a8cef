"""Canonical character-stream representation of a document page.

A charstream file is a single JSON object tagged "lame.charstream/1"
holding one page of positioned glyphs. Coordinates are in points with the
origin at the page's bottom-left corner and y increasing upward, so "top
of the page" means large y.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable

from .errors import EmptyPage, SchemaError
from .textnorm import count_scripts, normalize_text

SCHEMA_TAG = "lame.charstream/1"


@dataclass(frozen=True, slots=True)
class CharGlyph:
    """One extracted character with its box and font information."""

    text: str
    x0: float
    y0: float
    x1: float
    y1: float
    size: float
    font: str
    bold: bool = False
    italic: bool = False


@dataclass(frozen=True, slots=True)
class Page:
    doc_id: str
    journal_id: str
    page_index: int
    width: float
    height: float
    chars: tuple[CharGlyph, ...]


# The ten matchable metadata fields, in the order their labels are listed.
FIELD_NAMES = (
    "title_ko",
    "title_en",
    "affiliations_ko",
    "affiliations_en",
    "abstract_ko",
    "abstract_en",
    "keywords_ko",
    "keywords_en",
    "author_names_ko",
    "author_names_en",
)

_LIST_FIELDS = {
    "keywords_ko",
    "keywords_en",
    "author_names_ko",
    "author_names_en",
    "affiliations_ko",
    "affiliations_en",
}


@dataclass(frozen=True)
class MetadataRecord:
    """Ground-truth metadata for one document. Absent fields are None."""

    doc_id: str
    title_ko: str | None = None
    title_en: str | None = None
    abstract_ko: str | None = None
    abstract_en: str | None = None
    keywords_ko: tuple[str, ...] | None = None
    keywords_en: tuple[str, ...] | None = None
    author_names_ko: tuple[str, ...] | None = None
    author_names_en: tuple[str, ...] | None = None
    affiliations_ko: tuple[str, ...] | None = None
    affiliations_en: tuple[str, ...] | None = None
    doi: str | None = None

    def populated_fields(self) -> dict[str, Any]:
        """Matchable fields that are present and non-empty (doi excluded)."""
        out = {}
        for name in FIELD_NAMES:
            value = getattr(self, name)
            if value:
                out[name] = value
        return out


def _require(obj: dict, key: str, types: tuple, where: str):
    if key not in obj:
        raise SchemaError(f"{where}: missing field {key!r}")
    value = obj[key]
    # bool is an int subclass; only accept it where bool is listed.
    bad = not isinstance(value, types) or (isinstance(value, bool) and bool not in types)
    if bad:
        raise SchemaError(f"{where}: field {key!r} has wrong type {type(value).__name__}")
    return value


_NUM = (int, float)


def validate_charstream(document: str) -> Page:
    """Parse and validate raw charstream file content.

    Glyph boxes are clamped to the page bounds; a glyph whose box is
    degenerate (zero or negative extent, before or after clamping) raises
    SchemaError, as do missing or ill-typed fields and a wrong schema tag.
    A page with zero glyphs raises EmptyPage.
    """
    try:
        obj = json.loads(document)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise SchemaError("top level is not an object")
    if obj.get("schema") != SCHEMA_TAG:
        raise SchemaError(f"schema tag is {obj.get('schema')!r}, expected {SCHEMA_TAG!r}")

    doc_id = _require(obj, "doc_id", (str,), "document")
    journal_id = _require(obj, "journal_id", (str,), "document")
    page_obj = _require(obj, "page", (dict,), "document")
    index = _require(page_obj, "index", (int,), "page")
    width = float(_require(page_obj, "width", _NUM, "page"))
    height = float(_require(page_obj, "height", _NUM, "page"))
    if index != 0:
        raise SchemaError(f"page.index is {index}, pipeline inputs are first pages only")
    if width <= 0 or height <= 0:
        raise SchemaError(f"non-positive page size {width}x{height}")

    raw_chars = _require(obj, "chars", (list,), "document")
    if not raw_chars:
        raise EmptyPage(f"{doc_id}: page has no glyphs")

    glyphs = []
    for i, ch in enumerate(raw_chars):
        if not isinstance(ch, dict):
            raise SchemaError(f"chars[{i}]: not an object")
        where = f"chars[{i}]"
        text = _require(ch, "t", (str,), where)
        if len(text) != 1:
            raise SchemaError(f"{where}: 't' must be a single character, got {text!r}")
        x0 = float(_require(ch, "x0", _NUM, where))
        y0 = float(_require(ch, "y0", _NUM, where))
        x1 = float(_require(ch, "x1", _NUM, where))
        y1 = float(_require(ch, "y1", _NUM, where))
        size = float(_require(ch, "size", _NUM, where))
        font = _require(ch, "font", (str,), where)
        bold = _require(ch, "bold", (bool,), where)
        italic = _require(ch, "italic", (bool,), where)
        if size <= 0:
            raise SchemaError(f"{where}: non-positive size {size}")
        # Clamp marginal artifacts onto the page rather than dropping them.
        x0c = min(max(x0, 0.0), width)
        x1c = min(max(x1, 0.0), width)
        y0c = min(max(y0, 0.0), height)
        y1c = min(max(y1, 0.0), height)
        if x0c >= x1c or y0c >= y1c:
            raise SchemaError(f"{where}: degenerate box ({x0}, {y0}, {x1}, {y1})")
        glyphs.append(CharGlyph(text, x0c, y0c, x1c, y1c, size, font, bold, italic))

    return Page(doc_id, journal_id, index, width, height, tuple(glyphs))


def dump_page(page: Page) -> str:
    """Serialize a Page back to charstream file content."""
    obj = {
        "schema": SCHEMA_TAG,
        "doc_id": page.doc_id,
        "journal_id": page.journal_id,
        "page": {"index": page.page_index, "width": page.width, "height": page.height},
        "chars": [
            {
                "t": g.text,
                "x0": g.x0,
                "y0": g.y0,
                "x1": g.x1,
                "y1": g.y1,
                "size": g.size,
                "font": g.font,
                "bold": g.bold,
                "italic": g.italic,
            }
            for g in page.chars
        ],
    }
    return json.dumps(obj, ensure_ascii=False)


def record_from_dict(obj: dict) -> MetadataRecord:
    if not isinstance(obj, dict):
        raise SchemaError("metadata record is not an object")
    doc_id = _require(obj, "doc_id", (str,), "record")
    kwargs: dict[str, Any] = {}
    for name in FIELD_NAMES:
        if name not in obj or obj[name] is None:
            continue
        value = obj[name]
        if name in _LIST_FIELDS:
            if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
                raise SchemaError(f"record {doc_id}: {name} must be a list of strings")
            kwargs[name] = tuple(value)
        else:
            if not isinstance(value, str):
                raise SchemaError(f"record {doc_id}: {name} must be a string")
            kwargs[name] = value
    doi = obj.get("doi")
    if doi is not None:
        if not isinstance(doi, str):
            raise SchemaError(f"record {doc_id}: doi must be a string")
        kwargs["doi"] = doi
    if not kwargs:
        raise SchemaError(f"record {doc_id}: no fields besides doc_id")

    for name, value in kwargs.items():
        if not name.endswith("_ko"):
            continue
        joined = value if isinstance(value, str) else " ".join(value)
        normalized, _ = normalize_text(joined)
        if normalized and count_scripts(normalized)[0] == 0:
            raise SchemaError(f"record {doc_id}: {name} contains no Hangul")

    return MetadataRecord(doc_id=doc_id, **kwargs)


def record_to_dict(record: MetadataRecord) -> dict:
    out: dict[str, Any] = {"doc_id": record.doc_id}
    for name in FIELD_NAMES:
        value = getattr(record, name)
        if value is not None:
            out[name] = list(value) if isinstance(value, tuple) else value
    if record.doi is not None:
        out["doi"] = record.doi
    return out


def load_metadata_records(lines: Iterable[str]) -> dict[str, MetadataRecord]:
    """Parse a JSONL stream of metadata records, keyed by doc_id."""
    records = {}
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"records line {lineno}: not valid JSON: {exc}") from exc
        record = record_from_dict(obj)
        records[record.doc_id] = record
    return records
