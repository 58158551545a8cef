"""Drive the PDF backend and emit charstream files.

The extractor stays deliberately dumb: raw glyphs only, no line or box
reconstruction. Everything downstream of the glyph level belongs to the
consuming pipeline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .content import ContentInterpreter, page_content
from .errors import NoTextLayer, PageOutOfRange, UnreadablePdf
from .pdfobjects import Document

SCHEMA_TAG = "lame.charstream/1"


@dataclass(frozen=True)
class ExtractionOptions:
    page_index: int = 0
    min_glyph_size: float = 1.0
    journal_id: str = ""

    def __post_init__(self):
        if self.page_index < 0:
            raise ValueError("page_index must be >= 0")


def _media_box(document: Document, page: dict) -> tuple[float, float]:
    box = document.resolve(page.get("MediaBox")) or [0, 0, 612, 792]
    values = [float(document.resolve(v)) for v in box]
    if len(values) != 4:
        raise UnreadablePdf("malformed MediaBox")
    return values[2] - values[0], values[3] - values[1]


def extract_chars(pdf_path: str | Path, options: ExtractionOptions | None = None) -> dict:
    """Extract one page of glyphs as a charstream document (as a dict)."""
    options = options or ExtractionOptions()
    path = Path(pdf_path)
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise UnreadablePdf(f"{path}: {exc}") from exc

    document = Document(data)
    pages = document.pages()
    if options.page_index >= len(pages):
        raise PageOutOfRange(
            f"{path.name}: page {options.page_index} of a {len(pages)}-page document"
        )
    page = pages[options.page_index]
    width, height = _media_box(document, page)

    interpreter = ContentInterpreter(document, page.get("Resources") or {})
    raw_glyphs = interpreter.run(page_content(document, page))

    chars = []
    for g in raw_glyphs:
        if g.size < options.min_glyph_size:
            continue
        x0, x1 = max(g.x0, 0.0), min(g.x1, width)
        y0, y1 = max(g.y0, 0.0), min(g.y1, height)
        if x0 >= x1 or y0 >= y1:
            continue  # degenerate or entirely off-page
        chars.append(
            {
                "t": g.text,
                "x0": round(x0, 3),
                "y0": round(y0, 3),
                "x1": round(x1, 3),
                "y1": round(y1, 3),
                "size": round(g.size, 3),
                "font": g.font,
                "bold": g.bold,
                "italic": g.italic,
            }
        )
    if not chars:
        raise NoTextLayer(f"{path.name}: page {options.page_index} has no text layer")

    return {
        "schema": SCHEMA_TAG,
        "doc_id": path.stem,
        "journal_id": options.journal_id,
        # The charstream is a standalone single-page document; the source
        # PDF page is recorded nowhere but the invocation.
        "page": {"index": 0, "width": width, "height": height},
        "chars": chars,
    }


def extract_to_file(
    pdf_path: str | Path, out_path: str | Path, options: ExtractionOptions | None = None
) -> dict:
    doc = extract_chars(pdf_path, options)
    out = Path(out_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(doc, ensure_ascii=False), encoding="utf-8")
    return doc
