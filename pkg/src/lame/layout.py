"""Reconstruction of text lines and text boxes from positioned glyphs.

The page is rebuilt bottom-up: glyphs are grouped into y-bands and split
on wide horizontal gaps to form TextLines, then vertically adjacent lines
are merged into TextBoxes unless an indentation jump, a width jump, or a
font change says they belong to different blocks. Finally boxes receive
reading-order ranks, top of the page first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace

from .charstream import CharGlyph, Page
from .textnorm import count_scripts, script_of

_SUBSET_PREFIX = re.compile(r"^[A-Z]{6}\+")

# A font key: (family name without subset prefix, bold, italic).
FontKey = tuple[str, bool, bool]


@dataclass(frozen=True, slots=True)
class LayoutParams:
    """Tolerances for the reconstruction rules, as fractions of font size.

    line_band_factor: two glyphs share a y-band when their y0 values
        differ by at most this fraction of the smaller glyph's size.
    gap_factor: a horizontal gap of at least gap_factor times the larger
        neighbor size splits a band into separate lines; gaps between a
        quarter of that threshold and the threshold become word spaces.
    indent_factor / width_slack_factor: x0 jump and line-width slack
        allowed between consecutive lines of one box.
    column_overlap_min: minimum x-interval overlap ratio for two lines to
        be considered part of the same column at all.
    hangul_ratio_threshold: band for the ko/en/mixed language decision.
    """

    line_band_factor: float = 0.5
    gap_factor: float = 1.0
    indent_factor: float = 1.0
    width_slack_factor: float = 1.0
    column_overlap_min: float = 0.3
    hangul_ratio_threshold: float = 0.3

    def __post_init__(self):
        for name in ("line_band_factor", "gap_factor", "indent_factor", "width_slack_factor"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if not 0 < self.column_overlap_min <= 1:
            raise ValueError("column_overlap_min must be in (0, 1]")
        if not 0 < self.hangul_ratio_threshold < 1:
            raise ValueError("hangul_ratio_threshold must be in (0, 1)")


@dataclass(slots=True)
class TextLine:
    chars: tuple[CharGlyph, ...]
    x0: float
    y0: float
    x1: float
    y1: float
    dominant_size: float
    text: str

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0


@dataclass(slots=True)
class TextBox:
    lines: tuple[TextLine, ...]
    x0: float
    y0: float
    x1: float
    y1: float
    text: str
    font_profile: dict[str, FontKey]
    order: int = -1


def font_key(glyph: CharGlyph) -> FontKey:
    """Font identity for comparisons, with any 6-letter subset tag removed."""
    return (_SUBSET_PREFIX.sub("", glyph.font), glyph.bold, glyph.italic)


def _modal(counts: dict) -> object:
    """Most frequent key; ties go to the smallest key for determinism."""
    return min(counts.items(), key=lambda kv: (-kv[1], kv[0]))[0]


def _dominant_size(glyphs) -> float:
    counts: dict[float, int] = {}
    for g in glyphs:
        counts[g.size] = counts.get(g.size, 0) + 1
    # Ties go to the larger size: thresholds follow the dominant face.
    return max(counts.items(), key=lambda kv: (kv[1], kv[0]))[0]


def _language_fonts(glyphs) -> dict[str, FontKey]:
    """Modal font key per language ("ko"/"en") over the given glyphs."""
    counts: dict[str, dict[FontKey, int]] = {}
    for g in glyphs:
        lang = script_of(g.text)
        if lang is None:
            continue
        per = counts.setdefault(lang, {})
        key = font_key(g)
        per[key] = per.get(key, 0) + 1
    return {lang: _modal(per) for lang, per in sorted(counts.items())}


def _make_line(glyphs: list[CharGlyph], params: LayoutParams) -> TextLine:
    glyphs = sorted(glyphs, key=lambda g: (g.x0, g.x1, g.y0, g.text))
    parts = [glyphs[0].text]
    for prev, cur in zip(glyphs, glyphs[1:]):
        gap = cur.x0 - prev.x1
        threshold = params.gap_factor * max(prev.size, cur.size)
        if 0.25 * threshold <= gap < threshold:
            parts.append(" ")
        parts.append(cur.text)
    return TextLine(
        chars=tuple(glyphs),
        x0=min(g.x0 for g in glyphs),
        y0=min(g.y0 for g in glyphs),
        x1=max(g.x1 for g in glyphs),
        y1=max(g.y1 for g in glyphs),
        dominant_size=_dominant_size(glyphs),
        text="".join(parts),
    )


def build_lines(page: Page, params: LayoutParams | None = None) -> list[TextLine]:
    """Partition the page's glyphs into text lines.

    Glyphs whose y0 values are close (transitively) share a y-band; within
    a band, a run is split wherever the horizontal gap to the next glyph
    reaches the split threshold. Every glyph lands in exactly one line.
    """
    params = params or LayoutParams()
    if not page.chars:
        return []

    # Group glyphs by exact y0 first: equal baselines always share a band,
    # and band connectivity between two baseline rows is decided by the
    # largest glyph on each (min of the pair maximizes the tolerance).
    rows: dict[float, list[CharGlyph]] = {}
    for g in page.chars:
        rows.setdefault(g.y0, []).append(g)
    row_ys = sorted(rows)
    row_max_size = {y: max(g.size for g in rows[y]) for y in row_ys}

    bands: list[list[CharGlyph]] = []
    n = len(row_ys)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, yi in enumerate(row_ys):
        reach = params.line_band_factor * row_max_size[yi]
        j = i + 1
        while j < n and row_ys[j] - yi <= reach:
            pair_tol = params.line_band_factor * min(row_max_size[yi], row_max_size[row_ys[j]])
            if row_ys[j] - yi <= pair_tol:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[rj] = ri
            j += 1

    groups: dict[int, list[CharGlyph]] = {}
    for i, y in enumerate(row_ys):
        groups.setdefault(find(i), []).extend(rows[y])
    bands = list(groups.values())

    lines: list[TextLine] = []
    for band in bands:
        band.sort(key=lambda g: (g.x0, g.x1, g.y0, g.text))
        run = [band[0]]
        for g in band[1:]:
            prev = run[-1]
            if g.x0 - prev.x1 >= params.gap_factor * max(prev.size, g.size):
                lines.append(_make_line(run, params))
                run = [g]
            else:
                run.append(g)
        lines.append(_make_line(run, params))

    lines.sort(key=lambda ln: (-ln.y1, ln.x0, ln.y0))
    return lines


def _overlap_ratio(a: TextLine, b: TextLine) -> float:
    overlap = min(a.x1, b.x1) - max(a.x0, b.x0)
    if overlap <= 0:
        return 0.0
    return overlap / min(a.width, b.width)


def _fonts_compatible(prev: TextLine, cur: TextLine) -> bool:
    fa = _language_fonts(prev.chars)
    fb = _language_fonts(cur.chars)
    for lang in fa.keys() & fb.keys():
        if fa[lang] != fb[lang]:
            return False
    return True


def _joins_previous(prev: TextLine, cur: TextLine, params: LayoutParams) -> bool:
    if cur.y1 >= prev.y1:
        return False  # keeps box lines strictly descending by top edge
    size = max(prev.dominant_size, cur.dominant_size)
    if prev.y0 - cur.y1 >= min(prev.height, cur.height):
        return False  # vertical gap too large
    if abs(cur.x0 - prev.x0) > params.indent_factor * size:
        return False  # indentation jump
    if prev.width < cur.width - params.width_slack_factor * size:
        return False  # previous line looks like a paragraph end
    return _fonts_compatible(prev, cur)


def _make_box(lines: list[TextLine]) -> TextBox:
    glyphs = [g for ln in lines for g in ln.chars]
    return TextBox(
        lines=tuple(lines),
        x0=min(ln.x0 for ln in lines),
        y0=min(ln.y0 for ln in lines),
        x1=max(ln.x1 for ln in lines),
        y1=max(ln.y1 for ln in lines),
        text=" ".join(ln.text for ln in lines),
        font_profile=_language_fonts(glyphs),
    )


def merge_lines(lines: list[TextLine], params: LayoutParams | None = None) -> list[TextBox]:
    """Merge lines into text boxes.

    Lines are scanned top to bottom. A line may only join the box of its
    nearest preceding line in the same column, where "same column" means
    an x-interval overlap ratio of at least column_overlap_min; crossing
    columns is never allowed. The join additionally requires the vertical
    gap, the indentation, the width progression, and the per-language
    modal fonts to agree, and the candidate box must not already have
    continued past that line (a full-width line followed by two columns
    extends at most one of them).
    """
    params = params or LayoutParams()
    if not lines:
        return []

    ordered = sorted(lines, key=lambda ln: (-ln.y1, ln.x0, ln.y0))
    box_lines: list[list[TextLine]] = []
    box_of: list[int] = []  # box index per scanned line
    for i, cur in enumerate(ordered):
        target = -1
        for j in range(i - 1, -1, -1):
            if _overlap_ratio(ordered[j], cur) >= params.column_overlap_min:
                prev = ordered[j]
                candidate = box_of[j]
                if box_lines[candidate][-1] is prev and _joins_previous(prev, cur, params):
                    target = candidate
                break
        if target >= 0:
            box_lines[target].append(cur)
            box_of.append(target)
        else:
            box_of.append(len(box_lines))
            box_lines.append([cur])

    boxes = [_make_box(group) for group in box_lines]
    boxes.sort(key=lambda b: (-b.y1, b.x0, b.y0))
    return boxes


def detect_language(text: str, params: LayoutParams | None = None) -> str:
    """Classify text as "ko", "en", or "mixed" by its Hangul ratio."""
    params = params or LayoutParams()
    hangul, latin = count_scripts(text)
    total = hangul + latin
    if total == 0:
        return "en"
    ratio = hangul / total
    if ratio >= 1 - params.hangul_ratio_threshold:
        return "ko"
    if ratio <= params.hangul_ratio_threshold:
        return "en"
    return "mixed"


def order_boxes(boxes: list[TextBox]) -> list[TextBox]:
    """Assign reading-order ranks: top edge descending, then x0, then y0."""
    ordered = sorted(boxes, key=lambda b: (-b.y1, b.x0, b.y0))
    return [replace(b, order=rank) for rank, b in enumerate(ordered)]


def box_to_dict(box: TextBox, doc_id: str) -> dict:
    """Row for the box-dump JSONL interface."""
    return {
        "doc_id": doc_id,
        "order": box.order,
        "x0": box.x0,
        "y0": box.y0,
        "x1": box.x1,
        "y1": box.y1,
        "text": box.text,
        "font_profile": {
            lang: {"name": key[0], "bold": key[1], "italic": key[2]}
            for lang, key in box.font_profile.items()
        },
    }
