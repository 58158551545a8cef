"""SVG debug overlay: one rectangle per box, colored by label."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .charstream import Page
from .matcher import LabeledPage

LABEL_COLORS = {
    "O": "#9e9e9e",
    "title_ko": "#c62828",
    "title_en": "#e53935",
    "org_ko": "#6a1b9a",
    "org_en": "#8e24aa",
    "abstract_ko": "#1565c0",
    "abstract_en": "#1e88e5",
    "keywords_ko": "#2e7d32",
    "keywords_en": "#43a047",
    "author_name_ko": "#ef6c00",
    "author_name_en": "#fb8c00",
}


def render_svg(page: Page, labeled: LabeledPage) -> str:
    """Render labeled boxes over a page-sized viewBox.

    Page coordinates have their origin at the bottom-left, SVG at the
    top-left, so y is flipped.
    """
    w, h = page.width, page.height
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white" stroke="#ddd"/>',
    ]
    for lb in labeled.boxes:
        box = lb.box
        color = LABEL_COLORS.get(lb.label, "#000000")
        top = h - box.y1
        height = box.y1 - box.y0
        snippet = escape(box.text[:60])
        parts.append(
            f'<rect x="{box.x0}" y="{top}" width="{box.x1 - box.x0}" height="{height}" '
            f'fill="none" stroke="{color}" stroke-width="1.2">'
            f"<title>{lb.box.order}: {lb.label} {escape(f'{lb.score:.1f}')} {snippet}</title></rect>"
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
