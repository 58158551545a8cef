#!/usr/bin/env python3
"""Regenerate the bundled fixture PDFs.

Four pages: a classic single-column article, a two-column article, a
bilingual article with a Korean abstract, and an image-only page with no
text layer. Known metadata strings are written alongside as JSON so the
tests can match against them.
"""

from __future__ import annotations

import json
from pathlib import Path

from reportlab.lib.pagesizes import A4, letter
from reportlab.pdfbase import pdfmetrics
from reportlab.pdfbase.cidfonts import UnicodeCIDFont
from reportlab.pdfgen import canvas

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TITLE_EN = "Layout Aware Extraction of Article Metadata"
AUTHORS_EN = ["A. Kim", "B. Lee", "C. Novak"]
AFFILIATION = "Department of Computer Engineering, Synthetic National University"
ABSTRACT_EN = (
    "Research articles arrive in many page layouts and the fields that matter "
    "for indexing are scattered across the first page. This fixture exercises "
    "a character level extraction path that records every glyph with its "
    "bounding box and font so a downstream pipeline can rebuild lines and "
    "boxes and attach field labels to them without any layout metadata from "
    "the producer."
)
KEYWORDS_EN = ["glyph extraction", "page layout", "metadata"]

TITLE_TWO = "Two Column Page Segmentation for Scholarly Front Matter"
TITLE_KO_DOC = "Bilingual Article Fixture with a Korean Abstract"
ABSTRACT_KO = (
    "본 문서는 한국어 초록과 영어 본문이 함께 나타나는 학술 논문의 첫 페이지를 "
    "모사한다 글리프 단위의 추출 경로가 한글 문자열의 좌표와 글꼴 정보를 올바르게 "
    "기록하는지 검사하기 위한 고정 자료이다"
)

BODY_WORDS = (
    "the body of the article continues with method details measurement "
    "procedures and discussion of related approaches covering prior systems "
    "and their assumptions about page structure reading order and font usage "
    "in scholarly documents across publishers"
).split()


def _wrap(words, font, size, width):
    space = pdfmetrics.stringWidth(" ", font, size)
    lines, current, used = [], [], 0.0
    for word in words:
        w = pdfmetrics.stringWidth(word, font, size)
        extra = w if not current else w + space
        if current and used + extra > width:
            lines.append(current)
            current, used = [word], w
        else:
            current.append(word)
            used += extra
    if current:
        lines.append(current)
    return lines


def draw_justified(c, words, x0, y, width, font, size, leading):
    """Wrapped paragraph with full lines stretched to the right edge."""
    space = pdfmetrics.stringWidth(" ", font, size)
    lines = _wrap(words, font, size, width)
    c.setFont(font, size)
    for i, line in enumerate(lines):
        if i == len(lines) - 1 or len(line) == 1:
            c.drawString(x0, y, " ".join(line))
        else:
            natural = sum(pdfmetrics.stringWidth(w, font, size) for w in line)
            gap = space + (width - natural - space * (len(line) - 1)) / (len(line) - 1)
            gap = min(gap, 0.9 * size)
            x = x0
            for word in line:
                c.drawString(x, y, word)
                x += pdfmetrics.stringWidth(word, font, size) + gap
        y -= leading
    return y


def make_article_en(path: Path) -> dict:
    width, height = A4
    c = canvas.Canvas(str(path), pagesize=A4, pageCompression=0)
    margin = 64.0
    text_width = width - 2 * margin

    c.setFont("Helvetica-Bold", 16)
    c.drawCentredString(width / 2, height - 110, TITLE_EN)
    c.setFont("Helvetica", 11)
    c.drawCentredString(width / 2, height - 150, "A. Kim¹, B. Lee², C. Novak¹")
    c.setFont("Helvetica-Oblique", 10)
    c.drawCentredString(width / 2, height - 170, AFFILIATION)

    c.setFont("Times-Bold", 11)
    c.drawString(margin, height - 215, "ABSTRACT")
    y = draw_justified(c, ABSTRACT_EN.split(), margin, height - 240, text_width,
                       "Times-Roman", 10, 13.0)
    c.setFont("Times-Roman", 10)
    c.drawString(margin, y - 12, "Keywords: " + "; ".join(KEYWORDS_EN))
    draw_justified(c, BODY_WORDS, margin, y - 60, text_width, "Times-Roman", 10, 13.0)
    c.showPage()
    c.save()
    return {
        "doc_id": path.stem,
        "title_en": TITLE_EN,
        "author_names_en": AUTHORS_EN,
        "affiliations_en": [AFFILIATION],
        "abstract_en": ABSTRACT_EN,
        "keywords_en": KEYWORDS_EN,
    }


def make_two_column(path: Path) -> dict:
    width, height = letter
    c = canvas.Canvas(str(path), pagesize=letter, pageCompression=0)
    margin = 54.0
    c.setFont("Times-Roman", 9)
    c.drawString(margin, height - 60, "Synthetic Journal of Document Analysis vol. 7")
    c.drawRightString(width - margin, height - 60, "doi: 10.5555/fixture.0002")
    c.setFont("Times-Bold", 15)
    c.drawCentredString(width / 2, height - 120, TITLE_TWO)
    c.setFont("Times-Roman", 11)
    c.drawCentredString(width / 2, height - 150, "D. Garcia, E. Tanaka")

    col_width = (width - 2 * margin - 24) / 2
    draw_justified(c, BODY_WORDS * 2, margin, height - 200, col_width,
                   "Times-Roman", 10, 12.5)
    draw_justified(c, BODY_WORDS * 2, margin + col_width + 24, height - 200, col_width,
                   "Times-Roman", 10, 12.5)
    c.showPage()
    c.save()
    return {
        "doc_id": path.stem,
        "title_en": TITLE_TWO,
        "author_names_en": ["D. Garcia", "E. Tanaka"],
    }


def make_article_ko(path: Path) -> dict:
    pdfmetrics.registerFont(UnicodeCIDFont("HYSMyeongJo-Medium"))
    width, height = A4
    c = canvas.Canvas(str(path), pagesize=A4, pageCompression=0)
    margin = 60.0
    text_width = width - 2 * margin

    c.setFont("Helvetica-Bold", 15)
    c.drawCentredString(width / 2, height - 100, TITLE_KO_DOC)
    c.setFont("HYSMyeongJo-Medium", 11)
    c.drawCentredString(width / 2, height - 135, "김민수, 이서연")

    c.setFont("HYSMyeongJo-Medium", 11)
    c.drawString(margin, height - 180, "요 약")
    draw_justified(c, ABSTRACT_KO.split(), margin, height - 205, text_width,
                   "HYSMyeongJo-Medium", 10, 15.0)
    c.setFont("Times-Roman", 10)
    draw_justified(c, BODY_WORDS, margin, height - 330, text_width,
                   "Times-Roman", 10, 13.0)
    c.showPage()
    c.save()
    return {
        "doc_id": path.stem,
        "title_en": TITLE_KO_DOC,
        "abstract_ko": ABSTRACT_KO,
        "author_names_ko": ["김민수", "이서연"],
    }


def make_scanned(path: Path) -> None:
    from PIL import Image
    import random as _random

    rng = _random.Random(7)
    img = Image.new("L", (200, 280))
    img.putdata([rng.randrange(140, 230) for _ in range(200 * 280)])
    width, height = A4
    c = canvas.Canvas(str(path), pagesize=A4, pageCompression=0)
    c.drawInlineImage(img, 72, 120, width=width - 144, height=height - 240)
    c.showPage()
    c.save()


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    records = []
    records.append(make_article_en(FIXTURES / "article_en.pdf"))
    records.append(make_two_column(FIXTURES / "two_column.pdf"))
    records.append(make_article_ko(FIXTURES / "article_ko.pdf"))
    make_scanned(FIXTURES / "scanned.pdf")
    with open(FIXTURES / "records.jsonl", "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(json.dumps(record, ensure_ascii=False) + "\n")
    print(f"wrote fixtures under {FIXTURES}")


if __name__ == "__main__":
    main()
