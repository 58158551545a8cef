import json

import pytest

from lame.charstream import CharGlyph, Page


def glyph(t, x0, y0, size=12.0, font="SynthSerif", bold=False, italic=False, width=None):
    w = width if width is not None else 0.5 * size
    return CharGlyph(t, x0, y0, x0 + w, y0 + size, size, font, bold, italic)


def page_of(glyphs, doc_id="doc-1", journal_id="j-1", width=595.0, height=842.0):
    return Page(doc_id, journal_id, 0, width, height, tuple(glyphs))


def charstream_json(chars, doc_id="doc-1", journal_id="j-1", width=595.28, height=841.89):
    return json.dumps(
        {
            "schema": "lame.charstream/1",
            "doc_id": doc_id,
            "journal_id": journal_id,
            "page": {"index": 0, "width": width, "height": height},
            "chars": chars,
        }
    )


def char_obj(t="A", x0=10.0, y0=700.0, x1=16.0, y1=712.0, size=12.0, **kw):
    obj = {
        "t": t,
        "x0": x0,
        "y0": y0,
        "x1": x1,
        "y1": y1,
        "size": size,
        "font": "ABCDEF+TimesNewRomanPSMT",
        "bold": False,
        "italic": False,
    }
    obj.update(kw)
    return obj


@pytest.fixture
def word_page():
    """Glyphs spelling "AB" and a distant "C" on one baseline."""
    glyphs = [
        glyph("A", 10.0, 700.0, width=6.0),
        glyph("B", 18.0, 700.0, width=6.0),
        glyph("C", 40.0, 700.0, width=6.0),
    ]
    return page_of(glyphs)
