import random

from lame.charstream import CharGlyph
from lame.layout import (
    LayoutParams,
    build_lines,
    detect_language,
    merge_lines,
    order_boxes,
)
from lame.synth import generate_document, layout_styles

from conftest import glyph, page_of


def line_of(text, x0, top, size=12.0, font="SynthSerif", bold=False, char_w=6.0):
    """Lay out one string as adjacent glyphs with 0.5-size word gaps."""
    glyphs = []
    x = x0
    for ch in text:
        if ch == " ":
            x += 0.5 * size
            continue
        glyphs.append(
            CharGlyph(ch, x, top - size, x + char_w, top, size, font, bold, False)
        )
        x += char_w
    return glyphs


def test_small_gap_joins_one_line(word_page):
    lines = build_lines(page_of(word_page.chars[:2]))
    assert len(lines) == 1
    assert lines[0].text == "AB"


def test_wide_gap_splits_two_columns(word_page):
    # gap of 16 >= one font size: the separated-column case
    lines = build_lines(word_page)
    assert sorted(l.text for l in lines) == ["AB", "C"]


def test_single_glyph_page():
    lines = build_lines(page_of([glyph("X", 10.0, 700.0)]))
    assert len(lines) == 1
    assert lines[0].text == "X"


def test_word_gap_inserts_space():
    # gap of 6 = half the 12pt threshold: same line, with a space
    glyphs = [glyph("A", 10.0, 700.0, width=6.0), glyph("B", 22.0, 700.0, width=6.0)]
    lines = build_lines(page_of(glyphs))
    assert len(lines) == 1
    assert lines[0].text == "A B"


def test_transitive_band_via_large_glyphs():
    # A and C connect directly through their large sizes; B is its own band.
    a = CharGlyph("A", 10, 100.0, 20, 120, 20.0, "F", False, False)
    b = CharGlyph("B", 30, 105.0, 31, 106, 1.0, "F", False, False)
    c = CharGlyph("C", 50, 110.0, 60, 130, 20.0, "F", False, False)
    lines = build_lines(page_of([a, b, c]), LayoutParams(gap_factor=10.0))
    texts = sorted(l.text for l in lines)
    assert texts == ["AC", "B"]


def test_line_bbox_is_union_and_sorted():
    glyphs = [glyph("B", 16.0, 700.0, width=6.0), glyph("A", 10.0, 700.0, width=6.0)]
    (line,) = build_lines(page_of(glyphs))
    assert [g.text for g in line.chars] == ["A", "B"]
    assert (line.x0, line.y0, line.x1, line.y1) == (10.0, 700.0, 22.0, 712.0)
    assert line.width == 12.0


def test_merge_small_gap_one_box():
    glyphs = line_of("aaa", 50, 712) + line_of("bbb", 50, 696)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 1
    assert boxes[0].text == "aaa bbb"


def test_merge_large_gap_two_boxes():
    glyphs = line_of("aaa", 50, 712) + line_of("bbb", 50, 660)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 2


def test_indentation_split():
    glyphs = line_of("aaa", 50, 712) + line_of("bbb", 65, 696)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 2


def test_width_split():
    # 180pt line followed by a 300pt line: 180 < 300 - 12
    glyphs = line_of("a" * 30, 50, 712) + line_of("b" * 50, 50, 696)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 2


def test_short_final_line_still_merges():
    # the converse: wide line above a short one stays one paragraph
    glyphs = line_of("a" * 50, 50, 712) + line_of("b" * 20, 50, 696)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 1


def test_font_split_same_language():
    glyphs = line_of("안녕하세요안녕", 50, 712, font="Gulim") + line_of(
        "반갑습니다만나", 50, 696, font="KoreanGD-Bold"
    )
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 2


def test_font_of_other_language_ignored():
    # Korean fonts match; the Latin glyphs appear in only one line.
    glyphs = line_of("안녕 가나다라", 50, 712, font="Gulim")
    glyphs += line_of("반가워요", 50, 696, font="Gulim")
    glyphs += line_of("ab", 80, 696, font="Arial-BoldMT")  # word gap, same line
    lines = build_lines(page_of(glyphs))
    assert sorted(l.text for l in lines) == ["반가워요 ab", "안녕 가나다라"]
    boxes = merge_lines(lines)
    assert len(boxes) == 1


def test_subset_prefix_stripped_for_font_key():
    glyphs = line_of("안녕하세요", 50, 712, font="ABCDEF+Gulim") + line_of(
        "반갑습니다", 50, 696, font="ZYXWVU+Gulim"
    )
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 1
    assert boxes[0].font_profile["ko"][0] == "Gulim"


def test_detect_language_examples():
    assert detect_language("안녕하세요") == "ko"
    assert detect_language("Hello world") == "en"
    # 6 Hangul and 8 Latin scalars: ratio 6/14 sits between the thresholds
    assert detect_language("요약 Abstract 요약 결과") == "mixed"
    assert detect_language("123 .,;") == "en"


def test_order_boxes_by_top_then_x():
    glyphs = (
        line_of("top", 50, 800)
        + line_of("left", 50, 700)
        + line_of("right", 300, 700)
        + line_of("low", 50, 600)
    )
    boxes = order_boxes(merge_lines(build_lines(page_of(glyphs))))
    assert [b.text for b in boxes] == ["top", "left", "right", "low"]
    assert [b.order for b in boxes] == [0, 1, 2, 3]
    assert order_boxes(boxes) == boxes  # idempotent
    assert order_boxes([]) == []


def test_glyph_partition_conserved():
    rng = random.Random(5)
    for style in layout_styles()[:3]:
        doc = generate_document(style, rng.randrange(10), seed=3)
        lines = build_lines(doc.page)
        assert sum(len(l.chars) for l in lines) == len(doc.page.chars)
        boxes = merge_lines(lines)
        assert sum(len(l.chars) for b in boxes for l in b.lines) == len(doc.page.chars)
        for b in boxes:
            assert b.x0 == min(l.x0 for l in b.lines)
            assert b.y1 == max(l.y1 for l in b.lines)


def test_determinism_byte_identical():
    doc = generate_document(layout_styles()[1], 2, seed=9)
    a = order_boxes(merge_lines(build_lines(doc.page)))
    b = order_boxes(merge_lines(build_lines(doc.page)))
    assert a == b


def test_gap_factor_monotone_lines():
    doc = generate_document(layout_styles()[0], 0, seed=21)
    counts = []
    for factor in (0.5, 1.0, 2.0, 4.0):
        counts.append(len(build_lines(doc.page, LayoutParams(gap_factor=factor))))
    assert counts == sorted(counts, reverse=True)


def test_indent_factor_monotone_boxes():
    doc = generate_document(layout_styles()[3], 0, seed=21)  # indent style
    lines = build_lines(doc.page)
    counts = []
    for factor in (0.5, 1.0, 3.0, 8.0):
        counts.append(len(merge_lines(lines, LayoutParams(indent_factor=factor))))
    assert counts == sorted(counts, reverse=True)


def test_column_lines_do_not_interleave():
    # Full-width line above two columns: each column keeps its paragraphs.
    glyphs = line_of("w" * 60, 50, 760)  # full-width bridge line
    for top in (712, 696, 680):
        glyphs += line_of("a" * 20, 50, top)
        glyphs += line_of("b" * 20, 300, top)
    boxes = merge_lines(build_lines(page_of(glyphs)))
    assert len(boxes) == 3
    texts = {b.text for b in boxes}
    assert " ".join(["a" * 20] * 3) in texts
    assert " ".join(["b" * 20] * 3) in texts
