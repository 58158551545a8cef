"""Synthetic first-page generator for tests and acceptance runs.

Pages are built from style presets that exercise every reconstruction
rule (columns, indentation, width, fonts, bilingual abstracts) while
keeping every gap at least twice as far from its rule threshold as the
rule requires, so ground-truth boxes are recoverable exactly. All
randomness flows from one seed; identical seeds give identical bytes.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass, field
from pathlib import Path

from .charstream import CharGlyph, MetadataRecord, Page, dump_page, record_to_dict
from .textnorm import is_hangul

# Glyph advance widths as fractions of the font size.
_W_HANGUL = 0.7
_W_LATIN = 0.5
_W_PUNCT = 0.3
_WORD_GAP = 0.5  # of size; safely inside the [0.25, 1.0) word-space band
_LINE_STEP = 1.3  # of size; 0.3 size gap between stacked lines of a box
_BLOCK_GAP = 2.5  # of size; forces a box break between blocks
_PAIR_GAP = 0.4  # of size; keeps paragraph pairs merge-adjacent
_INDENT_OFFSET = 2.5  # of size; exceeds the indent tolerance twice over

SERIF = ("SynthSerif", False, False)
SERIF_BOLD = ("SynthSerif", True, False)
SANS = ("SynthSans", False, False)
GOTHIC = ("SynthGothic", False, False)
GOTHIC_BOLD = ("SynthGothic", True, False)


def _char_width(ch: str, size: float) -> float:
    if is_hangul(ch):
        return _W_HANGUL * size
    if ch.isalnum():
        return _W_LATIN * size
    return _W_PUNCT * size


def _text_width(text: str, size: float) -> float:
    width = 0.0
    for i, ch in enumerate(text):
        if ch == " ":
            width += _WORD_GAP * size
        else:
            width += _char_width(ch, size)
    return width


# Each block family draws from its own pool so box texts carry a
# learnable lexical signature on top of the geometric one.
EN_TITLE = """analysis neural network layout document extraction learning model
system detection segmentation recognition classification prediction estimation
evaluation framework architecture pipeline transformer encoder attention
embedding representation generation retrieval alignment clustering calibration
optimization inference""".split()

EN_KEYWORD = """signal energy protein sensor antenna polymer quantum thermal
optical channel coding graph spectrum robust adaptive hybrid kernel fusion
semantic spatial temporal wireless cellular molecular genomic catalyst membrane
circuit voltage plasma""".split()

EN_ABSTRACT = """we propose present study method results show that performance
evaluated approach experiments demonstrate improves compared baseline dataset
novel using based achieves accuracy significant proposed this paper describes
investigate observed conducted measurements obtained findings suggest effective
efficient design""".split()

EN_BODY = """introduction section figure table equation therefore however
literature previous research discussed furthermore consider defined follows denote
function parameter algorithm iteration convergence theorem proof related work
background moreover consequently respectively described illustrated summarized
reported cited reference""".split()

EN_GIVEN = """James Maria Chen Sofia Omar Yuki Lena David Priya Tomas Anna Marco
Elif Ravi Nina Pavel Ines Hugo Mei Jonas""".split()

EN_FAMILY = """Kim Lee Park Smith Garcia Tanaka Novak Costa Zhang Okafor Weber
Rossi Silva Khan Larsen Moreau Petrov Yamada Olsen Araya""".split()

EN_ORG_HEAD = "Department Institute Laboratory School Center Division Faculty".split()
EN_ORG_FIELD = """Engineering Physics Chemistry Biology Medicine Informatics
Statistics Mathematics Linguistics Robotics Astronomy Geology Agronomy
Oceanography Materials""".split()
EN_ORG_TAIL = "University College Academy Polytechnic".split()

EN_JOURNAL_FIELD = """applied computational experimental theoretical industrial
biomedical chemical electrical mechanical environmental""".split()
EN_JOURNAL = "Journal Transactions Letters Review Proceedings Bulletin Annals".split()

KO_TITLE = """분석 신경망 네트워크 레이아웃 문서 추출 학습 모델 시스템 탐지 분할
인식 분류 예측 추정 평가 구조 파이프라인 변환기 인코더 어텐션 임베딩 표현 생성 검색
정렬 군집화 보정 최적화 추론""".split()

KO_KEYWORD = """신호 에너지 단백질 센서 안테나 고분자 양자 열전달 광학 채널 부호화
그래프 스펙트럼 강건 적응형 융합 의미론 공간 시간 무선 셀룰러 분자 유전체 촉매
분리막 회로 전압 플라즈마""".split()

KO_ABSTRACT = """본 논문에서는 제안한다 제시한다 연구 방법 결과 보인다 성능
평가하였다 접근법 실험 입증한다 개선된 비교하여 기준선 데이터셋 새로운 이용하여
기반 달성한다 정확도 유의미한 제안된 기술한다 조사하였다 관찰된 수행하였다 측정
얻어진 시사한다 효과적인 효율적인 설계""".split()

KO_FAMILY = "김 이 박 최 정 강 조 윤 장 임".split()
KO_GIVEN = "민수 서연 지훈 하은 도윤 수아 예준 지우 현우 서준".split()
KO_ORG_FIELD = """전자공학 컴퓨터공학 기계공학 화학공학 물리학 정보통신 재료공학
생명과학 수리과학 환경공학""".split()
KO_ORG_TAIL = "대학교 연구소 센터".split()

_LATIN_FILLER = "abcdefghijklmnopqrstuvwxyz"
_HANGUL_FILLER = "가나다라마바사아자차카타파하거너더러머버서어저처커터퍼허"


@dataclass(frozen=True)
class SyntheticStyle:
    """Recipe for one journal's first-page layout."""

    journal_id: str
    blocks: tuple[str, ...]
    page_width: float = 595.0
    page_height: float = 842.0
    margin: float = 56.0
    columns: int = 1
    body_paragraphs: int = 2
    body_variant: str = "plain"  # plain | indent | width | font
    side_rail: bool = False
    fixed_lines: int = 0  # abstract/body line count; 0 means random
    inject_sep: bool = False
    sizes: dict = field(
        default_factory=lambda: {
            "title": 16.0,
            "authors": 11.0,
            "orgs": 10.0,
            "abstract": 10.0,
            "keywords": 10.0,
            "heading": 11.0,
            "body": 10.0,
            "header": 9.0,
        }
    )


@dataclass(frozen=True)
class GoldBox:
    label: str
    text: str
    x0: float
    y0: float
    x1: float
    y1: float
    glyphs: int
    order: int = -1


@dataclass(frozen=True)
class SyntheticDoc:
    page: Page
    record: MetadataRecord
    gold: tuple[GoldBox, ...]


class _PageBuilder:
    def __init__(self, style: SyntheticStyle, doc_id: str, rng: random.Random):
        self.style = style
        self.doc_id = doc_id
        self.rng = rng
        self.glyphs: list[CharGlyph] = []
        self.gold: list[tuple[str, float, float, float, float, str, int]] = []
        self.fields: dict = {}

    def emit_line(
        self, text: str, x0: float, top: float, size: float, font: tuple
    ) -> tuple[float, float]:
        """Lay one line of text with its top edge at `top`; returns (x1, y0)."""
        name, bold, italic = font
        y0 = top - size
        x = x0
        count = 0
        for ch in text:
            if ch == " ":
                x += _WORD_GAP * size
                continue
            w = _char_width(ch, size)
            self.glyphs.append(CharGlyph(ch, x, y0, x + w, top, size, name, bold, italic))
            x += w
            count += 1
        return x, y0

    def add_gold(self, label, x0, y0, x1, y1, text, glyphs):
        self.gold.append((label, x0, y0, x1, y1, text, glyphs))


def _derive_rng(seed: int, journal_id: str, index: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}/{journal_id}/{index}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _pick_words(rng: random.Random, pool: list[str], n: int) -> list[str]:
    return [rng.choice(pool) for _ in range(n)]


def _filler_word(rng: random.Random, n_chars: int, korean: bool) -> str:
    alphabet = _HANGUL_FILLER if korean else _LATIN_FILLER
    return "".join(rng.choice(alphabet) for _ in range(max(1, n_chars)))


def _fit_single_line(parts: list[str], joiner: str, size: float, max_width: float) -> list[str]:
    """Drop trailing parts until the joined text fits one line."""
    while len(parts) > 1 and _text_width(joiner.join(parts), size) > max_width:
        parts = parts[:-1]
    return parts


def _justified_lines(
    rng: random.Random,
    pool: list[str],
    size: float,
    width: float,
    n_lines: int,
    korean: bool,
    full_last: bool = False,
    first_word: str | None = None,
) -> list[str]:
    """Word-wrapped lines padded with filler so full lines match `width`.

    Every full line lands within half a filler character of the target
    width, far inside the paragraph-width slack. The last line stays
    naturally short unless full_last is set.
    """
    char_w = (_W_HANGUL if korean else _W_LATIN) * size
    gap = _WORD_GAP * size
    lines = []
    for i in range(n_lines):
        words: list[str] = []
        x = 0.0
        if i == 0 and first_word is not None:
            words.append(first_word)
            x = _text_width(first_word, size)
        last = i == n_lines - 1
        budget = width * (0.45 + 0.1 * rng.random()) if last and not full_last else width
        while True:
            word = rng.choice(pool)
            w = _text_width(word, size)
            advance = w if not words else gap + w
            if x + advance > budget - 4 * char_w:
                break
            words.append(word)
            x += advance
        if last and not full_last:
            if not words:
                words.append(rng.choice(pool))
        else:
            remaining = budget - x - (gap if words else 0.0)
            n_chars = max(1, round(remaining / char_w))
            words.append(_filler_word(rng, n_chars, korean))
        lines.append(" ".join(words))
    return lines


class _Frame:
    """A vertical flow region with a descending cursor."""

    def __init__(self, x0: float, x1: float, top: float):
        self.x0 = x0
        self.x1 = x1
        self.cursor = top

    @property
    def width(self) -> float:
        return self.x1 - self.x0


def _emit_block_lines(
    builder: _PageBuilder,
    frame: _Frame,
    lines: list[str],
    size: float,
    font: tuple,
    label: str,
    align: str = "left",
    x_offset: float = 0.0,
    gap_after: float = _BLOCK_GAP,
) -> None:
    """Emit stacked lines as one gold box and advance the frame cursor."""
    top = frame.cursor
    box_x0 = box_x1 = None
    box_y0 = box_y1 = None
    texts = []
    glyph_count_before = len(builder.glyphs)
    for line in lines:
        line_w = _text_width(line, size)
        if align == "center":
            x0 = frame.x0 + (frame.width - line_w) / 2.0
        else:
            x0 = frame.x0 + x_offset
        x1, y0 = builder.emit_line(line, x0, top, size, font)
        box_x0 = x0 if box_x0 is None else min(box_x0, x0)
        box_x1 = x1 if box_x1 is None else max(box_x1, x1)
        box_y1 = top if box_y1 is None else max(box_y1, top)
        box_y0 = y0 if box_y0 is None else min(box_y0, y0)
        texts.append(line)
        top -= _LINE_STEP * size
    builder.add_gold(
        label,
        box_x0,
        box_y0,
        box_x1,
        box_y1,
        " ".join(texts),
        len(builder.glyphs) - glyph_count_before,
    )
    # cursor moved past the last line's top already; rewind to its bottom.
    frame.cursor = box_y0 - gap_after * size


def _emit_paragraph_pair(
    builder: _PageBuilder,
    frame: _Frame,
    rng: random.Random,
    pool: list[str],
    size: float,
    variant: str,
    n_lines: int,
    first_word: str | None = None,
) -> None:
    """Two adjacent paragraphs separated only by one targeted split rule."""
    if variant == "indent":
        first = _justified_lines(rng, pool, size, frame.width, n_lines, False, full_last=True,
                                 first_word=first_word)
        offset = _INDENT_OFFSET * size
        second = _justified_lines(rng, pool, size, frame.width - offset, n_lines, False,
                                  full_last=True)
        _emit_block_lines(builder, frame, first, size, SERIF, "O", gap_after=_PAIR_GAP)
        _emit_block_lines(builder, frame, second, size, SERIF, "O", x_offset=offset)
    elif variant == "width":
        first = _justified_lines(rng, pool, size, frame.width, n_lines, False,
                                 first_word=first_word)
        second = _justified_lines(rng, pool, size, frame.width, n_lines, False, full_last=True)
        _emit_block_lines(builder, frame, first, size, SERIF, "O", gap_after=_PAIR_GAP)
        _emit_block_lines(builder, frame, second, size, SERIF, "O")
    elif variant == "font":
        first = _justified_lines(rng, pool, size, frame.width, n_lines, False, full_last=True,
                                 first_word=first_word)
        second = _justified_lines(rng, pool, size, frame.width, n_lines, False, full_last=True)
        _emit_block_lines(builder, frame, first, size, SERIF, "O", gap_after=_PAIR_GAP)
        _emit_block_lines(builder, frame, second, size, SANS, "O")
    else:
        para = _justified_lines(rng, pool, size, frame.width, n_lines, False,
                                first_word=first_word)
        _emit_block_lines(builder, frame, para, size, SERIF, "O")


def generate_document(style: SyntheticStyle, index: int, seed: int) -> SyntheticDoc:
    rng = _derive_rng(seed, style.journal_id, index)
    doc_id = f"{style.journal_id}-{index:04d}"
    builder = _PageBuilder(style, doc_id, rng)
    sizes = style.sizes
    margin = style.margin
    page_w, page_h = style.page_width, style.page_height

    main = _Frame(margin, page_w - margin, page_h - margin)
    rail = None
    if style.side_rail:
        split = margin + (page_w - 2 * margin) * 0.55
        main = _Frame(margin, split - 24.0, page_h - margin)
        rail = _Frame(split + 24.0, page_w - margin, page_h - margin)

    meta_frame = rail if rail is not None else main

    def abstract_lines() -> int:
        if style.fixed_lines:
            return style.fixed_lines
        return rng.randint(4, 7)

    for block in style.blocks:
        if block == "header":
            # Journal name left, DOI right, spanning the full text width.
            size = sizes["header"]
            journal = " ".join(
                _pick_words(rng, EN_JOURNAL_FIELD, 2) + [rng.choice(EN_JOURNAL)]
            ).title() + f" vol. {rng.randint(1, 40)}"
            top = max(main.cursor, rail.cursor if rail else main.cursor)
            right_edge = page_w - margin
            x1, y0 = builder.emit_line(journal, margin, top, size, SERIF)
            builder.add_gold("O", margin, y0, x1, top, journal,
                             sum(1 for c in journal if c != " "))
            doi_text = f"doi: 10.5555/{doc_id}"
            w = _text_width(doi_text, size)
            dx0 = right_edge - w
            dx1, dy0 = builder.emit_line(doi_text, dx0, top, size, SERIF)
            builder.add_gold("O", dx0, dy0, dx1, top, doi_text,
                             sum(1 for c in doi_text if c != " "))
            main.cursor = y0 - _BLOCK_GAP * size
            if rail is not None:
                rail.cursor = main.cursor
        elif block in ("title_en", "title_ko"):
            size = sizes["title"]
            korean = block.endswith("_ko")
            pool = KO_TITLE if korean else EN_TITLE
            words = _fit_single_line(
                _pick_words(rng, pool, rng.randint(5, 8)), " ", size, meta_frame.width
            )
            text = " ".join(words)
            font = GOTHIC_BOLD if korean else SERIF_BOLD
            _emit_block_lines(builder, meta_frame, [text], size, font, block, align="center")
            builder.fields[block] = text
        elif block in ("authors_en", "authors_ko"):
            size = sizes["authors"]
            korean = block.endswith("_ko")
            if korean:
                names = [rng.choice(KO_FAMILY) + rng.choice(KO_GIVEN)
                         for _ in range(rng.randint(2, 4))]
            else:
                names = [f"{rng.choice(EN_GIVEN)} {rng.choice(EN_FAMILY)}"
                         for _ in range(rng.randint(2, 4))]
            names = _fit_single_line(names, ", ", size, meta_frame.width)
            text = ", ".join(names)
            font = GOTHIC if korean else SERIF
            _emit_block_lines(builder, meta_frame, [text], size, font,
                              "author_name_ko" if korean else "author_name_en",
                              align="center")
            builder.fields["author_names_ko" if korean else "author_names_en"] = names
        elif block in ("orgs_en", "orgs_ko"):
            size = sizes["orgs"]
            korean = block.endswith("_ko")
            affils = []
            for _ in range(rng.randint(1, 2)):
                if korean:
                    affils.append(
                        rng.choice(KO_ORG_FIELD) + "과 "
                        + rng.choice(KO_ORG_FIELD) + rng.choice(KO_ORG_TAIL)
                    )
                else:
                    affils.append(
                        f"{rng.choice(EN_ORG_HEAD)} of {rng.choice(EN_ORG_FIELD)}, "
                        f"{rng.choice(EN_ORG_FIELD)} {rng.choice(EN_ORG_TAIL)}"
                    )
            affils = _fit_single_line(affils, "; ", size, meta_frame.width)
            text = "; ".join(affils)
            font = GOTHIC if korean else SERIF
            _emit_block_lines(builder, meta_frame, [text], size, font,
                              "org_ko" if korean else "org_en", align="center")
            builder.fields["affiliations_ko" if korean else "affiliations_en"] = affils
        elif block in ("heading_en", "heading_ko"):
            size = sizes["heading"]
            korean = block.endswith("_ko")
            text = "요 약" if korean else "ABSTRACT"
            font = GOTHIC_BOLD if korean else SERIF_BOLD
            _emit_block_lines(builder, meta_frame, [text], size, font, "O")
        elif block in ("abstract_en", "abstract_ko"):
            size = sizes["abstract"]
            korean = block.endswith("_ko")
            pool = KO_ABSTRACT if korean else EN_ABSTRACT
            lines = _justified_lines(rng, pool, size, meta_frame.width,
                                     abstract_lines(), korean)
            _emit_block_lines(builder, meta_frame, lines, size,
                              GOTHIC if korean else SERIF, block)
            builder.fields[block] = " ".join(lines)
        elif block in ("keywords_en", "keywords_ko"):
            size = sizes["keywords"]
            korean = block.endswith("_ko")
            pool = KO_KEYWORD if korean else EN_KEYWORD
            seen: list[str] = []
            for w in _pick_words(rng, pool, rng.randint(4, 6)):
                if w not in seen:
                    seen.append(w)
            keywords = _fit_single_line(seen, "; ", size, meta_frame.width)
            text = "; ".join(keywords)
            _emit_block_lines(builder, meta_frame, [text], size,
                              GOTHIC if korean else SERIF, block)
            builder.fields[block] = keywords
        elif block == "body":
            size = sizes["body"]
            n_paras = style.body_paragraphs
            n_lines = style.fixed_lines or rng.randint(3, 5)
            first_word = "[SEP]" if style.inject_sep else None
            if style.columns == 2 and not style.side_rail:
                gutter = 14.0
                col_w = (main.width - gutter) / 2.0
                top = main.cursor
                left = _Frame(main.x0, main.x0 + col_w, top)
                right = _Frame(main.x1 - col_w, main.x1, top)
                for col in (left, right):
                    for _ in range(n_paras):
                        _emit_paragraph_pair(builder, col, rng, EN_BODY, size,
                                             style.body_variant, n_lines, first_word)
                main.cursor = min(left.cursor, right.cursor)
            else:
                for _ in range(n_paras):
                    _emit_paragraph_pair(builder, main, rng, EN_BODY, size,
                                         style.body_variant, n_lines, first_word)
        else:
            raise ValueError(f"unknown block kind {block!r}")

    field_map = dict(builder.fields)
    record_kwargs = {}
    for name in ("title_en", "title_ko", "abstract_en", "abstract_ko"):
        if name in field_map:
            record_kwargs[name] = field_map[name]
    for name in ("author_names_en", "author_names_ko", "affiliations_en",
                 "affiliations_ko", "keywords_en", "keywords_ko"):
        if name in field_map:
            record_kwargs[name] = tuple(field_map[name])
    record = MetadataRecord(doc_id=doc_id, doi=f"10.5555/{doc_id}", **record_kwargs)

    glyphs = list(builder.glyphs)
    rng.shuffle(glyphs)
    page = Page(doc_id, style.journal_id, 0, page_w, page_h, tuple(glyphs))

    ordered = sorted(builder.gold, key=lambda g: (-g[4], g[1], g[2]))
    gold = tuple(
        GoldBox(label=g[0], x0=g[1], y0=g[2], x1=g[3], y1=g[4], text=g[5],
                glyphs=g[6], order=rank)
        for rank, g in enumerate(ordered)
    )
    return SyntheticDoc(page=page, record=record, gold=gold)


def generate_synthetic(
    styles: list[SyntheticStyle], docs_per_style: int, seed: int
) -> list[SyntheticDoc]:
    if docs_per_style < 1:
        raise ValueError("docs_per_style must be >= 1")
    docs = []
    for style in styles:
        for i in range(docs_per_style):
            docs.append(generate_document(style, i, seed))
    return docs


def write_synthetic(docs: list[SyntheticDoc], out_dir: str | Path) -> None:
    """Write charstreams/, records.jsonl, and gold.jsonl under out_dir."""
    out = Path(out_dir)
    (out / "charstreams").mkdir(parents=True, exist_ok=True)
    with open(out / "records.jsonl", "w", encoding="utf-8") as records_fh, open(
        out / "gold.jsonl", "w", encoding="utf-8"
    ) as gold_fh:
        for doc in docs:
            path = out / "charstreams" / f"{doc.page.doc_id}.json"
            path.write_text(dump_page(doc.page), encoding="utf-8")
            records_fh.write(json.dumps(record_to_dict(doc.record), ensure_ascii=False) + "\n")
            for g in doc.gold:
                row = {
                    "doc_id": doc.page.doc_id,
                    "order": g.order,
                    "label": g.label,
                    "text": g.text,
                    "x0": g.x0,
                    "y0": g.y0,
                    "x1": g.x1,
                    "y1": g.y1,
                    "glyphs": g.glyphs,
                }
                gold_fh.write(json.dumps(row, ensure_ascii=False) + "\n")


def substitute_noise(page: Page, rate: float, rng: random.Random) -> Page:
    """Replace a fraction of glyph characters with same-script letters."""
    glyphs = []
    for g in page.chars:
        ch = g.text
        if ch.isalnum() and rng.random() < rate:
            alphabet = _HANGUL_FILLER if is_hangul(ch) else _LATIN_FILLER
            replacement = rng.choice(alphabet)
            glyphs.append(CharGlyph(replacement, g.x0, g.y0, g.x1, g.y1,
                                    g.size, g.font, g.bold, g.italic))
        else:
            glyphs.append(g)
    return Page(page.doc_id, page.journal_id, page.page_index,
                page.width, page.height, tuple(glyphs))


def layout_styles() -> list[SyntheticStyle]:
    """Eight journals covering column, indent, width, font, and bilingual cases."""
    meta_en = ("title_en", "authors_en", "orgs_en", "abstract_en", "keywords_en")
    return [
        SyntheticStyle("synthj-a", blocks=meta_en + ("body",)),
        SyntheticStyle(
            "synthj-b",
            blocks=("header", "title_ko", "title_en", "authors_ko", "orgs_ko",
                    "heading_ko", "abstract_ko", "heading_en", "abstract_en",
                    "keywords_ko", "keywords_en"),
            page_width=612.0,
            page_height=792.0,
            margin=50.0,
        ),
        SyntheticStyle("synthj-c", blocks=("header",) + meta_en + ("body",),
                       columns=2, body_paragraphs=2),
        SyntheticStyle("synthj-d", blocks=meta_en + ("body",),
                       body_variant="indent", body_paragraphs=1),
        SyntheticStyle("synthj-e", blocks=("header",) + meta_en + ("body",),
                       body_variant="width", body_paragraphs=1, inject_sep=True),
        SyntheticStyle("synthj-f",
                       blocks=("header", "title_ko", "title_en", "authors_en",
                               "orgs_en", "abstract_en", "keywords_en", "body"),
                       body_variant="font", body_paragraphs=1),
        SyntheticStyle("synthj-g",
                       blocks=("body", "keywords_en", "abstract_en", "orgs_en",
                               "authors_en", "title_en"),
                       body_paragraphs=1, margin=60.0),
        SyntheticStyle("synthj-h", blocks=meta_en + ("body",), side_rail=True,
                       body_paragraphs=3, page_width=612.0, page_height=792.0),
    ]


def ablation_styles() -> list[SyntheticStyle]:
    """Five geometry clones for training plus two unseen-geometry journals.

    The clones share the metadata layout exactly (fixed line counts) and
    differ only in body texture, so absolute position is a perfect signal
    inside the training journals and a misleading one outside them.
    """
    meta = ("header", "title_en", "authors_en", "orgs_en", "abstract_en",
            "keywords_en", "body")
    variants = ["plain", "plain", "indent", "width", "font"]
    styles = [
        SyntheticStyle(f"ablj-{i + 1}", blocks=meta, body_variant=variant,
                       body_paragraphs=2, fixed_lines=4)
        for i, variant in enumerate(variants)
    ]
    styles.append(
        SyntheticStyle("ablj-6",
                       blocks=("header", "body", "keywords_en", "abstract_en",
                               "orgs_en", "authors_en", "title_en"),
                       body_paragraphs=2, fixed_lines=4)
    )
    styles.append(
        SyntheticStyle("ablj-7", blocks=meta, side_rail=True,
                       body_paragraphs=3, fixed_lines=4)
    )
    return styles


def style_registry() -> dict[str, list[SyntheticStyle]]:
    return {"layout": layout_styles(), "ablation": ablation_styles()}
