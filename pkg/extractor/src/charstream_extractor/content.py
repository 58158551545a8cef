"""Content-stream interpretation: text operators to positioned glyphs.

Only the text machinery and the transform stack are interpreted; paths,
images, and color are skipped. Glyph boxes come from transforming the
glyph quad (advance wide, descent-to-ascent tall) into device space and
taking its axis-aligned bounds, which degrades gracefully for rotated
text.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fonts import Font, load_font
from .pdfobjects import Document, Lexer, Name, Stream

Matrix = tuple[float, float, float, float, float, float]

IDENTITY: Matrix = (1.0, 0.0, 0.0, 1.0, 0.0, 0.0)


def multiply(m: Matrix, n: Matrix) -> Matrix:
    a1, b1, c1, d1, e1, f1 = m
    a2, b2, c2, d2, e2, f2 = n
    return (
        a1 * a2 + b1 * c2,
        a1 * b2 + b1 * d2,
        c1 * a2 + d1 * c2,
        c1 * b2 + d1 * d2,
        e1 * a2 + f1 * c2 + e2,
        e1 * b2 + f1 * d2 + f2,
    )


def apply(m: Matrix, x: float, y: float) -> tuple[float, float]:
    a, b, c, d, e, f = m
    return (a * x + c * y + e, b * x + d * y + f)


@dataclass
class RawGlyph:
    text: str
    x0: float
    y0: float
    x1: float
    y1: float
    size: float
    font: str
    bold: bool
    italic: bool


class _TextState:
    def __init__(self):
        self.font: Font | None = None
        self.size = 0.0
        self.char_spacing = 0.0
        self.word_spacing = 0.0
        self.horizontal_scale = 1.0
        self.leading = 0.0
        self.rise = 0.0


class ContentInterpreter:
    def __init__(self, document: Document, resources: dict):
        self.document = document
        self.fonts = self._load_fonts(resources)
        self.glyphs: list[RawGlyph] = []
        self.ctm: Matrix = IDENTITY
        self.stack: list[tuple[Matrix, _TextState]] = []
        self.state = _TextState()
        self.tm: Matrix = IDENTITY
        self.tlm: Matrix = IDENTITY

    def _load_fonts(self, resources: dict) -> dict[str, Font]:
        fonts = {}
        resources = self.document.resolve(resources) or {}
        font_map = self.document.resolve(resources.get("Font")) or {}
        if isinstance(font_map, dict):
            for name, ref in font_map.items():
                font_dict = self.document.resolve(ref)
                if isinstance(font_dict, dict):
                    fonts[str(name)] = load_font(self.document, font_dict)
        return fonts

    # -- operator handling ----------------------------------------------

    def run(self, content: bytes) -> list[RawGlyph]:
        lexer = Lexer(content)
        operands: list = []
        while True:
            lexer.skip_ws()
            if lexer.pos >= len(content):
                break
            ch = lexer.peek_byte()
            if ch in (b"/", b"(", b"<", b"["):
                operands.append(lexer.parse_object())
                continue
            if ch == b"]" or ch == b">":
                lexer.pos += 1
                continue
            token = lexer.read_token()
            if not token:
                lexer.pos += 1
                continue
            if token == b"BI":  # inline image: skip through the EI marker
                end = content.find(b"EI", lexer.pos)
                while end > 0 and content[end - 1 : end] not in b"\x00\t\n\x0c\r ":
                    end = content.find(b"EI", end + 2)
                lexer.pos = len(content) if end < 0 else end + 2
                operands = []
                continue
            if token[:1].isdigit() or token[:1] in (b"+", b"-", b"."):
                try:
                    operands.append(float(token))
                    continue
                except ValueError:
                    pass
            self._execute(token, operands)
            operands = []
        return self.glyphs

    def _execute(self, op: bytes, operands: list) -> None:
        if op == b"q":
            saved = _TextState()
            saved.__dict__.update(self.state.__dict__)
            self.stack.append((self.ctm, saved))
        elif op == b"Q":
            if self.stack:
                self.ctm, self.state = self.stack.pop()
        elif op == b"cm" and len(operands) >= 6:
            self.ctm = multiply(tuple(float(v) for v in operands[-6:]), self.ctm)
        elif op == b"BT":
            self.tm = self.tlm = IDENTITY
        elif op == b"ET":
            pass
        elif op == b"Tf" and len(operands) >= 2:
            self.state.font = self.fonts.get(str(operands[-2]))
            self.state.size = float(operands[-1])
        elif op == b"Td" and len(operands) >= 2:
            self._translate(float(operands[-2]), float(operands[-1]))
        elif op == b"TD" and len(operands) >= 2:
            self.state.leading = -float(operands[-1])
            self._translate(float(operands[-2]), float(operands[-1]))
        elif op == b"Tm" and len(operands) >= 6:
            self.tm = self.tlm = tuple(float(v) for v in operands[-6:])
        elif op == b"T*":
            self._translate(0.0, -self.state.leading)
        elif op == b"TL" and operands:
            self.state.leading = float(operands[-1])
        elif op == b"Tc" and operands:
            self.state.char_spacing = float(operands[-1])
        elif op == b"Tw" and operands:
            self.state.word_spacing = float(operands[-1])
        elif op == b"Tz" and operands:
            self.state.horizontal_scale = float(operands[-1]) / 100.0
        elif op == b"Ts" and operands:
            self.state.rise = float(operands[-1])
        elif op == b"Tj" and operands:
            self._show(operands[-1])
        elif op == b"'" and operands:
            self._translate(0.0, -self.state.leading)
            self._show(operands[-1])
        elif op == b'"' and len(operands) >= 3:
            self.state.word_spacing = float(operands[-3])
            self.state.char_spacing = float(operands[-2])
            self._translate(0.0, -self.state.leading)
            self._show(operands[-1])
        elif op == b"TJ" and operands and isinstance(operands[-1], list):
            for item in operands[-1]:
                if isinstance(item, bytes):
                    self._show(item)
                elif isinstance(item, (int, float)):
                    # kerning adjustment, thousandths of text space
                    shift = -float(item) / 1000.0 * self.state.size
                    shift *= self.state.horizontal_scale
                    self.tm = multiply((1, 0, 0, 1, shift, 0), self.tm)

    def _translate(self, tx: float, ty: float) -> None:
        self.tlm = multiply((1, 0, 0, 1, tx, ty), self.tlm)
        self.tm = self.tlm

    def _show(self, raw) -> None:
        state = self.state
        if state.font is None or state.size <= 0 or not isinstance(raw, bytes):
            return
        font = state.font
        for char, width in font.decode(raw):
            advance = width / 1000.0 * state.size + state.char_spacing
            if char == " ":
                advance += state.word_spacing
            advance *= state.horizontal_scale
            if char.strip():
                self._emit(char, width / 1000.0 * state.size * state.horizontal_scale)
            self.tm = multiply((1, 0, 0, 1, advance, 0), self.tm)

    def _emit(self, text: str, width: float) -> None:
        """Emit one box per scalar; ToUnicode may map one code to several."""
        state = self.state
        font = state.font
        device = multiply(self.tm, self.ctm)
        y_low = state.rise + font.descent * state.size
        y_high = state.rise + font.ascent * state.size
        _, _, c, d, _, _ = device
        size = state.size * (c * c + d * d) ** 0.5
        step = width / len(text)
        for i, char in enumerate(text):
            if not char.strip():
                continue
            left, right = i * step, (i + 1) * step
            corners = [
                apply(device, left, y_low),
                apply(device, right, y_low),
                apply(device, left, y_high),
                apply(device, right, y_high),
            ]
            xs = [p[0] for p in corners]
            ys = [p[1] for p in corners]
            self.glyphs.append(
                RawGlyph(
                    text=char,
                    x0=min(xs),
                    y0=min(ys),
                    x1=max(xs),
                    y1=max(ys),
                    size=size,
                    font=font.base_font,
                    bold=font.bold,
                    italic=font.italic,
                )
            )


def page_content(document: Document, page: dict) -> bytes:
    contents = document.resolve(page.get("Contents"))
    parts: list[bytes] = []
    if isinstance(contents, Stream):
        parts.append(contents.data(document))
    elif isinstance(contents, list):
        for item in contents:
            item = document.resolve(item)
            if isinstance(item, Stream):
                parts.append(item.data(document))
    return b"\n".join(parts)
