"""Minimal PDF object model and parser.

Covers the classic subset: plain xref tables, FlateDecode streams, and
direct or indirect objects built from names, numbers, strings, arrays,
and dictionaries. Object streams and cross-reference streams are out of
scope and reported as unreadable.
"""

from __future__ import annotations

import re
import zlib
from dataclasses import dataclass

from .errors import UnreadablePdf

_WHITESPACE = b"\x00\t\n\x0c\r "
_DELIMITERS = b"()<>[]{}/%"


@dataclass(frozen=True)
class Ref:
    num: int
    gen: int


class Name(str):
    """A PDF name; distinct from a decoded string value."""


class Lexer:
    def __init__(self, data: bytes, pos: int = 0):
        self.data = data
        self.pos = pos

    def skip_ws(self) -> None:
        data = self.data
        while self.pos < len(data):
            ch = data[self.pos : self.pos + 1]
            if ch in b"%":
                eol = data.find(b"\n", self.pos)
                self.pos = len(data) if eol < 0 else eol + 1
            elif ch in _WHITESPACE:
                self.pos += 1
            else:
                return

    def peek_byte(self) -> bytes:
        return self.data[self.pos : self.pos + 1]

    def read_token(self) -> bytes:
        """Regular token: keyword or number."""
        data = self.data
        start = self.pos
        while self.pos < len(data):
            ch = data[self.pos : self.pos + 1]
            if ch in _WHITESPACE or ch in _DELIMITERS:
                break
            self.pos += 1
        return data[start : self.pos]

    def parse_name(self) -> Name:
        assert self.data[self.pos : self.pos + 1] == b"/"
        self.pos += 1
        raw = self.read_token()
        out = bytearray()
        i = 0
        while i < len(raw):
            if raw[i : i + 1] == b"#" and i + 2 < len(raw) + 1:
                try:
                    out.append(int(raw[i + 1 : i + 3], 16))
                    i += 3
                    continue
                except ValueError:
                    pass
            out.append(raw[i])
            i += 1
        return Name(out.decode("latin-1"))

    def parse_literal_string(self) -> bytes:
        data = self.data
        assert data[self.pos : self.pos + 1] == b"("
        self.pos += 1
        out = bytearray()
        depth = 1
        while self.pos < len(data):
            ch = data[self.pos]
            self.pos += 1
            if ch == 0x5C:  # backslash
                if self.pos >= len(data):
                    break
                esc = data[self.pos]
                self.pos += 1
                if esc in b"nrtbf":
                    out.append({"n": 10, "r": 13, "t": 9, "b": 8, "f": 12}[chr(esc)])
                elif esc in b"()\\":
                    out.append(esc)
                elif 0x30 <= esc <= 0x37:  # octal, up to three digits
                    digits = chr(esc)
                    while len(digits) < 3 and 0x30 <= data[self.pos] <= 0x37:
                        digits += chr(data[self.pos])
                        self.pos += 1
                    out.append(int(digits, 8) & 0xFF)
                elif esc in (10, 13):  # line continuation
                    if esc == 13 and data[self.pos : self.pos + 1] == b"\n":
                        self.pos += 1
                else:
                    out.append(esc)
            elif ch == 0x28:
                depth += 1
                out.append(ch)
            elif ch == 0x29:
                depth -= 1
                if depth == 0:
                    return bytes(out)
                out.append(ch)
            else:
                out.append(ch)
        raise UnreadablePdf("unterminated literal string")

    def parse_hex_string(self) -> bytes:
        end = self.data.find(b">", self.pos)
        if end < 0:
            raise UnreadablePdf("unterminated hex string")
        digits = re.sub(rb"[^0-9A-Fa-f]", b"", self.data[self.pos + 1 : end])
        self.pos = end + 1
        if len(digits) % 2:
            digits += b"0"
        return bytes.fromhex(digits.decode("ascii"))

    def parse_object(self):
        self.skip_ws()
        ch = self.peek_byte()
        if not ch:
            raise UnreadablePdf("unexpected end of data")
        if ch == b"/":
            return self.parse_name()
        if ch == b"(":
            return self.parse_literal_string()
        if ch == b"<":
            if self.data[self.pos : self.pos + 2] == b"<<":
                return self.parse_dict()
            return self.parse_hex_string()
        if ch == b"[":
            self.pos += 1
            items = []
            while True:
                self.skip_ws()
                if self.peek_byte() == b"]":
                    self.pos += 1
                    return items
                items.append(self.parse_object())
        if ch == b"]":
            raise UnreadablePdf("unbalanced array")
        token = self.read_token()
        if token in (b"true", b"false"):
            return token == b"true"
        if token == b"null":
            return None
        try:
            return self._number_or_ref(token)
        except ValueError as exc:
            raise UnreadablePdf(f"unexpected token {token!r}") from exc

    def _number_or_ref(self, token: bytes):
        if re.fullmatch(rb"[+-]?\d+", token):
            value = int(token)
            # lookahead for "gen R"
            save = self.pos
            self.skip_ws()
            gen_token = self.read_token()
            if re.fullmatch(rb"\d+", gen_token or b""):
                self.skip_ws()
                if self.read_token() == b"R":
                    return Ref(value, int(gen_token))
            self.pos = save
            return value
        return float(token)

    def parse_dict(self) -> dict:
        assert self.data[self.pos : self.pos + 2] == b"<<"
        self.pos += 2
        out = {}
        while True:
            self.skip_ws()
            if self.data[self.pos : self.pos + 2] == b">>":
                self.pos += 2
                return out
            key = self.parse_object()
            if not isinstance(key, Name):
                raise UnreadablePdf(f"dictionary key is not a name: {key!r}")
            out[str(key)] = self.parse_object()


@dataclass
class Stream:
    attrs: dict
    raw: bytes

    def data(self, document: "Document") -> bytes:
        filters = document.resolve(self.attrs.get("Filter"))
        if filters is None:
            return self.raw
        if isinstance(filters, Name):
            filters = [filters]
        data = self.raw
        for name in filters:
            if str(name) == "FlateDecode":
                try:
                    data = zlib.decompress(data)
                except zlib.error as exc:
                    raise UnreadablePdf(f"bad FlateDecode stream: {exc}") from exc
            else:
                raise UnreadablePdf(f"unsupported stream filter {name}")
        return data


class Document:
    """Parsed PDF with lazy object access."""

    def __init__(self, data: bytes):
        if not data.startswith(b"%PDF-"):
            raise UnreadablePdf("missing %PDF header")
        self.data = data
        self._cache: dict[int, object] = {}
        self.offsets: dict[int, int] = {}
        self.trailer: dict = {}
        try:
            self._load_xref()
        except UnreadablePdf:
            self._scan_objects()
        if not self.offsets:
            raise UnreadablePdf("no objects found")
        if not self.trailer:
            self._find_trailer_dict()

    # -- cross-reference handling -------------------------------------

    def _load_xref(self) -> None:
        tail = self.data[-2048:]
        match = None
        for match in re.finditer(rb"startxref\s+(\d+)", tail):
            pass
        if match is None:
            raise UnreadablePdf("no startxref")
        offset = int(match.group(1))
        seen = set()
        while offset and offset not in seen:
            seen.add(offset)
            offset = self._load_xref_section(offset)

    def _load_xref_section(self, offset: int) -> int:
        lexer = Lexer(self.data, offset)
        lexer.skip_ws()
        if lexer.read_token() != b"xref":
            raise UnreadablePdf("cross-reference streams are not supported")
        while True:
            lexer.skip_ws()
            save = lexer.pos
            token = lexer.read_token()
            if token == b"trailer":
                lexer.skip_ws()
                trailer = lexer.parse_dict()
                if not self.trailer:
                    self.trailer = trailer
                prev = trailer.get("Prev")
                return int(prev) if isinstance(prev, (int, float)) else 0
            if not re.fullmatch(rb"\d+", token or b""):
                raise UnreadablePdf("malformed xref section")
            first = int(token)
            lexer.skip_ws()
            count = int(lexer.read_token())
            entry_re = re.compile(rb"(\d{10})[ ]+(\d{5})[ ]+([nf])[ \r\n]*")
            lexer.skip_ws()
            for i in range(count):
                entry = entry_re.match(self.data, lexer.pos)
                if entry is None:
                    raise UnreadablePdf("malformed xref entry")
                num = first + i
                if entry.group(3) == b"n" and num not in self.offsets:
                    self.offsets[num] = int(entry.group(1))
                lexer.pos = entry.end()

    def _scan_objects(self) -> None:
        for match in re.finditer(rb"(\d+)\s+(\d+)\s+obj\b", self.data):
            self.offsets.setdefault(int(match.group(1)), match.start())

    def _find_trailer_dict(self) -> None:
        idx = self.data.rfind(b"trailer")
        if idx >= 0:
            lexer = Lexer(self.data, idx + len(b"trailer"))
            lexer.skip_ws()
            try:
                self.trailer = lexer.parse_dict()
                return
            except UnreadablePdf:
                pass
        raise UnreadablePdf("no trailer dictionary")

    # -- object access -------------------------------------------------

    def get(self, num: int):
        if num in self._cache:
            return self._cache[num]
        if num not in self.offsets:
            return None
        lexer = Lexer(self.data, self.offsets[num])
        lexer.skip_ws()
        header = re.match(rb"(\d+)\s+(\d+)\s+obj", self.data[lexer.pos :])
        if header is None:
            raise UnreadablePdf(f"object {num} not at recorded offset")
        lexer.pos += header.end()
        value = lexer.parse_object()
        lexer.skip_ws()
        if self.data[lexer.pos : lexer.pos + 6] == b"stream":
            lexer.pos += 6
            if self.data[lexer.pos : lexer.pos + 2] == b"\r\n":
                lexer.pos += 2
            elif self.data[lexer.pos : lexer.pos + 1] == b"\n":
                lexer.pos += 1
            length = self.resolve(value.get("Length"))
            if not isinstance(length, int):
                raise UnreadablePdf(f"object {num}: stream without usable Length")
            raw = self.data[lexer.pos : lexer.pos + length]
            value = Stream(attrs=value, raw=raw)
        self._cache[num] = value
        return value

    def resolve(self, value):
        seen = 0
        while isinstance(value, Ref):
            value = self.get(value.num)
            seen += 1
            if seen > 64:
                raise UnreadablePdf("reference cycle")
        return value

    # -- page tree ------------------------------------------------------

    def pages(self) -> list[dict]:
        root = self.resolve(self.trailer.get("Root"))
        if not isinstance(root, dict):
            raise UnreadablePdf("no document catalog")
        tree = self.resolve(root.get("Pages"))
        if not isinstance(tree, dict):
            raise UnreadablePdf("no page tree")
        found: list[dict] = []
        self._walk(tree, {}, found, 0)
        if not found:
            raise UnreadablePdf("page tree has no pages")
        return found

    _INHERITED = ("Resources", "MediaBox", "Rotate")

    def _walk(self, node: dict, inherited: dict, found: list, depth: int) -> None:
        if depth > 32:
            raise UnreadablePdf("page tree too deep")
        passed = dict(inherited)
        for key in self._INHERITED:
            if key in node:
                passed[key] = node[key]
        kind = str(node.get("Type", ""))
        if kind == "Page" or ("Kids" not in node and kind != "Pages"):
            page = dict(passed)
            page.update(node)
            found.append(page)
            return
        for kid in self.resolve(node.get("Kids")) or []:
            kid_node = self.resolve(kid)
            if isinstance(kid_node, dict):
                self._walk(kid_node, passed, found, depth + 1)
