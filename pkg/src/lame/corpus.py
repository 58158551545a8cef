"""Training-corpus serialization, subword vocabulary, and config presets.

Pages become one pretraining line each, box texts joined by the [SEP]
token, plus one fine-tuning row per box. The vocabulary is built by
frequency merging over word-initial and word-internal ("##"-prefixed)
symbols and consumed by a greedy longest-match tokenizer.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable

from .errors import TargetTooSmall, UnknownPreset
from .matcher import LabeledPage

SPECIALS = ("[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]")
SEP = "[SEP]"
_SEP_ESCAPED = "[SEP​]"
_SEP_JOIN = " [SEP] "


@dataclass(frozen=True)
class Vocab:
    entries: tuple[str, ...]
    target_size: int = 10000

    def __post_init__(self):
        if self.entries[: len(SPECIALS)] != SPECIALS:
            raise ValueError("specials must occupy ids 0-4")
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("duplicate vocabulary entries")
        if len(self.entries) > self.target_size:
            raise ValueError("vocabulary exceeds target size")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ModelConfig:
    preset: str
    layers: int
    hidden_size: int
    attention_heads: int
    epochs: int
    batch_size: int
    learning_rate: float
    max_seq_len: int
    vocab_size: int


_PRESETS = {
    "base": (12, 768, 12),
    "small": (4, 512, 8),
    "tiny": (2, 128, 2),
}


def emit_model_config(preset: str) -> ModelConfig:
    """Fixed pretraining/fine-tuning configuration for a size preset."""
    if preset not in _PRESETS:
        raise UnknownPreset(f"unknown preset {preset!r}, expected one of {sorted(_PRESETS)}")
    layers, hidden, heads = _PRESETS[preset]
    return ModelConfig(
        preset=preset,
        layers=layers,
        hidden_size=hidden,
        attention_heads=heads,
        epochs=5,
        batch_size=32,
        learning_rate=2e-5,
        max_seq_len=256,
        vocab_size=10000,
    )


def model_config_text(config: ModelConfig) -> str:
    """Flat key=value rendering for the config file interface."""
    pairs = [
        ("preset", config.preset),
        ("layers", config.layers),
        ("hidden_size", config.hidden_size),
        ("attention_heads", config.attention_heads),
        ("epochs", config.epochs),
        ("batch_size", config.batch_size),
        ("learning_rate", config.learning_rate),
        ("max_seq_len", config.max_seq_len),
        ("vocab_size", config.vocab_size),
    ]
    return "".join(f"{k}={v}\n" for k, v in pairs)


def join_box_texts(texts: list[str]) -> str:
    """Join box texts with the [SEP] separator, escaping literal [SEP]s.

    A literal [SEP] inside box text is defused with a zero-width space so
    the joined line still splits back into exactly one piece per box.
    """
    return _SEP_JOIN.join(text.replace(SEP, _SEP_ESCAPED) for text in texts)


def serialize_page(page: LabeledPage) -> tuple[str, list[dict]]:
    """One pretraining line and per-box fine-tuning rows for a page."""
    if not page.boxes:
        raise ValueError(f"page {page.doc_id} has no boxes")
    line = join_box_texts([lb.box.text for lb in page.boxes])
    rows = [
        {
            "text": lb.box.text,
            "label": lb.label,
            "doc_id": page.doc_id,
            "journal_id": page.journal_id,
            "order": lb.box.order,
        }
        for lb in page.boxes
    ]
    return line, rows


def parse_pretrain_line(line: str) -> list[str]:
    """Invert serialize_page's joining, restoring escaped separators."""
    return [part.replace(_SEP_ESCAPED, SEP) for part in line.split(_SEP_JOIN)]


def _word_symbols(word: str) -> tuple[str, ...]:
    return (word[0],) + tuple("##" + ch for ch in word[1:])


def _symbol_sort_key(symbol: str) -> tuple[str, int]:
    # Collate by the bare text, word-initial form before continuation.
    if symbol.startswith("##"):
        return (symbol[2:], 1)
    return (symbol, 0)


def _merge_symbols(a: str, b: str) -> str:
    return a + (b[2:] if b.startswith("##") else b)


def build_vocab(corpus_lines: Iterable[str], target_size: int = 10000) -> Vocab:
    """Build a subword vocabulary by iterative pair merging.

    Starts from the specials, every distinct character, and a "##" form
    for every character seen word-internally, then repeatedly adds the
    merge of the most frequent adjacent symbol pair (ties to the smaller
    pair) until the target size is reached or no pair occurs twice.
    """
    word_freq: Counter[str] = Counter()
    for line in corpus_lines:
        word_freq.update(line.split())

    chars = sorted({ch for word in word_freq for ch in word})
    internal = sorted({ch for word in word_freq for ch in word[1:]})
    alphabet = list(chars) + ["##" + ch for ch in internal]
    if target_size < len(SPECIALS) + len(alphabet):
        raise TargetTooSmall(
            f"target {target_size} cannot hold {len(SPECIALS)} specials "
            f"plus an alphabet of {len(alphabet)} symbols"
        )

    entries = list(SPECIALS) + alphabet
    words = {w: _word_symbols(w) for w in word_freq}

    pair_counts: Counter[tuple[str, str]] = Counter()
    pair_words: dict[tuple[str, str], set[str]] = {}
    for w, syms in words.items():
        freq = word_freq[w]
        for pair in zip(syms, syms[1:]):
            pair_counts[pair] += freq
            pair_words.setdefault(pair, set()).add(w)

    def pair_key(pair: tuple[str, str]):
        return (_symbol_sort_key(pair[0]), _symbol_sort_key(pair[1]))

    while len(entries) < target_size and pair_counts:
        best_count = max(pair_counts.values())
        if best_count < 2:
            break
        best = min((p for p, c in pair_counts.items() if c == best_count), key=pair_key)
        merged = _merge_symbols(*best)

        for w in sorted(pair_words.get(best, ())):
            syms = words[w]
            freq = word_freq[w]
            for pair in zip(syms, syms[1:]):
                pair_counts[pair] -= freq
                if pair_counts[pair] <= 0:
                    del pair_counts[pair]
                group = pair_words.get(pair)
                if group is not None:
                    group.discard(w)
                    if not group:
                        del pair_words[pair]
            new_syms = []
            i = 0
            while i < len(syms):
                if i + 1 < len(syms) and (syms[i], syms[i + 1]) == best:
                    new_syms.append(merged)
                    i += 2
                else:
                    new_syms.append(syms[i])
                    i += 1
            words[w] = tuple(new_syms)
            for pair in zip(new_syms, new_syms[1:]):
                pair_counts[pair] += freq
                pair_words.setdefault(pair, set()).add(w)

        if merged not in entries:
            entries.append(merged)

    return Vocab(entries=tuple(entries), target_size=target_size)


def tokenize(text: str, vocab: Vocab, max_seq_len: int = 256) -> list[str]:
    """Greedy longest-match subword tokenization, truncated to max_seq_len."""
    lookup = set(vocab.entries)
    unk = SPECIALS[1]
    tokens: list[str] = []
    for word in text.split():
        pieces = []
        start = 0
        while start < len(word):
            end = len(word)
            piece = None
            while end > start:
                cand = word[start:end]
                if start > 0:
                    cand = "##" + cand
                if cand in lookup:
                    piece = cand
                    break
                end -= 1
            if piece is None:
                pieces = [unk]
                break
            pieces.append(piece)
            start = end
        tokens.extend(pieces)
        if len(tokens) >= max_seq_len:
            break
    return tokens[:max_seq_len]


def vocab_file_text(vocab: Vocab) -> str:
    """One token per line; the line number (from zero) is the token id."""
    return "".join(entry + "\n" for entry in vocab.entries)


def load_vocab(text: str, target_size: int | None = None) -> Vocab:
    entries = tuple(line for line in text.splitlines() if line)
    return Vocab(entries=entries, target_size=target_size or max(10000, len(entries)))
