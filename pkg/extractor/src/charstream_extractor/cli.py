"""Command line for the extractor.

Exit codes: 0 success, 1 input error (bad PDF, bad page, no text layer),
2 unexpected internal failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ExtractorError
from .extract import ExtractionOptions, extract_to_file


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extract", description="Dump a PDF page's glyphs as a charstream file."
    )
    parser.add_argument("--pdf", required=True, help="input PDF path")
    parser.add_argument("--page", type=int, default=0, help="zero-based page index")
    parser.add_argument("--out", required=True, help="output charstream JSON path")
    parser.add_argument("--min-size", type=float, default=1.0,
                        help="drop glyphs smaller than this many points")
    parser.add_argument("--journal", default="", help="journal id to record")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    options = ExtractionOptions(
        page_index=args.page, min_glyph_size=args.min_size, journal_id=args.journal
    )
    try:
        doc = extract_to_file(args.pdf, args.out, options)
    except ExtractorError as exc:
        print(f"extract: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    print(f"{args.out}: {len(doc['chars'])} glyphs from {args.pdf} page {args.page}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
