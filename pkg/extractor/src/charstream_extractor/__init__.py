"""Character-level PDF text extraction into the charstream format."""

from .errors import ExtractorError, NoTextLayer, PageOutOfRange, UnreadablePdf
from .extract import ExtractionOptions, extract_chars, extract_to_file

__version__ = "0.1.0"

__all__ = [
    "ExtractionOptions",
    "extract_chars",
    "extract_to_file",
    "ExtractorError",
    "NoTextLayer",
    "PageOutOfRange",
    "UnreadablePdf",
    "__version__",
]
