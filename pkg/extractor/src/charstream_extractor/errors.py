class ExtractorError(Exception):
    """Base class for extraction failures."""


class UnreadablePdf(ExtractorError):
    """File is not a PDF this backend can parse."""


class PageOutOfRange(ExtractorError):
    """Requested page index beyond the document's page count."""


class NoTextLayer(ExtractorError):
    """The requested page carries no extractable text."""
