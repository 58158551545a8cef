"""Exception hierarchy shared across the pipeline.

Two broad families drive the CLI exit codes: InputError (bad files,
bad parameters, exit 1) and ServiceError (upstream lookups, exit 2).
"""


class LameError(Exception):
    """Base class for all pipeline errors."""


class InputError(LameError):
    """Invalid input data or parameters."""


class ServiceError(LameError):
    """Failure of an external service the pipeline depends on."""


class SchemaError(InputError):
    """Charstream or record content violates the schema."""


class EmptyPage(InputError):
    """Charstream contains zero glyphs."""


class MissingRecord(InputError):
    """Metadata record has no populated fields to match against."""


class InvalidDoi(InputError):
    """String does not look like a DOI."""


class NotFound(ServiceError):
    """DOI resolver returned 404 or the fixture file is absent."""


class Upstream(ServiceError):
    """DOI resolver failed: non-2xx status, timeout, or unparseable body."""


class TargetTooSmall(InputError):
    """Vocabulary target cannot hold the specials plus the alphabet."""


class UnknownPreset(InputError):
    """Model-config preset name outside the known set."""


class EmptySide(InputError):
    """Journal split left the train or the test side empty."""


class UnknownLabel(InputError):
    """Training row carries a label outside the closed label set."""


class MissingPosition(InputError):
    """Classifier was trained with position features but none was given."""


class LengthMismatch(InputError):
    """Prediction and gold sequences differ in length."""
