"""Exception hierarchy shared by the whole toolkit.

Validation-type errors map to CLI exit code 2, I/O-type errors to exit
code 3 (see cli.main).
"""


class WxBenchError(Exception):
    """Base class for every error raised by wxbench."""


class ValidationError(WxBenchError):
    """Input violates a documented contract (exit code 2)."""


class IoError(WxBenchError):
    """File-level failure: missing, unreadable, or corrupt (exit code 3)."""


class NotFound(IoError):
    pass


class MalformedPng(IoError):
    pass


class NonBinaryMask(ValidationError):
    """A ground-truth mask contains samples other than 0 or 255."""


class SchemaViolation(ValidationError):
    """Manifest line does not match the documented schema."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimMismatch(ValidationError):
    """Prediction and ground truth have different pixel dimensions."""


class EmptyCorpus(ValidationError):
    pass


class EmptyList(ValidationError):
    pass


class MissingMask(ValidationError):
    pass


class MissingPrediction(ValidationError):
    pass
