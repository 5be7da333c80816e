"""Exception hierarchy shared by the codecs, tables and stream container."""


class CodeError(ValueError):
    """Base class for every error raised by :mod:`zscode`.

    ``index`` is set when the error concerns one word of a batch or stream.
    """

    def __init__(self, message="", index=None):
        if index is not None:
            message = f"word {index}: {message}"
        super().__init__(message)
        self.index = index


class UnknownParityWordError(CodeError):
    """A parity prefix that is not in the codec's table (corrupted codeword)."""


class BoundViolationError(CodeError):
    """A codeword whose disparity exceeds the configured bound."""


class ScheduleInfeasibleError(CodeError):
    """No parity schedule satisfies the per-weight capacity constraints."""


class FrameFormatError(CodeError):
    """Bad magic, version or header fields in a ZSC1 stream."""


class TruncatedStreamError(FrameFormatError):
    pass


class PartialWordError(CodeError):
    """Input bit length is not a multiple of the data word length."""
