"""
Error hierarchy for the dmagic library, CLI and HTTP service
"""


class DMagicError(Exception):
    pass


class DomainError(DMagicError, ValueError):
    """Precondition violation: bad base, negative natural, digit out of range."""


class NumeralParseError(DomainError):
    def __init__(self, message, text="", position=None):
        self.text = text
        self.position = position
        if position is not None:
            message = f"{message} (position {position})"
        super().__init__(message)


class OracleBoundError(DomainError):
    pass


class CacheError(DMagicError):
    pass


class BFileError(DMagicError):
    def __init__(self, message, line_number=None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class BFileStructureError(BFileError):
    pass


class FetchError(DMagicError):
    def __init__(self, message, retryable=True):
        self.retryable = retryable
        super().__init__(message)
