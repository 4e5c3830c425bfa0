"""Exception hierarchy shared across the library."""


class RedactSetError(Exception):
    """Base class for all library errors."""


class ParameterError(RedactSetError):
    """An argument violates a documented precondition (bad bound, empty set, ...)."""


class DomainError(RedactSetError):
    """A field/group operation was applied outside its domain (e.g. inverse of zero)."""


class CapacityError(ParameterError):
    """A polynomial or set exceeds the capacity of a commitment key."""


class DecodeError(RedactSetError):
    """Serialized bytes were rejected (wrong length, off-curve point, bad tag...)."""


class EncodingError(RedactSetError):
    """A document cannot be mapped to a root set (duplicate blocks, empty input)."""
