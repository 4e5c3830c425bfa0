"""Scalar field Z_q for the curve's prime-order subgroups."""

import secrets

from gmpy2 import invert, mpz

from ..errors import DomainError
from .fp import R

_R_INT = int(R)


class Scalar:
    """Residue mod q, kept canonical in [0, q)."""

    __slots__ = ("value",)

    MODULUS = _R_INT

    def __init__(self, value):
        object.__setattr__(self, "value", int(value) % _R_INT)

    def __setattr__(self, *_):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def from_integer(cls, value):
        return cls(value)

    @classmethod
    def random(cls, rng=None):
        if rng is None:
            return cls(secrets.randbelow(_R_INT))
        return cls(rng.randrange(_R_INT))

    @classmethod
    def random_nonzero(cls, rng=None):
        while True:
            s = cls.random(rng)
            if s.value != 0:
                return s

    def __add__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.value + other.value)

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return Scalar(self.value - other.value)

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return Scalar(self.value * other.value)
        return NotImplemented

    def __neg__(self):
        return Scalar(-self.value)

    def inverse(self):
        if self.value == 0:
            raise DomainError("zero has no multiplicative inverse")
        return Scalar(invert(mpz(self.value), R))

    def is_zero(self):
        return self.value == 0

    def __int__(self):
        return self.value

    def __eq__(self, other):
        return isinstance(other, Scalar) and self.value == other.value

    def __lt__(self, other):
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.value < other.value

    def __hash__(self):
        return hash((Scalar, self.value))

    def __repr__(self):
        return f"Scalar({self.value:#x})"

    def to_bytes(self):
        return self.value.to_bytes(32, "big")

    @classmethod
    def from_bytes(cls, data):
        from ..errors import DecodeError

        if len(data) != 32:
            raise DecodeError(f"scalar must be 32 bytes, got {len(data)}")
        value = int.from_bytes(data, "big")
        if value >= _R_INT:
            raise DecodeError("scalar out of range")
        return cls(value)
