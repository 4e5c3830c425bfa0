"""Uniform interface to the type-3 pairing group (BLS12-381).

Everything above this package speaks only in terms of Scalar, G1Point,
G2Point, GTElement, pairings and the GroupDescription record, so the
concrete curve stays swappable.
"""

from dataclasses import dataclass

from .fp import R as _R
from .pairing import (
    G2Prepared,
    GTElement,
    final_exponentiation,
    miller_loop,
    multi_pairing,
    pairing,
    pairing_check,
)
from .points import G1Basis, G1Point, G2Basis, G2Point, g1_msm, g2_msm
from .scalars import Scalar

CURVE_ID = "BLS12-381"
CURVE_CODE = 0x01  # wire-format byte for this curve


@dataclass(frozen=True)
class PointSizes:
    g1: int = 48
    g2: int = 96
    scalar: int = 32


@dataclass(frozen=True)
class GroupDescription:
    """The bilinear group: order, generators and serialization parameters."""

    prime_order: int
    generator_g1: G1Point
    generator_g2: G2Point
    curve_id: str
    point_sizes: PointSizes

    def validate(self):
        if self.generator_g1.is_identity() or self.generator_g2.is_identity():
            raise ValueError("group generators must be non-identity")
        if pairing(self.generator_g1, self.generator_g2).is_identity():
            raise ValueError("degenerate pairing on generators")
        return True


_DEFAULT_GROUP = GroupDescription(
    prime_order=int(_R),
    generator_g1=G1Point.generator(),
    generator_g2=G2Point.generator(),
    curve_id=CURVE_ID,
    point_sizes=PointSizes(),
)


def default_group():
    return _DEFAULT_GROUP


__all__ = [
    "CURVE_CODE",
    "CURVE_ID",
    "G1Basis",
    "G1Point",
    "G2Basis",
    "G2Point",
    "G2Prepared",
    "GTElement",
    "GroupDescription",
    "PointSizes",
    "Scalar",
    "default_group",
    "final_exponentiation",
    "g1_msm",
    "g2_msm",
    "miller_loop",
    "multi_pairing",
    "pairing",
    "pairing_check",
]
