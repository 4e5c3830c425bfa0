"""Set commitments with constant-size subset opening.

Commit to a set S of scalars as C = [rho * f_S(a)]_1 against a key of
trapdoor powers; a single G1 element then witnesses any non-empty subset.
Both degenerate branches (a committed element colliding with the key
trapdoor) are implemented, as is the bottom witness they can force.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .curve import (
    G1Basis,
    G1Point,
    G2Basis,
    G2Point,
    G2Prepared,
    GroupDescription,
    Scalar,
    default_group,
    pairing_check,
)
from .errors import ParameterError
from .polynomials import RootSet, expand_roots, eval_in_group, poly_eval

_SUPPORTED_SECURITY = (128,)


@dataclass(frozen=True)
class ScPublicParams:
    group: GroupDescription


class CommitmentKey:
    """Trapdoor powers ([a^i]_1, [a^i]_2) for i in 1..max_set_size.

    The trapdoor itself is retained only when key generation is asked to
    keep it (test oracles); it never leaves the process via serialization.
    """

    __slots__ = ("max_set_size", "powers_g1", "powers_g2", "test_trapdoor",
                 "_g1_basis", "_g2_basis")

    def __init__(self, max_set_size, powers_g1, powers_g2, test_trapdoor=None):
        if max_set_size < 1:
            raise ParameterError("commitment key bound must be >= 1")
        if len(powers_g1) != max_set_size or len(powers_g2) != max_set_size:
            raise ParameterError("power sequences must have length max_set_size")
        self.max_set_size = max_set_size
        self.powers_g1 = tuple(powers_g1)
        self.powers_g2 = tuple(powers_g2)
        self.test_trapdoor = test_trapdoor
        self._g1_basis = None
        self._g2_basis = None

    def g1_basis(self):
        if self._g1_basis is None:
            self._g1_basis = G1Basis((G1Point.generator(),) + self.powers_g1)
        return self._g1_basis

    def g2_basis(self):
        if self._g2_basis is None:
            self._g2_basis = G2Basis((G2Point.generator(),) + self.powers_g2)
        return self._g2_basis

    def __eq__(self, other):
        return (
            isinstance(other, CommitmentKey)
            and self.max_set_size == other.max_set_size
            and self.powers_g1 == other.powers_g1
            and self.powers_g2 == other.powers_g2
        )


@dataclass(frozen=True)
class Commitment:
    point: G1Point


@dataclass(frozen=True)
class Opening:
    branch: int  # 0 = regular, 1 = trapdoor hit
    rho: Scalar


class SubsetWitness:
    """Either a G1 witness point or the distinguished bottom witness."""

    __slots__ = ("point",)

    def __init__(self, point):
        object.__setattr__(self, "point", point)

    def __setattr__(self, *_):
        raise AttributeError("SubsetWitness is immutable")

    @classmethod
    def present(cls, point):
        return cls(point)

    @classmethod
    def bottom(cls):
        return cls(None)

    @property
    def is_bottom(self):
        return self.point is None

    def __eq__(self, other):
        return isinstance(other, SubsetWitness) and self.point == other.point

    def __repr__(self):
        return "SubsetWitness(bottom)" if self.is_bottom else f"SubsetWitness({self.point!r})"


def sc_setup(security_level=128):
    if security_level not in _SUPPORTED_SECURITY:
        raise ParameterError(f"unsupported security level {security_level}")
    return ScPublicParams(group=default_group())


def sc_kgen(pp, max_set_size, rng=None, *, keep_trapdoor=False):
    """Sample a trapdoor a and publish its powers in both groups."""
    if max_set_size < 1:
        raise ParameterError("commitment key bound must be >= 1")
    a = Scalar.random(rng)
    g1 = pp.group.generator_g1
    g2 = pp.group.generator_g2
    powers_g1 = []
    powers_g2 = []
    acc = Scalar(1)
    for _ in range(max_set_size):
        acc = acc * a
        powers_g1.append(g1 * acc)
        powers_g2.append(g2 * acc)
    return CommitmentKey(
        max_set_size,
        powers_g1,
        powers_g2,
        test_trapdoor=a if keep_trapdoor else None,
    )


def _set_in_range(s, ck):
    return 0 < len(s) <= ck.max_set_size


def _trapdoor_hit(s, ck):
    # Detection without knowing a: compare s*G1 against the published [a]_1.
    first_power = ck.powers_g1[0]
    g1 = G1Point.generator()
    for elem in s:
        if g1 * elem == first_power:
            return elem
    return None


def sc_commit(pp, ck, s, rng=None) -> Optional[Tuple[Commitment, Opening]]:
    """Commit to a set; None for an empty or oversize set."""
    if not _set_in_range(s, ck):
        return None
    hit = _trapdoor_hit(s, ck)
    if hit is not None:
        c = pp.group.generator_g1 * Scalar.random_nonzero(rng)
        return Commitment(c), Opening(branch=1, rho=hit)
    rho = Scalar.random_nonzero(rng)
    f = expand_roots(s)
    scaled = [(rho * c).value for c in f.coeffs]
    c = ck.g1_basis().combine(scaled)
    return Commitment(c), Opening(branch=0, rho=rho)


def sc_open(pp, ck, c, s, o) -> bool:
    if c.point.is_identity():
        return False
    if not _set_in_range(s, ck):
        return False
    if o.branch == 1:
        return G1Point.generator() * o.rho == ck.powers_g1[0]
    if o.branch == 0:
        f = expand_roots(s)
        scaled = [(o.rho * coeff).value for coeff in f.coeffs]
        return ck.g1_basis().combine(scaled) == c.point
    return False


def sc_osubset(pp, ck, c, s, o, s_prime) -> Optional[SubsetWitness]:
    """Witness that s_prime is a subset of the committed set; None on failure.

    An empty s_prime is rejected here; an empty s already fails the
    opening check.
    """
    if not sc_open(pp, ck, c, s, o):
        return None
    if s_prime.is_empty() or not s_prime.issubset(s):
        return None
    if o.branch == 1:
        if o.rho in s_prime:
            return SubsetWitness.bottom()
        denom = poly_eval(expand_roots(s_prime), o.rho)
        return SubsetWitness.present(c.point * denom.inverse())
    remainder = s.difference(s_prime)
    f = expand_roots(remainder)
    scaled = [(o.rho * coeff).value for coeff in f.coeffs]
    return SubsetWitness.present(ck.g1_basis().combine(scaled))


def sc_vsubset(pp, ck, c, t, w) -> bool:
    """Check a subset witness against commitment c and candidate subset t."""
    if c.point.is_identity():
        return False
    if not _set_in_range(t, ck):
        return False
    if _trapdoor_hit(t, ck) is not None:
        return w.is_bottom
    if w.is_bottom or w.point.is_identity():
        return False
    f_t = eval_in_group(expand_roots(t), ck, "g2")
    return pairing_check([
        (w.point, G2Prepared(f_t)),
        (-c.point, _prepared_gen2()),
    ])


_GEN2_PREPARED = None


def _prepared_gen2():
    global _GEN2_PREPARED
    if _GEN2_PREPARED is None:
        _GEN2_PREPARED = G2Prepared(G2Point.generator())
    return _GEN2_PREPARED
