"""Structure-preserving signatures on single G1 messages.

Keys are 2x2 matrices over the scalar field, published in the exponent;
signing hides the message row (1, m) behind fresh randomness r, tau, and
verification is two pairing-product equations.  The verification key
caches prepared pairing lines because it participates in eight pairings
per check.
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple

from .curve import (
    G1Point,
    G2Point,
    G2Prepared,
    GroupDescription,
    Scalar,
    default_group,
    pairing_check,
)
from .errors import ParameterError

_SUPPORTED_SECURITY = (128,)


@dataclass(frozen=True)
class SpsPublicParams:
    group: GroupDescription


@dataclass(frozen=True)
class SpsExponents:
    """Full key-generation randomness; retained only by test builds."""

    a: Scalar
    b: Scalar
    k: Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]
    k0: Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]
    k1: Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]


class SpsPublicKey:
    """([D0]_2, [D1]_2, [D]_2, [A]_2); first entry of A is the generator."""

    __slots__ = ("d0", "d1", "d", "a_vec", "_prepared")

    def __init__(self, d0, d1, d, a_vec):
        self.d0 = tuple(d0)
        self.d1 = tuple(d1)
        self.d = tuple(d)
        self.a_vec = tuple(a_vec)
        self._prepared = None

    def prepared(self):
        """Pairing-line precomputation for all eight verification slots."""
        if self._prepared is None:
            self._prepared = {
                "a": tuple(G2Prepared(p) for p in self.a_vec),
                "d": tuple(G2Prepared(p) for p in self.d),
                "d0": tuple(G2Prepared(p) for p in self.d0),
                "d1": tuple(G2Prepared(p) for p in self.d1),
            }
        return self._prepared

    def __eq__(self, other):
        return (
            isinstance(other, SpsPublicKey)
            and self.d0 == other.d0
            and self.d1 == other.d1
            and self.d == other.d
            and self.a_vec == other.a_vec
        )


@dataclass(frozen=True, eq=False)
class SpsSecretKey:
    k: Tuple[Tuple[Scalar, Scalar], Tuple[Scalar, Scalar]]
    p0: Tuple[G1Point, G1Point]
    p1: Tuple[G1Point, G1Point]
    b_vec: Tuple[G1Point, G1Point]
    public: SpsPublicKey
    exponents: Optional[SpsExponents] = field(default=None, repr=False)

    def __eq__(self, other):
        return (
            isinstance(other, SpsSecretKey)
            and self.k == other.k
            and self.p0 == other.p0
            and self.p1 == other.p1
            and self.b_vec == other.b_vec
            and self.public == other.public
        )


@dataclass(frozen=True)
class SpsSignature:
    theta1: Tuple[G1Point, G1Point]
    theta2: Tuple[G1Point, G1Point]
    theta3: Tuple[G1Point, G1Point]
    theta4: G2Point


def sps_setup(security_level=128):
    if security_level not in _SUPPORTED_SECURITY:
        raise ParameterError(f"unsupported security level {security_level}")
    return SpsPublicParams(group=default_group())


def _rand_matrix(rng):
    return (
        (Scalar.random(rng), Scalar.random(rng)),
        (Scalar.random(rng), Scalar.random(rng)),
    )


def sps_keygen_from_exponents(pp, exps):
    """Deterministic key derivation from explicit exponents (test oracle)."""
    g1 = pp.group.generator_g1
    g2 = pp.group.generator_g2
    a, b, k, k0, k1 = exps.a, exps.b, exps.k, exps.k0, exps.k1

    def times_a(m):
        # m * (1, a)^T, a column of two scalars
        return (m[0][0] + m[0][1] * a, m[1][0] + m[1][1] * a)

    def b_row_times(m):
        # (1, b) * m, a row of two scalars
        return (m[0][0] + m[1][0] * b, m[0][1] + m[1][1] * b)

    d = times_a(k)
    d0 = times_a(k0)
    d1 = times_a(k1)
    p0 = b_row_times(k0)
    p1 = b_row_times(k1)
    public = SpsPublicKey(
        d0=(g2 * d0[0], g2 * d0[1]),
        d1=(g2 * d1[0], g2 * d1[1]),
        d=(g2 * d[0], g2 * d[1]),
        a_vec=(g2, g2 * a),
    )
    secret = SpsSecretKey(
        k=k,
        p0=(g1 * p0[0], g1 * p0[1]),
        p1=(g1 * p1[0], g1 * p1[1]),
        b_vec=(g1, g1 * b),
        public=public,
        exponents=exps,
    )
    return public, secret


def sps_keygen(pp, rng=None, *, keep_exponents=False):
    exps = SpsExponents(
        a=Scalar.random(rng),
        b=Scalar.random(rng),
        k=_rand_matrix(rng),
        k0=_rand_matrix(rng),
        k1=_rand_matrix(rng),
    )
    public, secret = sps_keygen_from_exponents(pp, exps)
    if not keep_exponents:
        secret = SpsSecretKey(
            k=secret.k, p0=secret.p0, p1=secret.p1, b_vec=secret.b_vec,
            public=secret.public, exponents=None,
        )
    return public, secret


def sps_sign(pp, sk, message, rng=None, *, r=None, tau=None):
    """Sign a G1 message.  r/tau are test hooks to pin the randomness."""
    if not isinstance(message, G1Point):
        raise ParameterError("message must be a G1 point")
    g1 = pp.group.generator_g1
    g2 = pp.group.generator_g2
    if r is None:
        r = Scalar.random(rng)
    if tau is None:
        tau = Scalar.random(rng)
    k = sk.k
    theta1 = tuple(
        g1 * k[0][j] + message * k[1][j] + (sk.p0[j] + sk.p1[j] * tau) * r
        for j in range(2)
    )
    theta2 = tuple(sk.b_vec[j] * r for j in range(2))
    theta3 = tuple(theta2[j] * tau for j in range(2))
    theta4 = g2 * tau
    return SpsSignature(theta1=theta1, theta2=theta2, theta3=theta3, theta4=theta4)


def sps_verify(pp, pk, message, sig) -> bool:
    """Check both pairing-product equations.

    The 1x2-row pairing convention: a row against a 2-vector is the
    product of componentwise pairings; a row against a single G2 element
    is checked component by component.
    """
    if not isinstance(message, G1Point):
        return False
    prep = pk.prepared()
    g1 = pp.group.generator_g1
    eq1 = pairing_check([
        (sig.theta1[0], prep["a"][0]),
        (sig.theta1[1], prep["a"][1]),
        (-g1, prep["d"][0]),
        (-message, prep["d"][1]),
        (-sig.theta2[0], prep["d0"][0]),
        (-sig.theta2[1], prep["d0"][1]),
        (-sig.theta3[0], prep["d1"][0]),
        (-sig.theta3[1], prep["d1"][1]),
    ])
    if not eq1:
        return False
    theta4 = G2Prepared(sig.theta4)
    gen2 = _prepared_gen2()
    for i in range(2):
        if not pairing_check([(sig.theta2[i], theta4), (-sig.theta3[i], gen2)]):
            return False
    return True


_GEN2_PREPARED = None


def _prepared_gen2():
    global _GEN2_PREPARED
    if _GEN2_PREPARED is None:
        _GEN2_PREPARED = G2Prepared(G2Point.generator())
    return _GEN2_PREPARED
