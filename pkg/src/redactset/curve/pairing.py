"""Optimal ate pairing with multi-pairing and G2 line precomputation.

The Miller loop runs in affine coordinates over Fp2; line functions are
stored as (c0, -lambda) pairs so a fixed G2 point can be prepared once
and reused across many pairings (verification keys benefit the most).
Multi-pairings share the accumulator squaring across all input pairs and
perform a single final exponentiation.

The final exponentiation uses the cyclotomic decomposition
(x-1)^2 (x+p) (x^2+p^2-1) + 3, which computes the third power of the
textbook pairing value.  That is itself a non-degenerate bilinear
pairing; since GT elements are only ever compared, never serialized,
the fixed cube is unobservable.
"""

from .fp import (
    BLS_X,
    FQ12_ONE,
    fq2_add,
    fq2_inv,
    fq2_mul,
    fq2_mul_scalar,
    fq2_neg,
    fq2_sqr,
    fq2_sub,
    fq12_conj,
    fq12_frobenius,
    fq12_frobenius2,
    fq12_inv,
    fq12_mul,
    fq12_mul_by_014,
    fq12_pow,
    fq12_sqr,
    R,
)
from .points import G1Point, G2Point, _g2_affine

_ABS_X = -BLS_X
_X_BITS = bin(_ABS_X)[3:]  # skip the leading 1; loop runs over these bits


class G2Prepared:
    """Precomputed Miller-loop line coefficients for one G2 point."""

    __slots__ = ("coeffs", "is_identity")

    def __init__(self, point):
        if not isinstance(point, G2Point):
            raise TypeError("G2Prepared expects a G2Point")
        aff = _g2_affine(point._jac)
        if aff is None:
            self.is_identity = True
            self.coeffs = []
            return
        self.is_identity = False
        xq, yq = aff
        coeffs = []
        xr, yr = xq, yq
        for bit in _X_BITS:
            # doubling step: lambda = 3 xr^2 / (2 yr)
            lam = fq2_mul(fq2_mul_scalar(fq2_sqr(xr), 3), fq2_inv(fq2_add(yr, yr)))
            c0 = fq2_sub(fq2_mul(lam, xr), yr)
            coeffs.append((c0, fq2_neg(lam)))
            x3 = fq2_sub(fq2_sqr(lam), fq2_add(xr, xr))
            yr = fq2_sub(fq2_mul(lam, fq2_sub(xr, x3)), yr)
            xr = x3
            if bit == "1":
                # addition step with the base point
                lam = fq2_mul(fq2_sub(yr, yq), fq2_inv(fq2_sub(xr, xq)))
                c0 = fq2_sub(fq2_mul(lam, xq), yq)
                coeffs.append((c0, fq2_neg(lam)))
                x3 = fq2_sub(fq2_sub(fq2_sqr(lam), xr), xq)
                yr = fq2_sub(fq2_mul(lam, fq2_sub(xr, x3)), yr)
                xr = x3
        self.coeffs = coeffs


def _prepare(q):
    if isinstance(q, G2Prepared):
        return q
    return G2Prepared(q)


def miller_loop(pairs):
    """Product of Miller-loop values over (G1Point, G2Point|G2Prepared) pairs.

    Pairs involving an identity element contribute the neutral value.
    """
    active = []
    for p, q in pairs:
        if p.is_identity():
            continue
        prep = _prepare(q)
        if prep.is_identity:
            continue
        aff = p.affine()
        active.append((aff[0], aff[1], prep.coeffs))
    if not active:
        return FQ12_ONE
    f = FQ12_ONE
    idx = 0
    for bit in _X_BITS:
        f = fq12_sqr(f)
        for xp, yp, coeffs in active:
            c0, neg_lam = coeffs[idx]
            f = fq12_mul_by_014(f, c0, fq2_mul_scalar(neg_lam, xp), (yp, 0))
        idx += 1
        if bit == "1":
            for xp, yp, coeffs in active:
                c0, neg_lam = coeffs[idx]
                f = fq12_mul_by_014(f, c0, fq2_mul_scalar(neg_lam, xp), (yp, 0))
            idx += 1
    # the curve parameter is negative: conjugate once at the end
    return fq12_conj(f)


def _exp_by_x(a):
    # a^x for the (negative) curve parameter; input must be cyclotomic
    r = a
    for bit in _X_BITS:
        r = fq12_sqr(r)
        if bit == "1":
            r = fq12_mul(r, a)
    return fq12_conj(r)


def final_exponentiation(f):
    # easy part: f^((p^6-1)(p^2+1))
    t = fq12_mul(fq12_conj(f), fq12_inv(f))
    t = fq12_mul(fq12_frobenius2(t), t)
    # hard part via (x-1)^2 (x+p) (x^2+p^2-1) + 3; conj == inverse from here on
    t0 = fq12_mul(_exp_by_x(t), fq12_conj(t))
    t0 = fq12_mul(_exp_by_x(t0), fq12_conj(t0))
    t1 = fq12_mul(_exp_by_x(t0), fq12_frobenius(t0))
    t2 = _exp_by_x(_exp_by_x(t1))
    t4 = fq12_mul(fq12_mul(t2, fq12_frobenius2(t1)), fq12_conj(t1))
    return fq12_mul(fq12_mul(t4, fq12_sqr(t)), t)


class GTElement:
    """Element of the pairing target group (order-r subgroup of Fp12*)."""

    __slots__ = ("_val",)

    def __init__(self, val):
        object.__setattr__(self, "_val", val)

    def __setattr__(self, *_):
        raise AttributeError("GTElement is immutable")

    @classmethod
    def identity(cls):
        return _GT_IDENTITY

    def is_identity(self):
        return self._val == FQ12_ONE

    def __mul__(self, other):
        if not isinstance(other, GTElement):
            return NotImplemented
        return GTElement(fq12_mul(self._val, other._val))

    def __pow__(self, k):
        return GTElement(fq12_pow(self._val, int(k) % R))

    def inverse(self):
        return GTElement(fq12_conj(self._val))

    def __eq__(self, other):
        return isinstance(other, GTElement) and self._val == other._val

    def __hash__(self):
        return hash((self._val[0][0], self._val[1][0]))

    def __repr__(self):
        tag = "identity" if self.is_identity() else "element"
        return f"GTElement(<{tag}>)"


_GT_IDENTITY = GTElement(FQ12_ONE)


def pairing(p, q):
    """The bilinear map e(p, q) for p in G1 and q in G2."""
    if not isinstance(p, G1Point):
        raise TypeError("pairing expects a G1Point first argument")
    return multi_pairing([(p, q)])


def multi_pairing(pairs):
    """Product of pairings over the given (G1, G2) pairs; empty input gives 1."""
    pairs = list(pairs)
    if not pairs:
        return _GT_IDENTITY
    f = miller_loop(pairs)
    if f == FQ12_ONE:
        return _GT_IDENTITY
    return GTElement(final_exponentiation(f))


def pairing_check(pairs):
    """True iff the product of pairings over the pairs is the GT identity."""
    f = miller_loop(pairs)
    if f == FQ12_ONE:
        return True
    return final_exponentiation(f) == FQ12_ONE
