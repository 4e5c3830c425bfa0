"""G1/G2 point arithmetic and compressed serialization for BLS12-381.

Internal representation is Jacobian (X, Y, Z), Z = 0 for the identity.
G1 coordinates are mpz, G2 coordinates are Fp2 tuples.  Serialization
follows the common 48/96-byte compressed convention used across the
curve's ecosystem (flag bits in the top three bits of the first byte,
big-endian field elements, G2 x written c1 then c0).
"""

from gmpy2 import invert, mpz

from ..errors import DecodeError
from .fp import (
    P,
    R,
    FQ2_ONE,
    FQ2_ZERO,
    fp_sqrt,
    fq2_add,
    fq2_inv,
    fq2_is_zero,
    fq2_mul,
    fq2_mul_scalar,
    fq2_neg,
    fq2_sqr,
    fq2_sqrt,
    fq2_sub,
)

B1 = mpz(4)
B2 = (mpz(4), mpz(4))  # 4 * (1 + u)

_G1_GEN_X = mpz(0x17F1D3A73197D7942695638C4FA9AC0FC3688C4F9774B905A14E3A3F171BAC586C55E83FF97A1AEFFB3AF00ADB22C6BB)
_G1_GEN_Y = mpz(0x08B3F481E3AAA0F1A09E30ED741D8AE4FCF5E095D5D00AF600DB18CB2C04B3EDD03CC744A2888AE40CAA232946C5E7E1)
_G2_GEN_X = (
    mpz(0x024AA2B2F08F0A91260805272DC51051C6E47AD4FA403B02B4510B647AE3D1770BAC0326A805BBEFD48056C8C121BDB8),
    mpz(0x13E02B6052719F607DACD3A088274F65596BD0D09920B61AB5DA61BBDC7F5049334CF11213945D57E5AC7D055D042B7E),
)
_G2_GEN_Y = (
    mpz(0x0CE5D527727D6E118CC9CDC6DA2E351AADFD9BAA8CBDD3A76D429A695160D12C923AC9CC3BACA289E193548608B82801),
    mpz(0x0606C4A02EA734CC32ACD2B02BC28B99CB3E287E85A763AF267492AB572E99AB3F370D275CEC1DA1AAA9075FF05F79BE),
)

_INF = None  # Jacobian identity sentinel

_HALF_P = (P - 1) // 2


# ---------------------------------------------------------------------------
# G1 Jacobian core (inline mpz arithmetic; this is the hottest point code)

def _g1_dbl(p):
    if p is _INF:
        return _INF
    X, Y, Z = p
    A = X * X % P
    B = Y * Y % P
    C = B * B % P
    D = ((X + B) * (X + B) - A - C) * 2 % P
    E = 3 * A % P
    F = E * E % P
    X3 = (F - 2 * D) % P
    Y3 = (E * (D - X3) - 8 * C) % P
    Z3 = 2 * Y * Z % P
    return (X3, Y3, Z3)


def _g1_add(p, q):
    if p is _INF:
        return q
    if q is _INF:
        return p
    X1, Y1, Z1 = p
    X2, Y2, Z2 = q
    Z1Z1 = Z1 * Z1 % P
    Z2Z2 = Z2 * Z2 % P
    U1 = X1 * Z2Z2 % P
    U2 = X2 * Z1Z1 % P
    S1 = Y1 * Z2 * Z2Z2 % P
    S2 = Y2 * Z1 * Z1Z1 % P
    if U1 == U2:
        if S1 != S2:
            return _INF
        return _g1_dbl(p)
    H = (U2 - U1) % P
    I = 4 * H * H % P
    J = H * I % P
    r = 2 * (S2 - S1) % P
    V = U1 * I % P
    X3 = (r * r - J - 2 * V) % P
    Y3 = (r * (V - X3) - 2 * S1 * J) % P
    Z3 = ((Z1 + Z2) * (Z1 + Z2) - Z1Z1 - Z2Z2) * H % P
    return (X3, Y3, Z3)


def _g1_neg(p):
    if p is _INF:
        return _INF
    return (p[0], -p[1] % P, p[2])


def _g1_eq(p, q):
    if p is _INF or q is _INF:
        return p is _INF and q is _INF
    X1, Y1, Z1 = p
    X2, Y2, Z2 = q
    Z1Z1 = Z1 * Z1 % P
    Z2Z2 = Z2 * Z2 % P
    if X1 * Z2Z2 % P != X2 * Z1Z1 % P:
        return False
    return Y1 * Z2 * Z2Z2 % P == Y2 * Z1 * Z1Z1 % P


def _g1_affine(p):
    if p is _INF:
        return None
    X, Y, Z = p
    zi = invert(Z, P)
    zi2 = zi * zi % P
    return (X * zi2 % P, Y * zi2 * zi % P)


def _g1_on_curve(x, y):
    return (y * y - (x * x * x + B1)) % P == 0


# ---------------------------------------------------------------------------
# G2 Jacobian core

def _g2_dbl(p):
    if p is _INF:
        return _INF
    X, Y, Z = p
    A = fq2_sqr(X)
    B = fq2_sqr(Y)
    C = fq2_sqr(B)
    D = fq2_sub(fq2_sqr(fq2_add(X, B)), fq2_add(A, C))
    D = fq2_add(D, D)
    E = fq2_mul_scalar(A, 3)
    F = fq2_sqr(E)
    X3 = fq2_sub(F, fq2_add(D, D))
    Y3 = fq2_sub(fq2_mul(E, fq2_sub(D, X3)), fq2_mul_scalar(C, 8))
    Y3Z = fq2_mul(Y, Z)
    Z3 = fq2_add(Y3Z, Y3Z)
    return (X3, Y3, Z3)


def _g2_add(p, q):
    if p is _INF:
        return q
    if q is _INF:
        return p
    X1, Y1, Z1 = p
    X2, Y2, Z2 = q
    Z1Z1 = fq2_sqr(Z1)
    Z2Z2 = fq2_sqr(Z2)
    U1 = fq2_mul(X1, Z2Z2)
    U2 = fq2_mul(X2, Z1Z1)
    S1 = fq2_mul(fq2_mul(Y1, Z2), Z2Z2)
    S2 = fq2_mul(fq2_mul(Y2, Z1), Z1Z1)
    if U1 == U2:
        if S1 != S2:
            return _INF
        return _g2_dbl(p)
    H = fq2_sub(U2, U1)
    I = fq2_mul_scalar(fq2_sqr(H), 4)
    J = fq2_mul(H, I)
    r = fq2_mul_scalar(fq2_sub(S2, S1), 2)
    V = fq2_mul(U1, I)
    X3 = fq2_sub(fq2_sub(fq2_sqr(r), J), fq2_add(V, V))
    S1J = fq2_mul(S1, J)
    Y3 = fq2_sub(fq2_mul(r, fq2_sub(V, X3)), fq2_add(S1J, S1J))
    Z3 = fq2_mul(fq2_sub(fq2_sqr(fq2_add(Z1, Z2)), fq2_add(Z1Z1, Z2Z2)), H)
    return (X3, Y3, Z3)


def _g2_neg(p):
    if p is _INF:
        return _INF
    return (p[0], fq2_neg(p[1]), p[2])


def _g2_eq(p, q):
    if p is _INF or q is _INF:
        return p is _INF and q is _INF
    X1, Y1, Z1 = p
    X2, Y2, Z2 = q
    Z1Z1 = fq2_sqr(Z1)
    Z2Z2 = fq2_sqr(Z2)
    if fq2_mul(X1, Z2Z2) != fq2_mul(X2, Z1Z1):
        return False
    return fq2_mul(fq2_mul(Y1, Z2), Z2Z2) == fq2_mul(fq2_mul(Y2, Z1), Z1Z1)


def _g2_affine(p):
    if p is _INF:
        return None
    X, Y, Z = p
    zi = fq2_inv(Z)
    zi2 = fq2_sqr(zi)
    return (fq2_mul(X, zi2), fq2_mul(fq2_mul(Y, zi2), zi))


def _g2_on_curve(x, y):
    rhs = fq2_add(fq2_mul(fq2_sqr(x), x), B2)
    return fq2_sqr(y) == rhs


# ---------------------------------------------------------------------------
# Scalar multiplication

def _wnaf(k, w):
    digits = []
    mask = (1 << w) - 1
    half = 1 << (w - 1)
    full = 1 << w
    while k:
        if k & 1:
            d = k & mask
            if d >= half:
                d -= full
            k -= d
        else:
            d = 0
        digits.append(d)
        k >>= 1
    return digits


def _odd_multiples(p, count, dbl, add):
    # [p, 3p, 5p, ...]
    table = [p]
    p2 = dbl(p)
    for _ in range(count - 1):
        table.append(add(table[-1], p2))
    return table


def _mul_wnaf(p, k, dbl, add, neg, w=5):
    if k == 0 or p is _INF:
        return _INF
    if k < 0:
        p = neg(p)
        k = -k
    digits = _wnaf(k, w)
    table = _odd_multiples(p, 1 << (w - 2), dbl, add)
    acc = _INF
    for d in reversed(digits):
        acc = dbl(acc)
        if d > 0:
            acc = add(acc, table[d >> 1])
        elif d < 0:
            acc = add(acc, neg(table[(-d) >> 1]))
    return acc


def _g1_mul(p, k):
    return _mul_wnaf(p, k % R if k >= R or k < 0 else k, _g1_dbl, _g1_add, _g1_neg)


def _g2_mul(p, k):
    return _mul_wnaf(p, k % R if k >= R or k < 0 else k, _g2_dbl, _g2_add, _g2_neg)


class _MsmBasis:
    """Straus multi-scalar multiplication with cached per-base wNAF tables."""

    _W = 5

    def __init__(self, points, dbl, add, neg):
        self._dbl = dbl
        self._add = add
        self._neg = neg
        self._tables = [
            None if p is _INF else _odd_multiples(p, 1 << (self._W - 2), dbl, add)
            for p in points
        ]

    def combine(self, scalars):
        dbl, add, neg = self._dbl, self._add, self._neg
        cols = []
        maxlen = 0
        for table, k in zip(self._tables, scalars):
            k = k % R
            if table is None or k == 0:
                cols.append(None)
                continue
            digits = _wnaf(k, self._W)
            cols.append((table, digits))
            maxlen = max(maxlen, len(digits))
        acc = _INF
        for i in range(maxlen - 1, -1, -1):
            acc = dbl(acc)
            for col in cols:
                if col is None:
                    continue
                table, digits = col
                if i >= len(digits):
                    continue
                d = digits[i]
                if d > 0:
                    acc = add(acc, table[d >> 1])
                elif d < 0:
                    acc = add(acc, neg(table[(-d) >> 1]))
        return acc


class _FixedBaseTable:
    """4-bit comb table for repeated multiplication of one fixed base."""

    def __init__(self, p, dbl, add, neg):
        self._add = add
        self._neg = neg
        self._windows = []
        base = p
        for _ in range(64):
            row = [base]
            for _ in range(14):
                row.append(add(row[-1], base))
            self._windows.append(row)
            base = dbl(dbl(dbl(dbl(base))))

    def mul(self, k):
        k = k % R
        acc = _INF
        add = self._add
        j = 0
        while k:
            d = k & 15
            if d:
                acc = add(acc, self._windows[j][d - 1])
            k >>= 4
            j += 1
        return acc


# ---------------------------------------------------------------------------
# Serialization helpers

def _g1_to_bytes(p):
    aff = _g1_affine(p)
    if aff is None:
        return bytes([0xC0]) + b"\x00" * 47
    x, y = aff
    flags = 0x80
    if y > _HALF_P:
        flags |= 0x20
    out = bytearray(int(x).to_bytes(48, "big"))
    out[0] |= flags
    return bytes(out)


def _g1_from_bytes(data):
    if len(data) != 48:
        raise DecodeError(f"G1 point must be 48 bytes, got {len(data)}")
    flags = data[0] & 0xE0
    if not flags & 0x80:
        raise DecodeError("uncompressed G1 encoding not supported")
    body = bytes([data[0] & 0x1F]) + data[1:]
    if flags & 0x40:
        if flags & 0x20 or any(body):
            raise DecodeError("non-canonical G1 identity encoding")
        return _INF
    x = mpz(int.from_bytes(body, "big"))
    if x >= P:
        raise DecodeError("G1 x coordinate out of range")
    y = fp_sqrt(x * x % P * x % P + B1)
    if y is None:
        raise DecodeError("G1 x coordinate not on curve")
    if (y > _HALF_P) != bool(flags & 0x20):
        y = (-y) % P
    p = (x, y, mpz(1))
    # _g1_mul reduces its scalar mod R, so the order check must not use it
    if _mul_wnaf(p, R, _g1_dbl, _g1_add, _g1_neg) is not _INF:
        raise DecodeError("G1 point not in the prime-order subgroup")
    return p


def _fq2_is_larger(y):
    c0, c1 = y
    if c1 != 0:
        return c1 > _HALF_P
    return c0 > _HALF_P


def _g2_to_bytes(p):
    aff = _g2_affine(p)
    if aff is None:
        return bytes([0xC0]) + b"\x00" * 95
    (x0, x1), y = aff
    flags = 0x80
    if _fq2_is_larger(y):
        flags |= 0x20
    out = bytearray(int(x1).to_bytes(48, "big") + int(x0).to_bytes(48, "big"))
    out[0] |= flags
    return bytes(out)


def _g2_from_bytes(data):
    if len(data) != 96:
        raise DecodeError(f"G2 point must be 96 bytes, got {len(data)}")
    flags = data[0] & 0xE0
    if not flags & 0x80:
        raise DecodeError("uncompressed G2 encoding not supported")
    body = bytes([data[0] & 0x1F]) + data[1:]
    if flags & 0x40:
        if flags & 0x20 or any(body):
            raise DecodeError("non-canonical G2 identity encoding")
        return _INF
    x1 = mpz(int.from_bytes(body[:48], "big"))
    x0 = mpz(int.from_bytes(body[48:], "big"))
    if x0 >= P or x1 >= P:
        raise DecodeError("G2 x coordinate out of range")
    x = (x0, x1)
    y = fq2_sqrt(fq2_add(fq2_mul(fq2_sqr(x), x), B2))
    if y is None:
        raise DecodeError("G2 x coordinate not on curve")
    if _fq2_is_larger(y) != bool(flags & 0x20):
        y = fq2_neg(y)
    p = (x, y, FQ2_ONE)
    if _mul_wnaf(p, R, _g2_dbl, _g2_add, _g2_neg) is not _INF:
        raise DecodeError("G2 point not in the prime-order subgroup")
    return p


# ---------------------------------------------------------------------------
# Public wrappers

def _as_int(k):
    if isinstance(k, int):
        return k
    try:
        return int(k)
    except (TypeError, ValueError):
        return NotImplemented


class G1Point:
    """Immutable point on the G1 subgroup."""

    __slots__ = ("_jac",)

    def __init__(self, jac):
        object.__setattr__(self, "_jac", jac)

    def __setattr__(self, *_):
        raise AttributeError("G1Point is immutable")

    @classmethod
    def generator(cls):
        return _G1_GENERATOR

    @classmethod
    def identity(cls):
        return _G1_IDENTITY

    def is_identity(self):
        return self._jac is _INF

    def __add__(self, other):
        if not isinstance(other, G1Point):
            return NotImplemented
        return G1Point(_g1_add(self._jac, other._jac))

    def __sub__(self, other):
        if not isinstance(other, G1Point):
            return NotImplemented
        return G1Point(_g1_add(self._jac, _g1_neg(other._jac)))

    def __neg__(self):
        return G1Point(_g1_neg(self._jac))

    def __mul__(self, k):
        k = _as_int(k)
        if k is NotImplemented:
            return NotImplemented
        if self is _G1_GENERATOR:
            return G1Point(_g1_comb().mul(k))
        return G1Point(_g1_mul(self._jac, k))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, G1Point) and _g1_eq(self._jac, other._jac)

    def __hash__(self):
        return hash(self.to_bytes())

    def __repr__(self):
        return f"G1Point({self.to_bytes().hex()})"

    def affine(self):
        aff = _g1_affine(self._jac)
        if aff is None:
            return None
        return (int(aff[0]), int(aff[1]))

    def to_bytes(self):
        return _g1_to_bytes(self._jac)

    @classmethod
    def from_bytes(cls, data):
        return cls(_g1_from_bytes(bytes(data)))


class G2Point:
    """Immutable point on the G2 subgroup."""

    __slots__ = ("_jac",)

    def __init__(self, jac):
        object.__setattr__(self, "_jac", jac)

    def __setattr__(self, *_):
        raise AttributeError("G2Point is immutable")

    @classmethod
    def generator(cls):
        return _G2_GENERATOR

    @classmethod
    def identity(cls):
        return _G2_IDENTITY

    def is_identity(self):
        return self._jac is _INF

    def __add__(self, other):
        if not isinstance(other, G2Point):
            return NotImplemented
        return G2Point(_g2_add(self._jac, other._jac))

    def __sub__(self, other):
        if not isinstance(other, G2Point):
            return NotImplemented
        return G2Point(_g2_add(self._jac, _g2_neg(other._jac)))

    def __neg__(self):
        return G2Point(_g2_neg(self._jac))

    def __mul__(self, k):
        k = _as_int(k)
        if k is NotImplemented:
            return NotImplemented
        if self is _G2_GENERATOR:
            return G2Point(_g2_comb().mul(k))
        return G2Point(_g2_mul(self._jac, k))

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, G2Point) and _g2_eq(self._jac, other._jac)

    def __hash__(self):
        return hash(self.to_bytes())

    def __repr__(self):
        return f"G2Point({self.to_bytes().hex()})"

    def affine(self):
        aff = _g2_affine(self._jac)
        if aff is None:
            return None
        (x0, x1), (y0, y1) = aff
        return ((int(x0), int(x1)), (int(y0), int(y1)))

    def to_bytes(self):
        return _g2_to_bytes(self._jac)

    @classmethod
    def from_bytes(cls, data):
        return cls(_g2_from_bytes(bytes(data)))


_G1_GENERATOR = G1Point((_G1_GEN_X, _G1_GEN_Y, mpz(1)))
_G1_IDENTITY = G1Point(_INF)
_G2_GENERATOR = G2Point((_G2_GEN_X, _G2_GEN_Y, FQ2_ONE))
_G2_IDENTITY = G2Point(_INF)

_G1_COMB = None
_G2_COMB = None


def _g1_comb():
    global _G1_COMB
    if _G1_COMB is None:
        _G1_COMB = _FixedBaseTable(_G1_GENERATOR._jac, _g1_dbl, _g1_add, _g1_neg)
    return _G1_COMB


def _g2_comb():
    global _G2_COMB
    if _G2_COMB is None:
        _G2_COMB = _FixedBaseTable(_G2_GENERATOR._jac, _g2_dbl, _g2_add, _g2_neg)
    return _G2_COMB


class G1Basis:
    """Reusable multi-scalar-multiplication context over fixed G1 bases."""

    def __init__(self, points):
        self._basis = _MsmBasis([p._jac for p in points], _g1_dbl, _g1_add, _g1_neg)

    def combine(self, scalars):
        return G1Point(self._basis.combine(scalars))


class G2Basis:
    """Reusable multi-scalar-multiplication context over fixed G2 bases."""

    def __init__(self, points):
        self._basis = _MsmBasis([p._jac for p in points], _g2_dbl, _g2_add, _g2_neg)

    def combine(self, scalars):
        return G2Point(self._basis.combine(scalars))


def g1_msm(points, scalars):
    """One-shot multi-scalar multiplication in G1."""
    return G1Basis(points).combine(scalars)


def g2_msm(points, scalars):
    """One-shot multi-scalar multiplication in G2."""
    return G2Basis(points).combine(scalars)
