"""Monic vanishing polynomials over scalar root sets.

f_S(X) = prod_{s in S} (X - s), with f for the empty set defined as the
constant 1.  Expansion is the incremental multiply-by-(X - s) loop; set
sizes here are small enough that nothing fancier pays off.
"""

from .curve import Scalar
from .errors import CapacityError

_ZERO = Scalar(0)
_ONE = Scalar(1)


class RootSet:
    """Immutable set of distinct scalars, iterated in ascending order."""

    __slots__ = ("_elements",)

    def __init__(self, elements=()):
        elems = set()
        for e in elements:
            if not isinstance(e, Scalar):
                e = Scalar(e)
            elems.add(e)
        object.__setattr__(self, "_elements", tuple(sorted(elems)))

    def __setattr__(self, *_):
        raise AttributeError("RootSet is immutable")

    def __len__(self):
        return len(self._elements)

    def __iter__(self):
        return iter(self._elements)

    def __contains__(self, item):
        if not isinstance(item, Scalar):
            item = Scalar(item)
        return item in set(self._elements)

    def __eq__(self, other):
        return isinstance(other, RootSet) and self._elements == other._elements

    def __hash__(self):
        return hash(self._elements)

    def __repr__(self):
        return f"RootSet({{{', '.join(hex(e.value) for e in self._elements)}}})"

    def is_empty(self):
        return not self._elements

    def issubset(self, other):
        return set(self._elements) <= set(other._elements)

    def union(self, other):
        return RootSet(self._elements + other._elements)

    def difference(self, other):
        drop = set(other._elements)
        return RootSet(e for e in self._elements if e not in drop)

    def intersection(self, other):
        keep = set(other._elements)
        return RootSet(e for e in self._elements if e in keep)


class PolyCoeffs:
    """Coefficients of a polynomial, low-to-high degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(c if isinstance(c, Scalar) else Scalar(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a polynomial needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *_):
        raise AttributeError("PolyCoeffs is immutable")

    def degree(self):
        return len(self.coeffs) - 1

    def is_monic(self):
        return self.coeffs[-1] == _ONE

    def __eq__(self, other):
        return isinstance(other, PolyCoeffs) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PolyCoeffs({[hex(c.value) for c in self.coeffs]})"


def expand_roots(s):
    """Coefficients of the monic polynomial vanishing exactly on s."""
    coeffs = [_ONE]
    for root in s:
        coeffs.append(_ONE)
        neg = -root
        for i in range(len(coeffs) - 2, 0, -1):
            coeffs[i] = coeffs[i - 1] + coeffs[i] * neg
        coeffs[0] = coeffs[0] * neg
    return PolyCoeffs(coeffs)


def poly_eval(f, x):
    """Horner evaluation of f at x."""
    acc = _ZERO
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def poly_mul(f, g):
    """Coefficient-domain product (used by tests to cross-check expansion)."""
    out = [_ZERO] * (len(f.coeffs) + len(g.coeffs) - 1)
    for i, a in enumerate(f.coeffs):
        for j, b in enumerate(g.coeffs):
            out[i + j] = out[i + j] + a * b
    return PolyCoeffs(out)


def eval_in_group(f, ck, side):
    """Evaluate f at the commitment-key trapdoor, in the exponent.

    Returns sum_i f_i * [a^i] over the requested group, where [a^0] is the
    group generator.  The polynomial degree must fit within the key bound.
    """
    if f.degree() > ck.max_set_size:
        raise CapacityError(
            f"degree {f.degree()} exceeds key capacity {ck.max_set_size}"
        )
    scalars = [c.value for c in f.coeffs]
    if side == "g1":
        basis = ck.g1_basis()
    elif side == "g2":
        basis = ck.g2_basis()
    else:
        raise ValueError(f"unknown group tag {side!r}")
    return basis.combine(scalars)
