"""Tower-field arithmetic for BLS12-381.

Layout: Fp2 = Fp[u]/(u^2+1), Fp6 = Fp2[v]/(v^3 - xi) with xi = 1+u,
Fp12 = Fp6[w]/(w^2 - v).  Elements are nested tuples of gmpy2 mpz values,
kept canonical in [0, P).  Everything here is free functions on tuples;
the hot paths (pairing, point arithmetic) call these directly to keep
Python overhead down.
"""

from gmpy2 import invert, mpz, powmod

# Base field and scalar field moduli.
P = mpz(0x1A0111EA397FE69A4B1BA7B6434BACD764774B84F38512BF6730D2A0F6B0F6241EABFFFEB153FFFFB9FEFFFFFFFFAAAB)
R = mpz(0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001)

# BLS parameter x; the curve family exponent (negative for this curve).
BLS_X = -0xD201000000010000

FQ2_ZERO = (mpz(0), mpz(0))
FQ2_ONE = (mpz(1), mpz(0))
FQ6_ZERO = (FQ2_ZERO, FQ2_ZERO, FQ2_ZERO)
FQ6_ONE = (FQ2_ONE, FQ2_ZERO, FQ2_ZERO)
FQ12_ZERO = (FQ6_ZERO, FQ6_ZERO)
FQ12_ONE = (FQ6_ONE, FQ6_ZERO)


# ---------------------------------------------------------------------------
# Fp2

def fq2_add(a, b):
    return ((a[0] + b[0]) % P, (a[1] + b[1]) % P)


def fq2_sub(a, b):
    return ((a[0] - b[0]) % P, (a[1] - b[1]) % P)


def fq2_neg(a):
    return (-a[0] % P, -a[1] % P)


def fq2_conj(a):
    return (a[0], -a[1] % P)


def fq2_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    t0 = a0 * b0
    t1 = a1 * b1
    return ((t0 - t1) % P, ((a0 + a1) * (b0 + b1) - t0 - t1) % P)


def fq2_sqr(a):
    a0, a1 = a
    return (((a0 + a1) * (a0 - a1)) % P, (a0 * a1 * 2) % P)


def fq2_mul_scalar(a, k):
    return (a[0] * k % P, a[1] * k % P)


def fq2_mul_xi(a):
    # multiply by xi = 1 + u
    a0, a1 = a
    return ((a0 - a1) % P, (a0 + a1) % P)


def fq2_inv(a):
    a0, a1 = a
    norm = (a0 * a0 + a1 * a1) % P
    n = invert(norm, P)
    return (a0 * n % P, -a1 * n % P)


def fq2_pow(a, e):
    result = FQ2_ONE
    base = a
    while e:
        if e & 1:
            result = fq2_mul(result, base)
        base = fq2_sqr(base)
        e >>= 1
    return result


def fq2_is_zero(a):
    return a[0] == 0 and a[1] == 0


# ---------------------------------------------------------------------------
# Fp6

def fq6_add(a, b):
    return (fq2_add(a[0], b[0]), fq2_add(a[1], b[1]), fq2_add(a[2], b[2]))


def fq6_sub(a, b):
    return (fq2_sub(a[0], b[0]), fq2_sub(a[1], b[1]), fq2_sub(a[2], b[2]))


def fq6_neg(a):
    return (fq2_neg(a[0]), fq2_neg(a[1]), fq2_neg(a[2]))


def fq6_mul(a, b):
    a0, a1, a2 = a
    b0, b1, b2 = b
    t0 = fq2_mul(a0, b0)
    t1 = fq2_mul(a1, b1)
    t2 = fq2_mul(a2, b2)
    c0 = fq2_add(t0, fq2_mul_xi(fq2_sub(fq2_mul(fq2_add(a1, a2), fq2_add(b1, b2)), fq2_add(t1, t2))))
    c1 = fq2_add(fq2_sub(fq2_mul(fq2_add(a0, a1), fq2_add(b0, b1)), fq2_add(t0, t1)), fq2_mul_xi(t2))
    c2 = fq2_add(fq2_sub(fq2_mul(fq2_add(a0, a2), fq2_add(b0, b2)), fq2_add(t0, t2)), t1)
    return (c0, c1, c2)


def fq6_sqr(a):
    a0, a1, a2 = a
    t0 = fq2_sqr(a0)
    t1 = fq2_mul(a0, a1)
    t1 = fq2_add(t1, t1)
    t2 = fq2_sqr(fq2_sub(fq2_add(a0, a2), a1))
    t3 = fq2_mul(a1, a2)
    t3 = fq2_add(t3, t3)
    t4 = fq2_sqr(a2)
    c0 = fq2_add(fq2_mul_xi(t3), t0)
    c1 = fq2_add(fq2_mul_xi(t4), t1)
    c2 = fq2_sub(fq2_add(fq2_add(t1, t2), t3), fq2_add(t0, t4))
    return (c0, c1, c2)


def fq6_mul_by_v(a):
    # multiply by v: (a0, a1, a2) -> (xi*a2, a0, a1)
    return (fq2_mul_xi(a[2]), a[0], a[1])


def fq6_inv(a):
    a0, a1, a2 = a
    c0 = fq2_sub(fq2_sqr(a0), fq2_mul_xi(fq2_mul(a1, a2)))
    c1 = fq2_sub(fq2_mul_xi(fq2_sqr(a2)), fq2_mul(a0, a1))
    c2 = fq2_sub(fq2_sqr(a1), fq2_mul(a0, a2))
    t = fq2_add(fq2_mul_xi(fq2_add(fq2_mul(a2, c1), fq2_mul(a1, c2))), fq2_mul(a0, c0))
    ti = fq2_inv(t)
    return (fq2_mul(c0, ti), fq2_mul(c1, ti), fq2_mul(c2, ti))


# ---------------------------------------------------------------------------
# Fp12

def fq12_mul(a, b):
    a0, a1 = a
    b0, b1 = b
    t0 = fq6_mul(a0, b0)
    t1 = fq6_mul(a1, b1)
    c0 = fq6_add(t0, fq6_mul_by_v(t1))
    c1 = fq6_sub(fq6_mul(fq6_add(a0, a1), fq6_add(b0, b1)), fq6_add(t0, t1))
    return (c0, c1)


def fq12_sqr(a):
    a0, a1 = a
    t = fq6_mul(a0, a1)
    c0 = fq6_sub(fq6_mul(fq6_add(a0, a1), fq6_add(a0, fq6_mul_by_v(a1))), fq6_add(t, fq6_mul_by_v(t)))
    c1 = fq6_add(t, t)
    return (c0, c1)


def fq12_conj(a):
    return (a[0], fq6_neg(a[1]))


def fq12_inv(a):
    a0, a1 = a
    t = fq6_sub(fq6_sqr(a0), fq6_mul_by_v(fq6_sqr(a1)))
    ti = fq6_inv(t)
    return (fq6_mul(a0, ti), fq6_neg(fq6_mul(a1, ti)))


def fq12_pow(a, e):
    if e < 0:
        a = fq12_inv(a)
        e = -e
    result = FQ12_ONE
    base = a
    while e:
        if e & 1:
            result = fq12_mul(result, base)
        base = fq12_sqr(base)
        e >>= 1
    return result


def fq12_mul_by_014(f, c0, c1, c4):
    """Multiply f by the sparse element c0 + c1*v + c4*(w*v).

    This is the shape of an evaluated pairing line on this curve, so it is
    worth the dedicated routine: ~8 Fp2 muls instead of 18.
    """
    f0, f1 = f
    a0, a1, a2 = f0
    b0, b1, b2 = f1
    # t = f0 * (c0 + c1 v)
    t00 = fq2_mul(a0, c0)
    t11 = fq2_mul(a1, c1)
    t_c0 = fq2_add(t00, fq2_mul_xi(fq2_sub(fq2_mul(fq2_add(a1, a2), c1), t11)))
    t_c1 = fq2_sub(fq2_mul(fq2_add(a0, a1), fq2_add(c0, c1)), fq2_add(t00, t11))
    t_c2 = fq2_add(fq2_sub(fq2_mul(fq2_add(a0, a2), c0), t00), t11)
    t = (t_c0, t_c1, t_c2)
    # s = f1 * (c4 v)  -> components: (xi*(b1*c4) shifted) since (b0,b1,b2)*(0,c4,0)
    s0 = fq2_mul_xi(fq2_mul(b2, c4))
    s1 = fq2_mul(b0, c4)
    s2 = fq2_mul(b1, c4)
    s = (s0, s1, s2)
    # f0' = t + v * s  (because w^2 = v and the c4 term sits on w)
    new_c0 = fq6_add(t, fq6_mul_by_v(s))
    # f1' = f1*(c0 + c1 v) + f0*(c4 v)
    u00 = fq2_mul(b0, c0)
    u11 = fq2_mul(b1, c1)
    u_c0 = fq2_add(u00, fq2_mul_xi(fq2_sub(fq2_mul(fq2_add(b1, b2), c1), u11)))
    u_c1 = fq2_sub(fq2_mul(fq2_add(b0, b1), fq2_add(c0, c1)), fq2_add(u00, u11))
    u_c2 = fq2_add(fq2_sub(fq2_mul(fq2_add(b0, b2), c0), u00), u11)
    v0 = fq2_mul_xi(fq2_mul(a2, c4))
    v1 = fq2_mul(a0, c4)
    v2 = fq2_mul(a1, c4)
    new_c1 = (fq2_add(u_c0, v0), fq2_add(u_c1, v1), fq2_add(u_c2, v2))
    return (new_c0, new_c1)


# ---------------------------------------------------------------------------
# Frobenius

def _compute_frobenius_coeffs():
    xi = (mpz(1), mpz(1))
    gamma1 = [fq2_pow(xi, i * (P - 1) // 6) for i in range(6)]
    gamma2 = [fq2_pow(xi, i * (P * P - 1) // 6) for i in range(6)]
    return gamma1, gamma2


_GAMMA1, _GAMMA2 = _compute_frobenius_coeffs()


def _fq12_to_coeffs(a):
    # basis {1, w, w^2, w^3, w^4, w^5} over Fp2; w^2 = v
    (a0, a1, a2), (b0, b1, b2) = a
    return [a0, b0, a1, b1, a2, b2]


def _fq12_from_coeffs(c):
    return ((c[0], c[2], c[4]), (c[1], c[3], c[5]))


def fq12_frobenius(a):
    c = _fq12_to_coeffs(a)
    out = [fq2_mul(fq2_conj(c[i]), _GAMMA1[i]) for i in range(6)]
    return _fq12_from_coeffs(out)


def fq12_frobenius2(a):
    c = _fq12_to_coeffs(a)
    out = [fq2_mul(c[i], _GAMMA2[i]) for i in range(6)]
    return _fq12_from_coeffs(out)


# ---------------------------------------------------------------------------
# Square roots (used only when decompressing serialized points)

def fp_sqrt(a):
    """Square root in Fp (P = 3 mod 4), or None if a is a non-residue."""
    a = a % P
    x = powmod(a, (P + 1) // 4, P)
    if x * x % P != a:
        return None
    return x


def fq2_sqrt(a):
    """Square root in Fp2, or None. Uses the P = 3 mod 4 shortcut with i = u."""
    if fq2_is_zero(a):
        return FQ2_ZERO
    a1 = fq2_pow(a, (P - 3) // 4)
    x0 = fq2_mul(a1, a)
    alpha = fq2_mul(a1, x0)
    if alpha == (P - 1, mpz(0)):
        x = fq2_mul((mpz(0), mpz(1)), x0)
    else:
        b = fq2_pow(fq2_add(FQ2_ONE, alpha), (P - 1) // 2)
        x = fq2_mul(b, x0)
    if fq2_sqr(x) != (a[0] % P, a[1] % P):
        return None
    return x
