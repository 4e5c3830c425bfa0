"""Structure-preserving signatures: correctness, exponent oracles, mutations."""

import random

import pytest

from redactset.curve import G1Point, G2Point, Scalar
from redactset.errors import ParameterError
from redactset.sps import (
    SpsExponents,
    SpsSignature,
    sps_keygen,
    sps_keygen_from_exponents,
    sps_setup,
    sps_sign,
    sps_verify,
)


@pytest.fixture(scope="module")
def spp():
    return sps_setup()


@pytest.fixture(scope="module")
def keypair(spp):
    return sps_keygen(spp, random.Random(7), keep_exponents=True)


def _random_message(rng):
    return G1Point.generator() * Scalar.random_nonzero(rng)


def test_sign_verify(spp, keypair, rng):
    pk, sk = keypair
    for _ in range(3):
        m = _random_message(rng)
        sig = sps_sign(spp, sk, m, rng)
        assert sps_verify(spp, pk, m, sig)


def test_wrong_message_rejected(spp, keypair, rng):
    pk, sk = keypair
    m = _random_message(rng)
    sig = sps_sign(spp, sk, m, rng)
    assert not sps_verify(spp, pk, _random_message(rng), sig)
    assert not sps_verify(spp, pk, "not a point", sig)


def test_wrong_key_rejected(spp, keypair, rng):
    _, sk = keypair
    other_pk, _ = sps_keygen(spp, rng)
    m = _random_message(rng)
    sig = sps_sign(spp, sk, m, rng)
    assert not sps_verify(spp, other_pk, m, sig)


def test_signature_matches_exponent_oracle(spp, keypair, rng):
    # Recompute every signature component by direct scalar arithmetic from
    # the retained key-generation exponents, an independent path from the
    # group-operation signing code.
    pk, sk = keypair
    e = sk.exponents
    g1, g2 = G1Point.generator(), G2Point.generator()
    mu = Scalar.random_nonzero(rng)
    m = g1 * mu
    r = Scalar.random(rng)
    tau = Scalar.random(rng)
    sig = sps_sign(spp, sk, m, rng, r=r, tau=tau)

    row = (Scalar(1), mu)  # (1, m) in the exponent
    for j in range(2):
        kj = row[0] * e.k[0][j] + row[1] * e.k[1][j]
        p0j = e.k0[0][j] + e.k0[1][j] * e.b
        p1j = e.k1[0][j] + e.k1[1][j] * e.b
        assert sig.theta1[j] == g1 * (kj + r * (p0j + p1j * tau))
    assert sig.theta2 == (g1 * r, g1 * (r * e.b))
    assert sig.theta3 == (g1 * (r * tau), g1 * (r * e.b * tau))
    assert sig.theta4 == g2 * tau
    assert sps_verify(spp, pk, m, sig)


def test_verification_equation_exponent_identity(spp, keypair, rng):
    # Both sides of the first pairing-product equation, reduced to scalars:
    # theta1 . (1,a) == (1,m).K.(1,a) + r.(1,b).(K0 + tau.K1).(1,a) mod q.
    _, sk = keypair
    e = sk.exponents
    mu = Scalar.random_nonzero(rng)
    r = Scalar.random(rng)
    tau = Scalar.random(rng)
    a_col = (Scalar(1), e.a)
    row = (Scalar(1), mu)

    def quad(mat):  # (1,m) mat (1,a)
        return sum(
            (row[i] * mat[i][j] * a_col[j] for i in range(2) for j in range(2)),
            Scalar(0),
        )

    def b_quad(mat):  # (1,b) mat (1,a)
        b_row = (Scalar(1), e.b)
        return sum(
            (b_row[i] * mat[i][j] * a_col[j] for i in range(2) for j in range(2)),
            Scalar(0),
        )

    lhs = Scalar(0)
    sig = sps_sign(spp, sk, G1Point.generator() * mu, rng, r=r, tau=tau)
    # theta1 exponents recovered through the oracle of the previous test
    for j in range(2):
        kj = row[0] * e.k[0][j] + row[1] * e.k[1][j]
        p0j = e.k0[0][j] + e.k0[1][j] * e.b
        p1j = e.k1[0][j] + e.k1[1][j] * e.b
        lhs = lhs + (kj + r * (p0j + p1j * tau)) * a_col[j]
    rhs = quad(e.k) + r * (b_quad(e.k0) + tau * b_quad(e.k1))
    assert lhs == rhs
    assert sps_verify(spp, keypair[0], G1Point.generator() * mu, sig)


def _mutations(sig):
    g1, g2 = G1Point.generator(), G2Point.generator()
    t1, t2, t3 = sig.theta1, sig.theta2, sig.theta3
    yield SpsSignature((t1[0] + g1, t1[1]), t2, t3, sig.theta4)
    yield SpsSignature((t1[0], t1[1] + g1), t2, t3, sig.theta4)
    yield SpsSignature(t1, (t2[0] + g1, t2[1]), t3, sig.theta4)
    yield SpsSignature(t1, (t2[0], t2[1] + g1), t3, sig.theta4)
    yield SpsSignature(t1, t2, (t3[0] + g1, t3[1]), sig.theta4)
    yield SpsSignature(t1, t2, (t3[0], t3[1] + g1), sig.theta4)
    yield SpsSignature(t1, t2, t3, sig.theta4 + g2)


def test_every_component_mutation_rejected(spp, keypair, rng):
    pk, sk = keypair
    m = _random_message(rng)
    sig = sps_sign(spp, sk, m, rng)
    assert sps_verify(spp, pk, m, sig)
    rejected = [not sps_verify(spp, pk, m, bad) for bad in _mutations(sig)]
    assert rejected == [True] * 7


def test_zero_randomness_edge_case(spp, keypair, rng):
    # r = 0 collapses theta2/theta3 to the identity; still a valid signature.
    pk, sk = keypair
    m = _random_message(rng)
    sig = sps_sign(spp, sk, m, rng, r=Scalar(0))
    assert sig.theta2[0].is_identity()
    assert sps_verify(spp, pk, m, sig)


def test_keygen_deterministic_from_exponents(spp, rng):
    exps = SpsExponents(
        a=Scalar.random(rng),
        b=Scalar.random(rng),
        k=((Scalar(1), Scalar(2)), (Scalar(3), Scalar(4))),
        k0=((Scalar(5), Scalar(6)), (Scalar(7), Scalar(8))),
        k1=((Scalar(9), Scalar(10)), (Scalar(11), Scalar(12))),
    )
    pk1, sk1 = sps_keygen_from_exponents(spp, exps)
    pk2, sk2 = sps_keygen_from_exponents(spp, exps)
    assert pk1 == pk2 and sk1 == sk2
    assert pk1.a_vec[0] == G2Point.generator()
    assert sk1.b_vec[0] == G1Point.generator()


def test_keygen_discards_exponents_by_default(spp, rng):
    _, sk = sps_keygen(spp, rng)
    assert sk.exponents is None


def test_sign_requires_group_message(spp, keypair, rng):
    _, sk = keypair
    with pytest.raises(ParameterError):
        sps_sign(spp, sk, Scalar(5), rng)
