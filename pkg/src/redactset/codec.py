"""Canonical binary serialization for keys and signatures.

Every artifact starts with a five-byte envelope: magic "RS", format
version, curve byte, artifact kind.  All integers are big-endian; point
encodings are the curve module's compressed forms.  Decoding validates
every point (on-curve, subgroup, canonical bytes) before anything is
returned, and byte lengths are fully determined by kind and curve.
"""

import struct
from dataclasses import dataclass
from typing import List, Tuple

from .curve import CURVE_CODE, G1Point, G2Point, Scalar, default_group
from .errors import DecodeError, ParameterError
from .polynomials import RootSet
from .redactable import (
    RsPublicKey,
    RsSecretKey,
    RsSignature,
    TAG_ORIGINAL,
    TAG_REDACTED,
    rs_keygen,
    rs_redact,
    rs_setup,
    rs_sign,
)
from .set_commitment import Commitment, CommitmentKey, Opening, SubsetWitness
from .sps import SpsPublicKey, SpsSecretKey, SpsSignature

MAGIC = b"RS"
VERSION = 1

KIND_SIG_ORIGINAL = TAG_ORIGINAL  # 0x01
KIND_SIG_REDACTED = TAG_REDACTED  # 0x02
KIND_COMMITMENT_KEY = 0x10
KIND_PUBLIC_KEY = 0x11
KIND_SECRET_KEY = 0x12

_KIND_NAMES = {
    KIND_SIG_ORIGINAL: "signature (original)",
    KIND_SIG_REDACTED: "signature (redacted)",
    KIND_COMMITMENT_KEY: "commitment key",
    KIND_PUBLIC_KEY: "public key",
    KIND_SECRET_KEY: "secret key",
}

FILE_EXTENSIONS = {
    KIND_PUBLIC_KEY: ".rspk",
    KIND_SECRET_KEY: ".rssk",
    KIND_COMMITMENT_KEY: ".rsck",
    KIND_SIG_ORIGINAL: ".rssig",
    KIND_SIG_REDACTED: ".rssig",
}

_G1 = 48
_G2 = 96
_ZQ = 32
_ENVELOPE = 5


def _envelope(kind):
    return MAGIC + bytes([VERSION, CURVE_CODE, kind])


def _open_envelope(data, allowed_kinds):
    if len(data) < _ENVELOPE:
        raise DecodeError("truncated envelope")
    if data[:2] != MAGIC:
        raise DecodeError("bad magic")
    if data[2] != VERSION:
        raise DecodeError(f"unsupported format version {data[2]}")
    if data[3] != CURVE_CODE:
        raise DecodeError(f"unsupported curve code {data[3]:#x}")
    kind = data[4]
    if kind not in allowed_kinds:
        raise DecodeError(f"unexpected artifact kind {kind:#x}")
    return kind, data[_ENVELOPE:]


class _Reader:
    def __init__(self, data):
        self.data = data
        self.pos = 0

    def take(self, n):
        if self.pos + n > len(self.data):
            raise DecodeError("truncated payload")
        out = self.data[self.pos:self.pos + n]
        self.pos += n
        return out

    def done(self):
        if self.pos != len(self.data):
            raise DecodeError(f"{len(self.data) - self.pos} trailing bytes")

    def g1(self):
        return G1Point.from_bytes(self.take(_G1))

    def g2(self):
        return G2Point.from_bytes(self.take(_G2))

    def scalar(self):
        return Scalar.from_bytes(self.take(_ZQ))

    def u32(self):
        return struct.unpack(">I", self.take(4))[0]


# ---------------------------------------------------------------------------
# Commitment keys

def _ck_body(ck):
    out = [struct.pack(">I", ck.max_set_size)]
    out += [p.to_bytes() for p in ck.powers_g1]
    out += [p.to_bytes() for p in ck.powers_g2]
    return b"".join(out)


def _read_ck(r):
    ell = r.u32()
    if ell < 1:
        raise DecodeError("commitment key bound must be >= 1")
    powers_g1 = [r.g1() for _ in range(ell)]
    powers_g2 = [r.g2() for _ in range(ell)]
    return CommitmentKey(ell, powers_g1, powers_g2)


def encode_commitment_key(ck):
    return _envelope(KIND_COMMITMENT_KEY) + _ck_body(ck)


def decode_commitment_key(data):
    _, payload = _open_envelope(data, {KIND_COMMITMENT_KEY})
    r = _Reader(payload)
    ck = _read_ck(r)
    r.done()
    return ck


# ---------------------------------------------------------------------------
# Key pairs

def _sps_pk_body(pk):
    points = pk.d0 + pk.d1 + pk.d + pk.a_vec
    return b"".join(p.to_bytes() for p in points)


def _read_sps_pk(r):
    d0 = (r.g2(), r.g2())
    d1 = (r.g2(), r.g2())
    d = (r.g2(), r.g2())
    a_vec = (r.g2(), r.g2())
    if a_vec[0] != G2Point.generator():
        raise DecodeError("malformed verification key: A[0] must be the generator")
    return SpsPublicKey(d0=d0, d1=d1, d=d, a_vec=a_vec)


def encode_public_key(pk):
    return _envelope(KIND_PUBLIC_KEY) + _ck_body(pk.ck) + _sps_pk_body(pk.sps_pk)


def decode_public_key(data):
    _, payload = _open_envelope(data, {KIND_PUBLIC_KEY})
    r = _Reader(payload)
    ck = _read_ck(r)
    sps_pk = _read_sps_pk(r)
    r.done()
    return RsPublicKey(sps_pk=sps_pk, ck=ck)


def encode_secret_key(sk, *, allow_secret_export=False):
    if not allow_secret_export:
        raise ParameterError(
            "refusing to serialize a secret key without allow_secret_export=True"
        )
    body = [_ck_body(sk.ck)]
    for row in sk.sps_sk.k:
        for entry in row:
            body.append(entry.to_bytes())
    for p in sk.sps_sk.p0 + sk.sps_sk.p1 + sk.sps_sk.b_vec:
        body.append(p.to_bytes())
    body.append(_sps_pk_body(sk.sps_sk.public))
    return _envelope(KIND_SECRET_KEY) + b"".join(body)


def decode_secret_key(data):
    _, payload = _open_envelope(data, {KIND_SECRET_KEY})
    r = _Reader(payload)
    ck = _read_ck(r)
    k = ((r.scalar(), r.scalar()), (r.scalar(), r.scalar()))
    p0 = (r.g1(), r.g1())
    p1 = (r.g1(), r.g1())
    b_vec = (r.g1(), r.g1())
    if b_vec[0] != G1Point.generator():
        raise DecodeError("malformed signing key: B[0] must be the generator")
    public = _read_sps_pk(r)
    r.done()
    sps_sk = SpsSecretKey(k=k, p0=p0, p1=p1, b_vec=b_vec, public=public)
    return RsSecretKey(sps_sk=sps_sk, ck=ck)


# ---------------------------------------------------------------------------
# Signatures

def encode_signature(sig):
    body = [sig.commitment.point.to_bytes()]
    for p in sig.sigma_c.theta1 + sig.sigma_c.theta2 + sig.sigma_c.theta3:
        body.append(p.to_bytes())
    body.append(sig.sigma_c.theta4.to_bytes())
    if isinstance(sig.proof, Opening):
        kind = KIND_SIG_ORIGINAL
        body.append(bytes([sig.proof.branch]))
        body.append(sig.proof.rho.to_bytes())
    else:
        kind = KIND_SIG_REDACTED
        if sig.proof.is_bottom:
            body.append(b"\x00")
        else:
            body.append(b"\x01")
            body.append(sig.proof.point.to_bytes())
    return _envelope(kind) + b"".join(body)


def decode_signature(data):
    kind, payload = _open_envelope(data, {KIND_SIG_ORIGINAL, KIND_SIG_REDACTED})
    r = _Reader(payload)
    c = r.g1()
    if c.is_identity():
        raise DecodeError("commitment must be a non-identity G1 point")
    theta1 = (r.g1(), r.g1())
    theta2 = (r.g1(), r.g1())
    theta3 = (r.g1(), r.g1())
    theta4 = r.g2()
    sigma_c = SpsSignature(theta1=theta1, theta2=theta2, theta3=theta3, theta4=theta4)
    if kind == KIND_SIG_ORIGINAL:
        branch = r.take(1)[0]
        if branch not in (0, 1):
            raise DecodeError(f"invalid opening branch byte {branch:#x}")
        proof = Opening(branch=branch, rho=r.scalar())
    else:
        presence = r.take(1)[0]
        if presence == 0:
            proof = SubsetWitness.bottom()
        elif presence == 1:
            w = r.g1()
            if w.is_identity():
                raise DecodeError("subset witness must be a non-identity G1 point")
            proof = SubsetWitness.present(w)
        else:
            raise DecodeError(f"invalid witness presence byte {presence:#x}")
    r.done()
    return RsSignature(commitment=Commitment(c), sigma_c=sigma_c, proof=proof)


# ---------------------------------------------------------------------------
# Size accounting

def expected_signature_sizes(group=None):
    """Byte lengths forced by the layout, derived from the curve's point sizes."""
    sizes = (group or default_group()).point_sizes
    original = _ENVELOPE + 7 * sizes.g1 + sizes.g2 + 1 + sizes.scalar
    redacted = _ENVELOPE + 8 * sizes.g1 + sizes.g2 + 1
    return original, redacted


@dataclass(frozen=True)
class SizeReport:
    max_set_size: int
    rows: Tuple[Tuple[int, int, int], ...]  # (set size, original bytes, redacted bytes)
    expected_original: int
    expected_redacted: int

    @property
    def constant(self):
        return all(
            (o, r) == (self.expected_original, self.expected_redacted)
            for _, o, r in self.rows
        )


def measure_sizes(max_set_size, set_sizes, rng=None) -> SizeReport:
    """Sign and redact at each sampled set size and record serialized lengths."""
    pp = rs_setup()
    pk, sk = rs_keygen(pp, max_set_size, rng)
    rows: List[Tuple[int, int, int]] = []
    for n in set_sizes:
        if not 1 <= n <= max_set_size:
            raise ParameterError(f"sample size {n} outside [1, {max_set_size}]")
        message = RootSet(Scalar.random(rng) for _ in range(n))
        while len(message) != n:  # astronomically unlikely collision resample
            message = RootSet(Scalar.random(rng) for _ in range(n))
        sig = rs_sign(pp, sk, message, rng)
        keep = max(1, n // 2)
        kept = RootSet(list(message)[:keep])
        redacted = rs_redact(pp, pk, message, sig, kept)
        rows.append((n, len(encode_signature(sig)), len(encode_signature(redacted))))
    expected_original, expected_redacted = expected_signature_sizes()
    return SizeReport(
        max_set_size=max_set_size,
        rows=tuple(rows),
        expected_original=expected_original,
        expected_redacted=expected_redacted,
    )


def describe(data):
    """Human-readable summary of a serialized artifact (for the CLI)."""
    kind, payload = _open_envelope(
        data,
        {KIND_SIG_ORIGINAL, KIND_SIG_REDACTED, KIND_COMMITMENT_KEY,
         KIND_PUBLIC_KEY, KIND_SECRET_KEY},
    )
    info = {
        "kind": _KIND_NAMES[kind],
        "version": VERSION,
        "curve": default_group().curve_id,
        "bytes": len(data),
    }
    if kind in (KIND_COMMITMENT_KEY, KIND_PUBLIC_KEY, KIND_SECRET_KEY):
        info["max_set_size"] = struct.unpack(">I", payload[:4])[0]
    return info
