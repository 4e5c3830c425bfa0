"""Redactable signatures over sets of scalars.

A signature binds a set commitment C with an ordinary signature on C.
The signer hands out (C, sigma_C, opening); anyone holding the public
key can replace the opening by a subset witness, producing a signature
for any non-empty subset without the signing key.  Both forms verify
against the same (C, sigma_C) pair; an explicit tag distinguishes them
because openings and witnesses are not self-describing.
"""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .errors import ParameterError
from .polynomials import RootSet
from .set_commitment import (
    Commitment,
    CommitmentKey,
    Opening,
    ScPublicParams,
    SubsetWitness,
    sc_commit,
    sc_kgen,
    sc_open,
    sc_osubset,
    sc_setup,
    sc_vsubset,
)
from .sps import (
    SpsPublicKey,
    SpsPublicParams,
    SpsSecretKey,
    SpsSignature,
    sps_keygen,
    sps_setup,
    sps_sign,
    sps_verify,
)

TAG_ORIGINAL = 0x01
TAG_REDACTED = 0x02


@dataclass(frozen=True)
class RsPublicParams:
    sps_pp: SpsPublicParams
    sc_pp: ScPublicParams

    def __post_init__(self):
        if self.sps_pp.group is not self.sc_pp.group:
            if self.sps_pp.group != self.sc_pp.group:
                raise ParameterError("sub-scheme parameters must share one group")


@dataclass(frozen=True)
class RsPublicKey:
    sps_pk: SpsPublicKey
    ck: CommitmentKey


@dataclass(frozen=True)
class RsSecretKey:
    sps_sk: SpsSecretKey
    ck: CommitmentKey


@dataclass(frozen=True)
class RsSignature:
    commitment: Commitment
    sigma_c: SpsSignature
    proof: Union[Opening, SubsetWitness]

    @property
    def tag(self):
        return TAG_ORIGINAL if isinstance(self.proof, Opening) else TAG_REDACTED

    @property
    def is_original(self):
        return self.tag == TAG_ORIGINAL


def rs_setup(security_level=128, max_set_size_hint=None):
    """Shared public parameters for both sub-schemes (one bilinear group).

    The set-size bound is consumed by key generation, not here; the hint
    argument exists only for interface symmetry and is unused.
    """
    del max_set_size_hint
    return RsPublicParams(
        sps_pp=sps_setup(security_level), sc_pp=sc_setup(security_level)
    )


def rs_keygen(pp, max_set_size, rng=None, *, keep_trapdoors=False):
    if max_set_size < 1:
        raise ParameterError("set-size bound must be >= 1")
    ck = sc_kgen(pp.sc_pp, max_set_size, rng, keep_trapdoor=keep_trapdoors)
    sps_pk, sps_sk = sps_keygen(pp.sps_pp, rng, keep_exponents=keep_trapdoors)
    return RsPublicKey(sps_pk=sps_pk, ck=ck), RsSecretKey(sps_sk=sps_sk, ck=ck)


def rs_sign(pp, sk, message_set, rng=None):
    """Sign a set of scalars; the set size must be within the key bound."""
    committed = sc_commit(pp.sc_pp, sk.ck, message_set, rng)
    if committed is None:
        raise ParameterError(
            f"set size {len(message_set)} outside [1, {sk.ck.max_set_size}]"
        )
    c, opening = committed
    sigma_c = sps_sign(pp.sps_pp, sk.sps_sk, c.point, rng)
    return RsSignature(commitment=c, sigma_c=sigma_c, proof=opening)


def rs_redact(pp, pk, message_set, sig, kept_set, rng=None) -> Optional[RsSignature]:
    """Derive a signature for kept_set from an original signature.

    Requires the opening form: witnesses cannot be re-redacted.  Returns
    None when the embedded signature is invalid or kept_set is not a
    non-empty subset of message_set.  No signing key is involved.
    """
    del rng  # accepted for interface uniformity; redaction is deterministic
    if not isinstance(sig.proof, Opening):
        raise ParameterError("only original (opening-form) signatures can be redacted")
    if not sps_verify(pp.sps_pp, pk.sps_pk, sig.commitment.point, sig.sigma_c):
        return None
    witness = sc_osubset(
        pp.sc_pp, pk.ck, sig.commitment, message_set, sig.proof, kept_set
    )
    if witness is None:
        return None
    return RsSignature(commitment=sig.commitment, sigma_c=sig.sigma_c, proof=witness)


def rs_verify(pp, pk, message_set, sig) -> bool:
    if not sps_verify(pp.sps_pp, pk.sps_pk, sig.commitment.point, sig.sigma_c):
        return False
    if isinstance(sig.proof, Opening):
        return sc_open(pp.sc_pp, pk.ck, sig.commitment, message_set, sig.proof)
    return sc_vsubset(pp.sc_pp, pk.ck, sig.commitment, message_set, sig.proof)
