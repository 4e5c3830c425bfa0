"""Redactable signatures over sets: sign once, disclose any subset.

The signer commits to a set of scalars, signs the commitment, and hands
out the commitment opening.  Anyone can then derive, without the signing
key, a constant-size signature valid for any non-empty subset of the
original set.  Derived signatures reveal nothing about removed elements
beyond the public set-size bound.

Typical flow::

    pp = rs_setup()
    pk, sk = rs_keygen(pp, max_set_size=16)
    doc = blocks_from_text("alpha\\nbravo\\ncharlie\\n")
    sig = rs_sign(pp, sk, encode_blocks(doc))
    kept, full_set, kept_set = apply_mask(doc, RedactionMask({0, 2}))
    short = rs_redact(pp, pk, full_set, sig, kept_set)
    assert rs_verify(pp, pk, kept_set, short)
"""

from .codec import (
    decode_commitment_key,
    decode_public_key,
    decode_secret_key,
    decode_signature,
    encode_commitment_key,
    encode_public_key,
    encode_secret_key,
    encode_signature,
    expected_signature_sizes,
    measure_sizes,
)
from .curve import G1Point, G2Point, Scalar, default_group, pairing
from .encoding import (
    DocumentBlocks,
    Mode,
    RedactionMask,
    apply_mask,
    blocks_from_json,
    blocks_from_text,
    encode_blocks,
    hash_to_scalar,
)
from .errors import (
    CapacityError,
    DecodeError,
    DomainError,
    EncodingError,
    ParameterError,
    RedactSetError,
)
from .polynomials import RootSet
from .redactable import (
    RsPublicKey,
    RsPublicParams,
    RsSecretKey,
    RsSignature,
    TAG_ORIGINAL,
    TAG_REDACTED,
    rs_keygen,
    rs_redact,
    rs_setup,
    rs_sign,
    rs_verify,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DecodeError",
    "DocumentBlocks",
    "DomainError",
    "EncodingError",
    "G1Point",
    "G2Point",
    "Mode",
    "ParameterError",
    "RedactSetError",
    "RedactionMask",
    "RootSet",
    "RsPublicKey",
    "RsPublicParams",
    "RsSecretKey",
    "RsSignature",
    "Scalar",
    "TAG_ORIGINAL",
    "TAG_REDACTED",
    "apply_mask",
    "blocks_from_json",
    "blocks_from_text",
    "decode_commitment_key",
    "decode_public_key",
    "decode_secret_key",
    "decode_signature",
    "default_group",
    "encode_blocks",
    "encode_commitment_key",
    "encode_public_key",
    "encode_secret_key",
    "encode_signature",
    "expected_signature_sizes",
    "hash_to_scalar",
    "measure_sizes",
    "pairing",
    "rs_keygen",
    "rs_redact",
    "rs_setup",
    "rs_sign",
    "rs_verify",
]
