"""Deterministic mapping from documents (ordered byte blocks) to root sets.

LIST mode prefixes each block with its position before hashing, so a
signature over a list cannot be replayed against a re-ordering of the
same blocks.  Positions are the *original* indices and survive
redaction; gaps stay visible to the verifier by design.  SET mode hashes
bare blocks and refuses duplicates rather than silently deduplicating.
"""

import enum
import hashlib
import json
import struct
from dataclasses import dataclass
from typing import Optional, Tuple

from .curve import Scalar
from .errors import EncodingError, ParameterError
from .polynomials import RootSet

_DST_SET = b"redactset/hash-to-scalar/set/v1\x00"
_DST_LIST = b"redactset/hash-to-scalar/list/v1\x00"


class Mode(enum.Enum):
    SET = "set"
    LIST = "list"


@dataclass(frozen=True)
class DocumentBlocks:
    """Ordered byte blocks plus their (original) positions.

    indices is None for a pristine document (positions 0..n-1); after a
    redaction it records which original positions the blocks came from.
    """

    blocks: Tuple[bytes, ...]
    mode: Mode
    indices: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(bytes(b) for b in self.blocks))
        if self.indices is not None:
            if len(self.indices) != len(self.blocks):
                raise ParameterError("indices and blocks must have equal length")
            object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))

    def positions(self):
        if self.indices is not None:
            return self.indices
        return tuple(range(len(self.blocks)))


@dataclass(frozen=True)
class RedactionMask:
    keep_indices: frozenset

    def __post_init__(self):
        object.__setattr__(self, "keep_indices", frozenset(int(i) for i in self.keep_indices))


def hash_to_scalar(payload, dst):
    """256-bit hash of dst || payload reduced into the scalar field."""
    digest = hashlib.sha256(dst + payload).digest()
    return Scalar(int.from_bytes(digest, "big"))


def _block_scalar(mode, position, block):
    if mode is Mode.SET:
        return hash_to_scalar(block, _DST_SET)
    return hash_to_scalar(struct.pack(">Q", position) + block, _DST_LIST)


def encode_blocks(doc) -> RootSet:
    """Map a document to its root set; deterministic across runs."""
    if not doc.blocks:
        raise EncodingError("cannot encode an empty document")
    scalars = []
    seen = set()
    for position, block in zip(doc.positions(), doc.blocks):
        s = _block_scalar(doc.mode, position, block)
        if s in seen:
            raise EncodingError(
                f"duplicate block at position {position}; SET mode requires distinct blocks"
            )
        seen.add(s)
        scalars.append(s)
    return RootSet(scalars)


def apply_mask(doc, mask):
    """Split a document by a keep-mask.

    Returns (kept sub-document, full root set, kept root set).  The kept
    sub-document carries original positions so LIST-mode order-IDs stay
    aligned with the signed encoding.
    """
    if not mask.keep_indices:
        raise EncodingError("redaction mask must keep at least one block")
    positions = doc.positions()
    valid = set(range(len(doc.blocks)))
    out_of_range = mask.keep_indices - valid
    if out_of_range:
        raise EncodingError(f"mask references missing block positions {sorted(out_of_range)}")
    kept_blocks = []
    kept_positions = []
    for slot, (position, block) in enumerate(zip(positions, doc.blocks)):
        if slot in mask.keep_indices:
            kept_blocks.append(block)
            kept_positions.append(position)
    kept = DocumentBlocks(blocks=tuple(kept_blocks), mode=doc.mode, indices=tuple(kept_positions))
    return kept, encode_blocks(doc), encode_blocks(kept)


# ---------------------------------------------------------------------------
# Document file formats: newline-delimited text or a JSON array of strings.

def blocks_from_text(text, mode=Mode.LIST):
    """One block per line; a trailing newline does not open an empty block."""
    if text.endswith("\n"):
        text = text[:-1]
    if not text:
        raise EncodingError("empty document")
    return DocumentBlocks(
        blocks=tuple(line.encode("utf-8") for line in text.split("\n")),
        mode=mode,
    )


def blocks_from_json(data, mode=Mode.LIST):
    parsed = json.loads(data)
    if not isinstance(parsed, list) or not all(isinstance(x, str) for x in parsed):
        raise EncodingError("JSON document must be an array of strings")
    if not parsed:
        raise EncodingError("empty document")
    return DocumentBlocks(blocks=tuple(x.encode("utf-8") for x in parsed), mode=mode)
