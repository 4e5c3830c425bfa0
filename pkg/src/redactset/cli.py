"""Command-line driver: keygen, sign, redact, verify, inspect, bench-size.

Exit codes: 0 success / signature valid, 1 signature invalid,
2 parameter or format error, 3 I/O error.
"""

import argparse
import json
import os
import random
import sys

from . import codec
from .encoding import (
    DocumentBlocks,
    Mode,
    RedactionMask,
    apply_mask,
    blocks_from_json,
    blocks_from_text,
    encode_blocks,
)
from .errors import DecodeError, EncodingError, ParameterError, RedactSetError
from .redactable import rs_redact, rs_setup, rs_sign, rs_verify

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARAMETER = 2
EXIT_IO = 3

BUNDLE_FORMAT = "redactset-bundle/v1"

_TEST_MODE_ENV = "REDACTSET_TEST_MODE"


def _rng_from_args(args):
    if args.seed is None:
        return None
    if os.environ.get(_TEST_MODE_ENV) != "1":
        raise ParameterError(
            f"--seed is a test-only flag; set {_TEST_MODE_ENV}=1 to enable it"
        )
    return random.Random(args.seed)


def _read_file(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise _IoFailure(f"cannot read {path}: {exc.strerror}") from exc


def _write_file(path, data):
    tmp = f"{path}.tmp.{os.getpid()}"
    try:
        with open(tmp, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise _IoFailure(f"cannot write {path}: {exc.strerror}") from exc


class _IoFailure(RedactSetError):
    pass


def _load_document(path, mode):
    raw = _read_file(path)
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EncodingError(f"{path} is not UTF-8 text") from exc
    if path.endswith(".json"):
        return blocks_from_json(text, mode)
    return blocks_from_text(text, mode)


def _parse_mode(value):
    try:
        return Mode(value)
    except ValueError:
        raise ParameterError(f"unknown mode {value!r}; expected 'set' or 'list'")


def _parse_keep(spec):
    try:
        indices = [int(part) for part in spec.split(",") if part.strip() != ""]
    except ValueError:
        raise ParameterError(f"bad --keep specification {spec!r}")
    if not indices:
        raise ParameterError("--keep must name at least one block index")
    return RedactionMask(keep_indices=frozenset(indices))


def _load_bundle(path):
    try:
        bundle = json.loads(_read_file(path).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DecodeError(f"{path} is not a valid bundle: {exc}") from exc
    if not isinstance(bundle, dict) or bundle.get("format") != BUNDLE_FORMAT:
        raise DecodeError(f"{path} is not a {BUNDLE_FORMAT} bundle")
    doc = DocumentBlocks(
        blocks=tuple(b.encode("utf-8") for b in bundle["blocks"]),
        mode=_parse_mode(bundle["mode"]),
        indices=tuple(bundle["indices"]),
    )
    sig = codec.decode_signature(bytes.fromhex(bundle["signature"]))
    return doc, sig


# ---------------------------------------------------------------------------
# Subcommands

def _cmd_keygen(args):
    rng = _rng_from_args(args)
    if args.ell < 1:
        raise ParameterError("--ell must be >= 1")
    pp = rs_setup()
    pk, sk = codec.rs_keygen(pp, args.ell, rng)
    _write_file(args.out_prefix + ".rspk", codec.encode_public_key(pk))
    _write_file(
        args.out_prefix + ".rssk",
        codec.encode_secret_key(sk, allow_secret_export=True),
    )
    print(f"wrote {args.out_prefix}.rspk and {args.out_prefix}.rssk (ell={args.ell})")
    return EXIT_OK


def _cmd_sign(args):
    rng = _rng_from_args(args)
    mode = _parse_mode(args.mode)
    doc = _load_document(args.doc, mode)
    sk = codec.decode_secret_key(_read_file(args.key))
    pp = rs_setup()
    message = encode_blocks(doc)
    sig = rs_sign(pp, sk, message, rng)
    _write_file(args.out, codec.encode_signature(sig))
    print(f"signed {len(doc.blocks)} blocks -> {args.out}")
    return EXIT_OK


def _cmd_redact(args):
    mode = _parse_mode(args.mode)
    doc = _load_document(args.doc, mode)
    pk = codec.decode_public_key(_read_file(args.pub))
    sig = codec.decode_signature(_read_file(args.sig))
    mask = _parse_keep(args.keep)
    kept_doc, full_set, kept_set = apply_mask(doc, mask)
    pp = rs_setup()
    redacted = rs_redact(pp, pk, full_set, sig, kept_set)
    if redacted is None:
        print("error: signature invalid or kept blocks not a subset", file=sys.stderr)
        return EXIT_INVALID
    bundle = {
        "format": BUNDLE_FORMAT,
        "mode": mode.value,
        "blocks": [b.decode("utf-8") for b in kept_doc.blocks],
        "indices": list(kept_doc.positions()),
        "signature": codec.encode_signature(redacted).hex(),
    }
    _write_file(args.out, (json.dumps(bundle, indent=2) + "\n").encode("utf-8"))
    print(f"kept {len(kept_doc.blocks)}/{len(doc.blocks)} blocks -> {args.out}")
    return EXIT_OK


def _cmd_verify(args):
    pk = codec.decode_public_key(_read_file(args.pub))
    if args.bundle:
        doc, sig = _load_bundle(args.bundle)
    else:
        if not args.doc or not args.sig:
            raise ParameterError("verify needs either --bundle or both --doc and --sig")
        doc = _load_document(args.doc, _parse_mode(args.mode))
        sig = codec.decode_signature(_read_file(args.sig))
    pp = rs_setup()
    message = encode_blocks(doc)
    if rs_verify(pp, pk, message, sig):
        print("signature valid")
        return EXIT_OK
    print("signature INVALID", file=sys.stderr)
    return EXIT_INVALID


def _cmd_inspect(args):
    info = codec.describe(_read_file(args.file))
    print(json.dumps(info, indent=2))
    return EXIT_OK


def _cmd_bench_size(args):
    rng = _rng_from_args(args)
    samples = [int(s) for s in args.samples.split(",")]
    report = codec.measure_sizes(args.ell, samples, rng)
    verdict = "PASS" if report.constant else "FAIL"
    if args.json:
        print(json.dumps({
            "max_set_size": report.max_set_size,
            "rows": [
                {"set_size": n, "original": o, "redacted": r}
                for n, o, r in report.rows
            ],
            "expected": {
                "original": report.expected_original,
                "redacted": report.expected_redacted,
            },
            "constant": report.constant,
        }))
    else:
        print(f"{'#M':>4} {'original':>9} {'redacted':>9}")
        for n, o, r in report.rows:
            print(f"{n:>4} {o:>9} {r:>9}")
        print(f"expected {report.expected_original} / {report.expected_redacted}  "
              f"constancy: {verdict}")
    return EXIT_OK if report.constant else EXIT_INVALID


def build_parser():
    parser = argparse.ArgumentParser(
        prog="redactset",
        description="Sign a document of blocks once; derive and verify "
                    "constant-size signatures for any subset of its blocks.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="deterministic randomness (test builds only)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("keygen", help="generate a key pair")
    p.add_argument("--ell", type=int, required=True, help="maximum blocks per document")
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_keygen)

    p = sub.add_parser("sign", help="sign a document")
    p.add_argument("--doc", required=True)
    p.add_argument("--key", required=True, help="secret key file (.rssk)")
    p.add_argument("--out", required=True)
    p.add_argument("--mode", default="list", choices=["set", "list"])
    p.set_defaults(func=_cmd_sign)

    p = sub.add_parser("redact", help="derive a signature for kept blocks")
    p.add_argument("--doc", required=True)
    p.add_argument("--sig", required=True)
    p.add_argument("--pub", required=True, help="public key file (.rspk)")
    p.add_argument("--keep", required=True, help="comma-separated kept block indices")
    p.add_argument("--out", required=True, help="output bundle (JSON)")
    p.add_argument("--mode", default="list", choices=["set", "list"])
    p.set_defaults(func=_cmd_redact)

    p = sub.add_parser("verify", help="verify a signature or redacted bundle")
    p.add_argument("--doc")
    p.add_argument("--sig")
    p.add_argument("--bundle")
    p.add_argument("--pub", required=True)
    p.add_argument("--mode", default="list", choices=["set", "list"])
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("inspect", help="describe a serialized artifact")
    p.add_argument("file")
    p.set_defaults(func=_cmd_inspect)

    p = sub.add_parser("bench-size", help="measure signature sizes across set sizes")
    p.add_argument("--ell", type=int, default=16)
    p.add_argument("--samples", default="1,4,8,16")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_bench_size)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _IoFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ParameterError, EncodingError, DecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER
    except RedactSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMETER


if __name__ == "__main__":
    sys.exit(main())
