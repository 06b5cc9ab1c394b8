"""Canonical JSON encoding and hashing.

Every byte that gets hashed, signed, or compared across nodes goes through
this module. The encoding is deliberately narrow: strings, booleans,
arbitrary-precision integers, lists, and string-keyed mappings. Workflow
decimals travel as strings (see values.py) so no float ever reaches the
wire.
"""

from __future__ import annotations

import hashlib
import json
from typing import Any

ZERO_DIGEST = "0" * 64


class CanonicalizationError(ValueError):
    """Value cannot be represented in canonical form."""


def _check(value: Any, path: str) -> None:
    if value is True or value is False:
        return
    if isinstance(value, int):
        return
    if isinstance(value, str):
        return
    if isinstance(value, list):
        for i, item in enumerate(value):
            _check(item, f"{path}[{i}]")
        return
    if isinstance(value, dict):
        for key in value:
            if not isinstance(key, str):
                raise CanonicalizationError(f"{path}: non-string mapping key {key!r}")
            _check(value[key], f"{path}.{key}")
        return
    raise CanonicalizationError(f"{path}: unsupported type {type(value).__name__}")


def canonical_bytes(value: Any) -> bytes:
    """Encode a document as canonical JSON bytes.

    Keys are emitted in code-point order (equal to UTF-8 byte order), with
    no insignificant whitespace. Identical values produce identical bytes
    on every node.
    """
    _check(value, "$")
    return json.dumps(
        value, sort_keys=True, separators=(",", ":"), ensure_ascii=False
    ).encode("utf-8")


def _reject_float(s: str) -> Any:
    raise CanonicalizationError(f"float literal {s!r} not allowed")


def parse_canonical(data: bytes, require_exact: bool = False) -> Any:
    """Parse canonical JSON bytes back into a document.

    Rejects float literals outright. With require_exact, also rejects input
    that is not byte-identical to its own re-encoding (non-sorted keys,
    stray whitespace), which keeps signed payloads unambiguous.
    """
    try:
        value = json.loads(data.decode("utf-8"), parse_float=_reject_float)
    except CanonicalizationError:
        raise
    except (ValueError, UnicodeDecodeError) as exc:
        raise CanonicalizationError(f"invalid canonical JSON: {exc}") from exc
    _check(value, "$")
    if require_exact and canonical_bytes(value) != data:
        raise CanonicalizationError("input is not in canonical form")
    return value


def digest(data: bytes) -> str:
    """SHA-256 of the input, as 64 lowercase hex chars."""
    return hashlib.sha256(data).hexdigest()


def digest_of(value: Any) -> str:
    return digest(canonical_bytes(value))


def leading_zero_bits(hex_digest: str) -> int:
    """Number of leading zero bits in a hex-rendered digest."""
    n = int(hex_digest, 16)
    if n == 0:
        return len(hex_digest) * 4
    return len(hex_digest) * 4 - n.bit_length()
