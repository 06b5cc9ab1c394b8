"""Node identities and Ed25519 signing.

Keys are provisioned statically: each node loads its own 32-byte seed from
a key file and learns peer public keys from its config. Signatures are raw
64-byte Ed25519, rendered base64 in transport documents.
"""

from __future__ import annotations

import base64
from dataclasses import dataclass

from cryptography.exceptions import InvalidSignature
from cryptography.hazmat.primitives.asymmetric.ed25519 import (
    Ed25519PrivateKey,
    Ed25519PublicKey,
)


class VerificationError(ValueError):
    """Malformed key or signature material."""


def generate_seed() -> bytes:
    key = Ed25519PrivateKey.generate()
    from cryptography.hazmat.primitives import serialization

    return key.private_bytes(
        serialization.Encoding.Raw,
        serialization.PrivateFormat.Raw,
        serialization.NoEncryption(),
    )


def public_key_hex(seed: bytes) -> str:
    from cryptography.hazmat.primitives import serialization

    pub = Ed25519PrivateKey.from_private_bytes(seed).public_key()
    return pub.public_bytes(
        serialization.Encoding.Raw, serialization.PublicFormat.Raw
    ).hex()


@dataclass
class NodeIdentity:
    """A named participant: signing keypair plus network address."""

    name: str
    seed: bytes
    address: str = ""

    def __post_init__(self) -> None:
        if len(self.seed) != 32:
            raise VerificationError("Ed25519 seed must be 32 bytes")
        self._private = Ed25519PrivateKey.from_private_bytes(self.seed)

    @property
    def public_hex(self) -> str:
        return public_key_hex(self.seed)

    def sign(self, payload: bytes) -> bytes:
        return self._private.sign(payload)


def verify(public_hex: str, payload: bytes, signature: bytes) -> bool:
    """True iff signature is valid. Malformed material counts as invalid."""
    try:
        key = Ed25519PublicKey.from_public_bytes(bytes.fromhex(public_hex))
        key.verify(signature, payload)
        return True
    except (InvalidSignature, ValueError):
        return False


def sig_to_b64(signature: bytes) -> str:
    return base64.b64encode(signature).decode("ascii")


def sig_from_b64(text: str) -> bytes:
    try:
        raw = base64.b64decode(text, validate=True)
    except Exception as exc:
        raise VerificationError(f"bad base64 signature: {exc}") from exc
    if len(raw) != 64:
        raise VerificationError(f"signature must be 64 bytes, got {len(raw)}")
    return raw
