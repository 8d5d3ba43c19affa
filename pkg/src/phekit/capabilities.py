"""Which homomorphic operations each cryptosystem supports.

The matrix is the single authority consulted by the algebra layer, the CLI,
and the benchmark harness. Rows stay in canonical order everywhere output is
ordered (capability listings, benchmark CSV, chart axes).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapabilityError

# Canonical algorithm identifiers, in fixed presentation order.
ALGORITHMS: tuple[str, ...] = (
    "rsa",
    "goldwasser-micali",
    "elgamal",
    "exp-elgamal",
    "benaloh",
    "ec-elgamal",
    "naccache-stern",
    "okamoto-uchiyama",
    "paillier",
    "damgard-jurik",
)

DISPLAY_NAMES: dict[str, str] = {
    "rsa": "RSA",
    "goldwasser-micali": "Goldwasser-Micali",
    "elgamal": "ElGamal",
    "exp-elgamal": "Exponential-ElGamal",
    "benaloh": "Benaloh",
    "ec-elgamal": "EllipticCurve-ElGamal",
    "naccache-stern": "Naccache-Stern",
    "okamoto-uchiyama": "Okamoto-Uchiyama",
    "paillier": "Paillier",
    "damgard-jurik": "Damgard-Jurik",
}


@dataclass(frozen=True)
class Capability:
    """Operation support flags for one cryptosystem, in presentation order."""

    hom_mul: bool
    hom_add: bool
    scalar_mul: bool
    hom_xor: bool
    regeneration: bool


def _cap(mul: bool, add: bool, scalar: bool, xor: bool, regen: bool) -> Capability:
    return Capability(mul, add, scalar, xor, regen)


_MATRIX: dict[str, Capability] = {
    "rsa": _cap(True, False, False, False, False),
    "goldwasser-micali": _cap(False, False, False, True, False),
    "elgamal": _cap(True, False, False, False, False),
    "exp-elgamal": _cap(False, True, True, False, True),
    "benaloh": _cap(False, True, True, False, True),
    "ec-elgamal": _cap(False, True, True, False, False),
    "naccache-stern": _cap(False, True, True, False, True),
    "okamoto-uchiyama": _cap(False, True, True, False, True),
    "paillier": _cap(False, True, True, False, True),
    "damgard-jurik": _cap(False, True, True, False, True),
}

# operation token -> (Capability field, phrase used in the frozen message)
_OP_FIELDS: dict[str, str] = {
    "mul": "hom_mul",
    "add": "hom_add",
    "scalar": "scalar_mul",
    "xor": "hom_xor",
    "regen": "regeneration",
}

_OP_PHRASES: dict[str, str] = {
    "add": "the addition",
    "mul": "the multiplication",
    "xor": "the exclusive or",
}


def capabilities(algorithm: str) -> Capability:
    if algorithm not in _MATRIX:
        raise CapabilityError(f"unknown algorithm: {algorithm}")
    return _MATRIX[algorithm]


def ensure_supported(algorithm: str, operation: str) -> None:
    """Raise CapabilityError with the fixed message when unsupported.

    The message wording is part of the public contract; callers match on it.
    """
    cap = capabilities(algorithm)
    if operation not in _OP_FIELDS:
        raise CapabilityError(f"unknown operation: {operation}")
    if getattr(cap, _OP_FIELDS[operation]):
        return
    name = DISPLAY_NAMES[algorithm]
    if operation in _OP_PHRASES:
        raise CapabilityError(
            f"{name} is not homomorphic with respect to {_OP_PHRASES[operation]}"
        )
    if operation == "scalar":
        raise CapabilityError(f"{name} does not support scalar multiplication")
    raise CapabilityError(f"{name} does not support ciphertext regeneration")
