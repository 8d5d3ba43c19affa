"""Ten cryptosystems behind one dispatch surface.

`scheme_for(keys)` builds the right Scheme instance for a key pair; the
module-level functions are conveniences that construct one per call. Code on
a hot path (benchmarks, bulk tests) should hold a Scheme or a PHE facade
instead, since construction precomputes decryption constants.
"""

from __future__ import annotations

from typing import Any, Optional

from ..capabilities import ALGORITHMS
from ..errors import CapabilityError
from ..numtheory import RandomSource
from .base import KeyPair, Payload, Scheme, variant_of
from .benaloh import Benaloh
from .damgard_jurik import DamgardJurik
from .ec_elgamal import EcElGamal
from .elgamal import ElGamal, ExpElGamal
from .goldwasser_micali import GoldwasserMicali
from .naccache_stern import NaccacheStern
from .okamoto_uchiyama import OkamotoUchiyama
from .paillier import Paillier
from .rsa import Rsa

SCHEME_CLASSES: dict[str, type[Scheme]] = {
    cls.algorithm: cls
    for cls in (
        Rsa,
        GoldwasserMicali,
        ElGamal,
        ExpElGamal,
        Benaloh,
        EcElGamal,
        NaccacheStern,
        OkamotoUchiyama,
        Paillier,
        DamgardJurik,
    )
}

assert set(SCHEME_CLASSES) == set(ALGORITHMS)


def scheme_class(algorithm: str) -> type[Scheme]:
    try:
        return SCHEME_CLASSES[algorithm]
    except KeyError:
        known = ", ".join(ALGORITHMS)
        raise CapabilityError(f"unknown algorithm: {algorithm!r} (known: {known})") from None


def scheme_for(keys: KeyPair) -> Scheme:
    return scheme_class(keys.algorithm)(keys)


def generate_keys(
    algorithm: str,
    security_bits: int,
    params: Optional[dict[str, Any]] = None,
    rng: Optional[RandomSource] = None,
) -> KeyPair:
    cls = scheme_class(algorithm)
    return cls.generate(security_bits, params or {}, rng or RandomSource())


def encrypt(keys: KeyPair, m: int, rng: Optional[RandomSource] = None) -> Payload:
    return scheme_for(keys).encrypt(m, rng or RandomSource())


def decrypt(keys: KeyPair, c: Payload) -> int:
    return scheme_for(keys).decrypt(c)


def raw_add(c1: Payload, c2: Payload, keys: KeyPair) -> Payload:
    return scheme_for(keys).add(c1, c2)


def raw_mul(c1: Payload, c2: Payload, keys: KeyPair) -> Payload:
    return scheme_for(keys).mul(c1, c2)


def raw_xor(c1: Payload, c2: Payload, keys: KeyPair) -> Payload:
    return scheme_for(keys).xor(c1, c2)


def raw_scalar(c: Payload, k: int, keys: KeyPair) -> Payload:
    return scheme_for(keys).scalar(c, k)


def regenerate(
    c: Payload, keys: KeyPair, rng: Optional[RandomSource] = None
) -> Payload:
    return scheme_for(keys).regenerate(c, rng or RandomSource())


__all__ = [
    "KeyPair",
    "Payload",
    "Scheme",
    "SCHEME_CLASSES",
    "variant_of",
    "scheme_class",
    "scheme_for",
    "generate_keys",
    "encrypt",
    "decrypt",
    "raw_add",
    "raw_mul",
    "raw_xor",
    "raw_scalar",
    "regenerate",
]
