"""ElGamal over a prime-order subgroup, in two flavors.

Classic ElGamal multiplies plaintexts into the second component and is
multiplicatively homomorphic. The exponential variant encrypts g^m instead,
which turns ciphertext multiplication into plaintext addition at the price of
a bounded discrete-log search on decryption.
"""

from __future__ import annotations

from typing import Any

from ..errors import DecryptionBoundError
from ..numtheory import (
    RandomSource,
    discrete_log_bounded,
    gen_group_prime,
    mod_inv,
    mod_pow,
)
from .base import KeyPair, Payload, Scheme

DEFAULT_DLP_BOUND = 1 << 20


def _subgroup_bits(security_bits: int) -> int:
    # 256-bit subgroups at production sizes; scaled down for toy keys, but
    # never below the exp variant's default decryption bound of 2^20
    return min(256, max(24, security_bits // 2))


def _generate_group(
    algorithm: str,
    security_bits: int,
    params: dict[str, Any],
    rng: RandomSource,
) -> KeyPair:
    """Prime p = 2qc+1, generator g of the order-q subgroup, secret x.

    Decryption m = c2 * (c1^x)^-1 holds for any g, so correctness never
    depends on the group structure; the large prime q dividing p-1 is what
    keeps discrete logs in <g> hard.
    """
    p, q = gen_group_prime(security_bits, _subgroup_bits(security_bits), rng)
    while True:
        g = mod_pow(rng.randrange(2, p - 1), (p - 1) // q, p)
        if g != 1:
            break
    x = rng.randrange(2, q)
    h = mod_pow(g, x, p)
    return KeyPair(
        algorithm=algorithm,
        security_bits=security_bits,
        public={"p": p, "g": g, "h": h},
        private={"x": x},
        params=params,
    )


class ElGamal(Scheme):
    algorithm = "elgamal"
    payload_variant = "pair"

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.p = keys.public["p"]
        self.g = keys.public["g"]
        self.h = keys.public["h"]
        self.x = keys.private["x"] if keys.has_private else None

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        return _generate_group(
            cls.algorithm, security_bits, cls.resolve_params(params), rng
        )

    def plaintext_bound(self) -> int:
        return self.p

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = rng.randrange(2, self.p - 1)
        return (mod_pow(self.g, r, self.p), m * mod_pow(self.h, r, self.p) % self.p)

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        c1, c2 = c
        shared = mod_pow(c1, self.x, self.p)
        return c2 * mod_inv(shared, self.p) % self.p

    def _mul(self, c1: Payload, c2: Payload) -> Payload:
        return (c1[0] * c2[0] % self.p, c1[1] * c2[1] % self.p)


class ExpElGamal(ElGamal):
    algorithm = "exp-elgamal"
    payload_variant = "pair"
    default_params = {"dlp_bound": DEFAULT_DLP_BOUND}

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.dlp_bound = keys.params["dlp_bound"]

    def plaintext_bound(self) -> int:
        return self.dlp_bound

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = rng.randrange(2, self.p - 1)
        return (
            mod_pow(self.g, r, self.p),
            mod_pow(self.g, m, self.p) * mod_pow(self.h, r, self.p) % self.p,
        )

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        c1, c2 = c
        shared = mod_pow(c1, self.x, self.p)
        g_m = c2 * mod_inv(shared, self.p) % self.p
        m = discrete_log_bounded(self.g, g_m, self.p, self.dlp_bound)
        if m is None:
            raise DecryptionBoundError(
                f"plaintext exceeds the discrete-log bound {self.dlp_bound}; "
                "regenerate keys with a larger dlp_bound"
            )
        return m

    def _mul(self, c1: Payload, c2: Payload) -> Payload:  # not additive-capable
        raise NotImplementedError

    def _add(self, c1: Payload, c2: Payload) -> Payload:
        return (c1[0] * c2[0] % self.p, c1[1] * c2[1] % self.p)

    def _scalar(self, c: Payload, k: int) -> Payload:
        return (mod_pow(c[0], k, self.p), mod_pow(c[1], k, self.p))
