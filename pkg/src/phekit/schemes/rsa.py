"""Textbook RSA: multiplicatively homomorphic, deterministic encryption."""

from __future__ import annotations

import math
from typing import Any

from ..numtheory import RandomSource, gen_prime, mod_inv, mod_pow
from .base import KeyPair, Payload, Scheme


class Rsa(Scheme):
    algorithm = "rsa"
    payload_variant = "single"

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.e = keys.public["e"]
        self.d = keys.private["d"] if keys.has_private else None

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        p_bits = security_bits // 2
        q_bits = security_bits - p_bits
        while True:
            p = gen_prime(p_bits, rng)
            q = gen_prime(q_bits, rng)
            if p != q:
                break
        n = p * q
        phi = (p - 1) * (q - 1)
        while True:
            e = rng.randrange(3, phi)
            if math.gcd(e, phi) == 1:
                break
        d = mod_inv(e, phi)
        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "e": e},
            private={"p": p, "q": q, "d": d},
            params=cls.resolve_params(params),
        )

    def plaintext_bound(self) -> int:
        return self.n

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        # the one scheme with no random key: same plaintext, same ciphertext
        self.check_plaintext(m)
        return mod_pow(m, self.e, self.n)

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        return mod_pow(c, self.d, self.n)

    def _mul(self, c1: Payload, c2: Payload) -> Payload:
        return (c1 * c2) % self.n
