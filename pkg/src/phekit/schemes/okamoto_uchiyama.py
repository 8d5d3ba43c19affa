"""Okamoto-Uchiyama: additive homomorphism from the p-subgroup of Z*_{p^2 q}.

Messages are recovered modulo p, so the usable message space is capped below
p; the cap is published in the key parameters without revealing p itself.
"""

from __future__ import annotations

import math
from typing import Any

from ..numtheory import (
    RandomSource,
    gen_prime,
    mod_inv,
    mod_pow,
    random_coprime_below,
)
from .base import KeyPair, Payload, Scheme


class OkamotoUchiyama(Scheme):
    algorithm = "okamoto-uchiyama"
    payload_variant = "single"
    # plaintext_bits is derived during keygen (one less than the bit length of
    # the secret prime p) and travels in params so public-only copies keep it
    default_params = {"plaintext_bits": None}

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.g = keys.public["g"]
        self.h = keys.public["h"]
        self.plaintext_bits = keys.params["plaintext_bits"]
        if keys.has_private:
            p = keys.private["p"]
            self.p = p
            self.p_sq = p * p
            denom = self._little_l(mod_pow(self.g, p - 1, self.p_sq))
            self.denom_inv = mod_inv(denom, p)

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        p_bits = (security_bits + 2) // 3
        q_bits = security_bits - 2 * p_bits
        while True:
            p = gen_prime(p_bits, rng)
            q = gen_prime(q_bits, rng)
            if p == q:
                continue
            n = p * p * q
            if n.bit_length() != security_bits:
                continue
            break
        p_sq = p * p
        while True:
            g = rng.randrange(2, n)
            if math.gcd(g, n) != 1:
                continue
            # g must land outside the (p-1)-th power residues mod p^2 so the
            # logarithm map below is nondegenerate
            if mod_pow(g, p - 1, p_sq) != 1:
                break
        h = mod_pow(g, n, n)
        resolved = cls.resolve_params(params)
        resolved["plaintext_bits"] = p_bits - 1
        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "g": g, "h": h},
            private={"p": p, "q": q},
            params=resolved,
        )

    def plaintext_bound(self) -> int:
        return 1 << self.plaintext_bits

    def _little_l(self, u: int) -> int:
        return (u - 1) // self.p

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = random_coprime_below(self.n, rng)
        return mod_pow(self.g, m, self.n) * mod_pow(self.h, r, self.n) % self.n

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        numer = self._little_l(mod_pow(c, self.p - 1, self.p_sq))
        return numer * self.denom_inv % self.p

    def _add(self, c1: Payload, c2: Payload) -> Payload:
        return c1 * c2 % self.n

    def _scalar(self, c: Payload, k: int) -> Payload:
        return mod_pow(c, k, self.n)
