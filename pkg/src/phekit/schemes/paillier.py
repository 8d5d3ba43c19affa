"""Paillier: additively homomorphic modulo n, ciphertexts modulo n^2."""

from __future__ import annotations

import math
from typing import Any

from ..numtheory import (
    RandomSource,
    gen_prime,
    lcm,
    mod_inv,
    mod_pow,
    random_coprime_below,
)
from .base import KeyPair, Payload, Scheme


def generate_modulus(
    security_bits: int, rng: RandomSource
) -> tuple[int, int, int]:
    """(p, q, n) with n = p*q of exactly security_bits bits and gcd(n, phi) = 1."""
    p_bits = security_bits // 2
    q_bits = security_bits - p_bits
    while True:
        p = gen_prime(p_bits, rng)
        q = gen_prime(q_bits, rng)
        if p == q:
            continue
        n = p * q
        if math.gcd(n, (p - 1) * (q - 1)) == 1:
            return p, q, n


class Paillier(Scheme):
    algorithm = "paillier"
    payload_variant = "single"

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.g = keys.public["g"]
        self.n_sq = self.n * self.n
        if keys.has_private:
            p, q = keys.private["p"], keys.private["q"]
            self.lam = lcm(p - 1, q - 1)
            self.mu = mod_inv(self._big_l(mod_pow(self.g, self.lam, self.n_sq)), self.n)

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        p, q, n = generate_modulus(security_bits, rng)
        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "g": n + 1},
            private={"p": p, "q": q},
            params=cls.resolve_params(params),
        )

    def plaintext_bound(self) -> int:
        return self.n

    def _big_l(self, u: int) -> int:
        return (u - 1) // self.n

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = random_coprime_below(self.n, rng)
        if self.g == self.n + 1:
            # (n+1)^m = 1 + m*n mod n^2, skipping a full exponentiation
            g_m = (1 + m * self.n) % self.n_sq
        else:
            g_m = mod_pow(self.g, m, self.n_sq)
        return g_m * mod_pow(r, self.n, self.n_sq) % self.n_sq

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        return self._big_l(mod_pow(c, self.lam, self.n_sq)) * self.mu % self.n

    def _add(self, c1: Payload, c2: Payload) -> Payload:
        return c1 * c2 % self.n_sq

    def _scalar(self, c: Payload, k: int) -> Payload:
        return mod_pow(c, k, self.n_sq)
