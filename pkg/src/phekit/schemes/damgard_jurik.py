"""Damgard-Jurik: Paillier generalized to ciphertexts modulo n^(s+1).

Messages live modulo n^s, so one key pair can carry plaintexts far larger
than the modulus. s = 1 reduces to Paillier exactly.
"""

from __future__ import annotations

import math
from typing import Any

from ..errors import MathDomainError
from ..numtheory import (
    RandomSource,
    crt,
    lcm,
    mod_inv,
    mod_pow,
    random_coprime_below,
)
from .base import KeyPair, Payload, Scheme
from .paillier import generate_modulus


class DamgardJurik(Scheme):
    algorithm = "damgard-jurik"
    payload_variant = "single"
    default_params = {"s": 2}

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.g = keys.public["g"]
        self.s = keys.params["s"]
        self.n_s = self.n**self.s
        self.n_s1 = self.n_s * self.n
        if keys.has_private:
            p, q = keys.private["p"], keys.private["q"]
            lam = lcm(p - 1, q - 1)
            # d = 1 mod n^s picks the message out; d = 0 mod lambda kills r
            self.d = crt([1, 0], [self.n_s, lam])

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        resolved = cls.resolve_params(params)
        if resolved["s"] < 1:
            raise MathDomainError("damgard-jurik parameter s must be >= 1")
        p, q, n = generate_modulus(security_bits, rng)
        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "g": n + 1},
            private={"p": p, "q": q},
            params=resolved,
        )

    def plaintext_bound(self) -> int:
        return self.n_s

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = random_coprime_below(self.n, rng)
        if self.g == self.n + 1:
            g_m = self._one_plus_n_pow(m)
        else:
            g_m = mod_pow(self.g, m, self.n_s1)
        return g_m * mod_pow(r, self.n_s, self.n_s1) % self.n_s1

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        return self._extract_exponent(mod_pow(c, self.d, self.n_s1))

    def _one_plus_n_pow(self, m: int) -> int:
        """(1+n)^m mod n^(s+1) via the binomial expansion, s+1 terms."""
        result = 1
        term = 1
        for k in range(1, self.s + 1):
            # term = C(m, k) * n^k mod n^(s+1), built incrementally
            term = term * (m - k + 1) // k
            result = (result + term * self.n**k) % self.n_s1
        return result

    def _extract_exponent(self, a: int) -> int:
        """Recover i from a = (1+n)^i mod n^(s+1), digit by digit in base n.

        Standard iterative extraction: at step j the value of i mod n^(j-1) is
        known, and the binomial correction terms C(i,k)*n^(k-1) for k in
        [2, j] are subtracted from L(a mod n^(j+1)) to expose i mod n^j.
        """
        n = self.n
        i = 0
        for j in range(1, self.s + 1):
            n_j = n**j
            t1 = ((a % (n_j * n)) - 1) // n
            t2 = i
            for k in range(2, j + 1):
                i -= 1
                t2 = t2 * i % n_j
                factor = t2 * n ** (k - 1) % n_j
                t1 = (t1 - factor * mod_inv(math.factorial(k), n_j)) % n_j
            i = t1
        return i

    def _add(self, c1: Payload, c2: Payload) -> Payload:
        return c1 * c2 % self.n_s1

    def _scalar(self, c: Payload, k: int) -> Payload:
        return mod_pow(c, k, self.n_s1)
