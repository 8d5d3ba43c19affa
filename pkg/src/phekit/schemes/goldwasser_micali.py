"""Goldwasser-Micali: one quadratic residue per plaintext bit, XOR on top.

A plaintext integer expands to its big-endian bit list, minimal width by
default. XOR requires equal widths; use the `bits` argument of encrypt to pad
when combining values of different magnitudes.
"""

from __future__ import annotations

from typing import Any, Optional

from ..errors import BitLengthError, PlaintextRangeError
from ..numtheory import (
    RandomSource,
    gen_prime,
    is_qr_mod_prime,
    random_coprime_below,
)
from .base import KeyPair, Payload, Scheme


class GoldwasserMicali(Scheme):
    algorithm = "goldwasser-micali"
    payload_variant = "bits"

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.x = keys.public["x"]
        self.p = keys.private["p"] if keys.has_private else None

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
        while True:
            x = rng.randrange(2, n)
            if x % p == 0 or x % q == 0:
                continue
            # non-residue modulo both primes: jacobi(x, n) = (-1)(-1) = +1,
            # so ciphertext residues are indistinguishable without p
            if not is_qr_mod_prime(x, p) and not is_qr_mod_prime(x, q):
                break
        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "x": x},
            private={"p": p, "q": q},
            params=cls.resolve_params(params),
        )

    def plaintext_bound(self) -> Optional[int]:
        return None  # any width: the payload grows with the plaintext

    def encrypt(self, m: int, rng: RandomSource, bits: Optional[int] = None) -> Payload:
        self.check_plaintext(m)
        width = max(1, m.bit_length())
        if bits is not None:
            if bits < width:
                raise PlaintextRangeError(
                    f"plaintext needs {width} bits, requested width is {bits}"
                )
            width = bits
        out = []
        for i in range(width - 1, -1, -1):
            b = (m >> i) & 1
            r = random_coprime_below(self.n, rng)
            value = r * r % self.n
            if b:
                value = value * self.x % self.n
            out.append(value)
        return out

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        m = 0
        for value in c:
            bit = 0 if is_qr_mod_prime(value % self.p, self.p) else 1
            m = (m << 1) | bit
        return m

    def _xor(self, c1: Payload, c2: Payload) -> Payload:
        if len(c1) != len(c2):
            raise BitLengthError(
                f"bit widths differ: {len(c1)} vs {len(c2)}; "
                "encrypt with a common width to combine"
            )
        return [a * b % self.n for a, b in zip(c1, c2)]
