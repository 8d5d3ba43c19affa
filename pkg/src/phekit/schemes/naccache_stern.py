"""Naccache-Stern: additive encryption with messages modulo a smooth sigma.

sigma is a product of distinct small odd primes woven into p-1 and q-1.
Decryption recovers the message residue at each small prime independently and
reassembles with the Chinese remainder theorem. Like Benaloh, the parameter
search runs under a retry budget.
"""

from __future__ import annotations

from typing import Any

from ..errors import DecryptionBoundError, KeygenExhaustedError, MathDomainError
from ..numtheory import (
    RandomSource,
    crt,
    discrete_log_bounded,
    gen_prime,
    is_probable_prime,
    mod_pow,
    random_coprime_below,
)
from .base import KeyPair, Payload, Scheme
from .benaloh import RETRY_BUDGET


def message_primes(count: int) -> list[int]:
    """The first `count` odd primes."""
    primes: list[int] = []
    candidate = 3
    while len(primes) < count:
        if is_probable_prime(candidate):
            primes.append(candidate)
        candidate += 2
    return primes


class NaccacheStern(Scheme):
    algorithm = "naccache-stern"
    payload_variant = "single"
    default_params = {"prime_count": 8}

    def __init__(self, keys: KeyPair):
        super().__init__(keys)
        self.n = keys.public["n"]
        self.g = keys.public["g"]
        self.sigma = keys.public["sigma"]
        self.primes = message_primes(keys.params["prime_count"])
        if keys.has_private:
            p, q = keys.private["p"], keys.private["q"]
            phi = (p - 1) * (q - 1)
            # per message prime: the exponent that isolates m mod p_i and the
            # order-p_i base the small discrete log runs against
            self._parts = []
            for prime in self.primes:
                exponent = phi // prime
                self._parts.append((prime, exponent, mod_pow(self.g, exponent, self.n)))

    @classmethod
    def generate(
        cls, security_bits: int, params: dict[str, Any], rng: RandomSource
    ) -> KeyPair:
        resolved = cls.resolve_params(params)
        count = resolved["prime_count"]
        if count < 2:
            raise MathDomainError("naccache-stern needs at least two message primes")
        primes = message_primes(count)
        half = count // 2
        u = 1
        for prime in primes[:half]:
            u *= prime
        v = 1
        for prime in primes[half:]:
            v *= prime
        sigma = u * v

        p_bits = security_bits // 2
        q_bits = security_bits - p_bits
        a_bits = p_bits - u.bit_length() - 1
        b_bits = q_bits - v.bit_length() - 1
        if a_bits < 8 or b_bits < 8:
            raise MathDomainError(
                f"security_bits {security_bits} too small for {count} message primes"
            )

        budget = RETRY_BUDGET

        def factor_with(cofactor: int, bits: int, aux_bits: int) -> tuple[int, int]:
            # prime of the form 2*aux*cofactor + 1 with aux prime
            nonlocal budget
            while budget > 0:
                budget -= 1
                aux = gen_prime(aux_bits, rng)
                candidate = 2 * aux * cofactor + 1
                if candidate.bit_length() != bits:
                    continue
                if is_probable_prime(candidate):
                    return candidate, aux
            raise KeygenExhaustedError(
                "naccache-stern: no prime with the required smooth part "
                "within the retry budget"
            )

        while True:
            p, a = factor_with(u, p_bits, a_bits)
            q, b = factor_with(v, q_bits, b_bits)
            # each message prime must divide phi exactly once, so the
            # auxiliary primes must stay clear of the message primes
            if p != q and a != b and a not in primes and b not in primes:
                break
            if budget <= 0:
                raise KeygenExhaustedError("naccache-stern: retry budget exhausted")

        n = p * q
        phi = (p - 1) * (q - 1)
        g = None
        while budget > 0:
            budget -= 1
            candidate = random_coprime_below(n, rng)
            if all(mod_pow(candidate, phi // prime, n) != 1 for prime in primes):
                g = candidate
                break
        if g is None:
            raise KeygenExhaustedError("naccache-stern: no generator g within the budget")

        return KeyPair(
            algorithm=cls.algorithm,
            security_bits=security_bits,
            public={"n": n, "g": g, "sigma": sigma},
            private={"p": p, "q": q},
            params=resolved,
        )

    def plaintext_bound(self) -> int:
        return self.sigma

    def encrypt(self, m: int, rng: RandomSource) -> Payload:
        self.check_plaintext(m)
        r = random_coprime_below(self.n, rng)
        return (
            mod_pow(self.g, m, self.n) * mod_pow(r, self.sigma, self.n) % self.n
        )

    def decrypt(self, c: Payload) -> int:
        self.require_private()
        self.check_payload(c)
        residues = []
        moduli = []
        for prime, exponent, base in self._parts:
            target = mod_pow(c, exponent, self.n)
            residue = discrete_log_bounded(base, target, self.n, prime - 1)
            if residue is None:
                raise DecryptionBoundError(
                    f"naccache-stern: no residue found modulo {prime}"
                )
            residues.append(residue)
            moduli.append(prime)
        return crt(residues, moduli)

    def _add(self, c1: Payload, c2: Payload) -> Payload:
        return c1 * c2 % self.n

    def _scalar(self, c: Payload, k: int) -> Payload:
        return mod_pow(c, k, self.n)
