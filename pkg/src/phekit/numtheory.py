"""Arbitrary-precision number theory used by every cryptosystem.

All functions are pure; :class:`RandomSource` is the only stateful object and
must not be shared across concurrent callers.
"""

from __future__ import annotations

import math
import os
import random
from typing import Optional, Sequence, Tuple

from .errors import MathDomainError, NotInvertibleError

TEST_SEED_ENV = "PHE_TEST_SEED"

DEFAULT_MR_ROUNDS = 40

# Primes below 1000, for trial division ahead of Miller-Rabin. Covers every
# composite below 997^2, so small inputs are decided exactly.
_SMALL_PRIMES: tuple[int, ...] = tuple(
    n for n in range(2, 1000) if all(n % d for d in range(2, int(n ** 0.5) + 1))
)


class RandomSource:
    """Random values for key generation and encryption.

    Unseeded instances draw from the operating system's CSPRNG. A seed makes
    the full draw sequence reproducible; seeded instances are for tests only.
    """

    def __init__(self, seed: Optional[int] = None):
        self.seeded = seed is not None
        self._rng: random.Random = (
            random.Random(seed) if seed is not None else random.SystemRandom()
        )

    @classmethod
    def from_env(cls, env_var: str = TEST_SEED_ENV) -> "RandomSource":
        """Seeded from the environment when the test-seed variable is set."""
        raw = os.environ.get(env_var)
        if raw is None:
            return cls()
        return cls(seed=int(raw))

    def getrandbits(self, k: int) -> int:
        return self._rng.getrandbits(k)

    def randrange(self, start: int, stop: Optional[int] = None) -> int:
        return self._rng.randrange(start, stop)


def mod_pow(base: int, exponent: int, modulus: int) -> int:
    """base**exponent mod modulus by square-and-multiply.

    Never materializes base**exponent; delegates to the builtin three-argument
    ``pow``.
    """
    if modulus < 1:
        raise MathDomainError("modulus must be >= 1")
    return pow(base, exponent, modulus)


def egcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b)."""
    if a == 0 and b == 0:
        raise MathDomainError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inv(a: int, modulus: int) -> int:
    """Inverse of a modulo modulus, in [1, modulus)."""
    if modulus < 2:
        raise MathDomainError("modulus must be >= 2")
    g, x, _ = egcd(a % modulus, modulus)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible mod {modulus} (gcd={g})")
    return x % modulus


def lcm(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise MathDomainError("lcm arguments must be >= 1")
    return math.lcm(a, b)


def is_probable_prime(n: int, rounds: int = DEFAULT_MR_ROUNDS) -> bool:
    """Miller-Rabin with random bases after small-prime trial division.

    False-positive probability is at most 4**-rounds. Inputs below 997**2 are
    decided exactly by the trial division.
    """
    if rounds < 1:
        raise MathDomainError("rounds must be >= 1")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
    # n is odd and > 997 here
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = random.SystemRandom()
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = (x * x) % n
            if x == n - 1:
                break
        else:
            return False
    return True


def gen_prime(bits: int, rng: RandomSource, rounds: int = DEFAULT_MR_ROUNDS) -> int:
    """Random probable prime of exactly `bits` bits.

    The top two bits are forced so products of two such primes reach the full
    requested modulus size; the bottom bit is forced odd.
    """
    if bits < 8:
        raise MathDomainError("bits must be >= 8")
    top = (1 << (bits - 1)) | (1 << (bits - 2))
    while True:
        candidate = rng.getrandbits(bits) | top | 1
        if is_probable_prime(candidate, rounds):
            return candidate


def gen_group_prime(
    bits: int, subgroup_bits: int, rng: RandomSource, rounds: int = DEFAULT_MR_ROUNDS
) -> Tuple[int, int]:
    """Prime p of exactly `bits` bits whose group order p-1 has a prime
    factor q of exactly `subgroup_bits` bits. Returns (p, q).

    p = 2qc + 1 for a fixed q and random cofactors c, so only p itself needs
    a primality search. Strict safe primes (c = 1) are orders of magnitude
    rarer; the large q already blocks Pohlig-Hellman on the working subgroup.
    """
    if subgroup_bits < 8:
        raise MathDomainError("subgroup_bits must be >= 8")
    if bits < subgroup_bits + 8:
        raise MathDomainError("bits must be at least subgroup_bits + 8")
    q = gen_prime(subgroup_bits, rng, rounds)
    cofactor_bits = bits - subgroup_bits - 1
    while True:
        c = rng.getrandbits(cofactor_bits)
        p = 2 * q * c + 1
        # 2qc < 2^bits always holds; only the lower edge needs a check
        if p.bit_length() != bits:
            continue
        if is_probable_prime(p, rounds):
            return p, q


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 3, via quadratic reciprocity."""
    if n < 3 or n % 2 == 0:
        raise MathDomainError("jacobi requires odd n >= 3")
    a %= n
    result = 1
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def is_qr_mod_prime(a: int, p: int) -> bool:
    """Euler criterion: is a a quadratic residue modulo the odd prime p?"""
    if a % p == 0:
        raise MathDomainError("a must not be divisible by p")
    return pow(a, (p - 1) // 2, p) == 1


def discrete_log_bounded(
    base: int, target: int, modulus: int, bound: int
) -> Optional[int]:
    """Smallest m in [0, bound] with base**m = target (mod modulus), or None.

    Baby-step giant-step: O(sqrt(bound)) time and space. Requires
    gcd(base, modulus) = 1.
    """
    if bound < 1:
        raise MathDomainError("bound must be >= 1")
    if math.gcd(base, modulus) != 1:
        raise MathDomainError("base must be a unit modulo modulus")
    base %= modulus
    target %= modulus
    step = math.isqrt(bound) + 1
    baby: dict[int, int] = {}
    value = 1 % modulus
    for j in range(step):
        baby.setdefault(value, j)
        value = (value * base) % modulus
    giant_factor = mod_inv(pow(base, step, modulus), modulus)
    gamma = target
    for i in range(step + 1):
        j = baby.get(gamma)
        if j is not None:
            m = i * step + j
            if m <= bound:
                return m
        gamma = (gamma * giant_factor) % modulus
    return None


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Unique x mod prod(moduli) with x = r_i (mod m_i); moduli pairwise coprime."""
    if len(residues) != len(moduli) or not residues:
        raise MathDomainError("need equal-length, non-empty residue/modulus lists")
    x = residues[0] % moduli[0]
    m = moduli[0]
    for r_i, m_i in zip(residues[1:], moduli[1:]):
        if math.gcd(m, m_i) != 1:
            raise MathDomainError("moduli must be pairwise coprime")
        # x + m*t = r_i (mod m_i)
        t = ((r_i - x) * mod_inv(m, m_i)) % m_i
        x += m * t
        m *= m_i
    return x % m


def random_coprime_below(n: int, rng: RandomSource) -> int:
    """Uniform r in [2, n-1] with gcd(r, n) = 1, by rejection sampling."""
    if n < 3:
        raise MathDomainError("n must be >= 3")
    while True:
        r = rng.randrange(2, n)
        if math.gcd(r, n) == 1:
            return r
