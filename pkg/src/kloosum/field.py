"""Prime-field arithmetic substrate.

A PrimeField bundles a prime p with its smallest primitive root g, the
exponent table g^k mod p, the discrete-log table, an inverse table, and the
additive character values e_p(t) = exp(2*pi*i*t/p).  Everything downstream
(Kloosterman tables, bilinear sums, energy counts) reads these tables.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, NotPrime, Overflow, ZeroInverse

MAX_MODULUS = 2**31

# Deterministic Miller-Rabin witnesses; sufficient for every n < 3_215_031_751,
# which covers the full supported range p < 2**31.
_MR_WITNESSES = (2, 3, 5, 7)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**31."""
    if n < 2:
        return False
    for w in _MR_WITNESSES:
        if n == w:
            return True
        if n % w == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for w in _MR_WITNESSES:
        x = pow(w, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def smallest_primitive_root(p: int) -> int:
    """Smallest g generating the multiplicative group mod p."""
    factors = _factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise NotPrime(f"no primitive root found for {p}; modulus is not prime")


@dataclass(frozen=True)
class PrimeField:
    """Immutable tables for F_p; build through build_field().

    exp_table[k] = g^k mod p (length p-1, a permutation of 1..p-1)
    dlog_table[x] = k with g^k = x; entry 0 is the sentinel -1
    inv_table[x] = x^(-1) mod p; entry 0 is the sentinel 0
    char_table[t] = exp(2*pi*i*t/p)
    """

    p: int
    g: int
    exp_table: np.ndarray
    dlog_table: np.ndarray
    inv_table: np.ndarray
    char_table: np.ndarray

    def dlog(self, x: int) -> int:
        """Discrete log of x to base g; x = 0 is outside the group."""
        x %= self.p
        if x == 0:
            raise DomainError("discrete log of 0 is undefined")
        return int(self.dlog_table[x])

    def __repr__(self) -> str:  # keep the table blobs out of reprs
        return f"PrimeField(p={self.p}, g={self.g})"


def build_field(p: int) -> PrimeField:
    """Validate p and precompute all tables.

    Raises Overflow when p is outside (2, 2**31) and NotPrime when the
    deterministic primality check fails.  Memory cost is O(p).
    """
    if not isinstance(p, (int, np.integer)):
        raise NotPrime(f"modulus must be an integer, got {type(p).__name__}")
    p = int(p)
    if not 2 < p < MAX_MODULUS:
        raise Overflow(f"modulus {p} outside supported range 2 < p < 2**31")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    g = smallest_primitive_root(p)

    n = p - 1
    exp_table = np.ones(n, dtype=np.int64)
    filled = 1
    while filled < n:
        step = min(filled, n - filled)
        mult = pow(g, filled, p)
        exp_table[filled : filled + step] = exp_table[:step] * mult % p
        filled += step

    dlog_table = np.full(p, -1, dtype=np.int64)
    dlog_table[exp_table] = np.arange(n, dtype=np.int64)

    inv_table = np.zeros(p, dtype=np.int64)
    inv_table[exp_table] = exp_table[(n - np.arange(n)) % n]

    # Angles computed directly from t/p; never by repeated multiplication.
    char_table = np.exp((2j * np.pi) * (np.arange(p) / p))

    for arr in (exp_table, dlog_table, inv_table, char_table):
        arr.flags.writeable = False
    return PrimeField(p, g, exp_table, dlog_table, inv_table, char_table)


def inv(fld: PrimeField, x: int) -> int:
    """Modular inverse of x in F_p^x."""
    x = int(x) % fld.p
    if x == 0:
        raise ZeroInverse("0 has no inverse mod p")
    return int(fld.inv_table[x])


def additive_char(fld: PrimeField, t: int) -> complex:
    """e_p(t) = exp(2*pi*i*t/p)."""
    return complex(fld.char_table[int(t) % fld.p])
