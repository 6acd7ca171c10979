import cmath
import math

import numpy as np
import pytest

from kloosum.errors import DomainError, NotPrime, Overflow, ZeroInverse
from kloosum.field import (
    additive_char,
    build_field,
    inv,
    is_prime,
    smallest_primitive_root,
)

PRIMES = [3, 5, 7, 11, 13, 101, 1009]


def brute_force_smallest_root(p):
    """Oracle: smallest g whose powers enumerate all of 1..p-1."""
    for g in range(2, p):
        seen = set()
        x = 1
        for _ in range(p - 1):
            x = x * g % p
            seen.add(x)
        if len(seen) == p - 1:
            return g
    raise AssertionError


def sieve(limit):
    flags = bytearray([1]) * (limit + 1)
    flags[:2] = b"\x00\x00"
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = b"\x00" * len(flags[i * i :: i])
    return {i for i, f in enumerate(flags) if f}


def test_is_prime_against_sieve():
    small = sieve(5000)
    for n in range(5000):
        assert is_prime(n) == (n in small)


def test_is_prime_large_values():
    assert is_prime(2**31 - 1)  # Mersenne prime
    assert not is_prime(2**31 - 3)
    assert not is_prime((2**15 - 19) * (2**16 - 15))


def test_build_field_smallest_roots():
    assert build_field(7).g == 3 == brute_force_smallest_root(7)
    assert build_field(5).g == 2 == brute_force_smallest_root(5)


@pytest.mark.parametrize("p", PRIMES)
def test_root_matches_brute_force(p):
    assert smallest_primitive_root(p) == brute_force_smallest_root(p)


def test_build_field_rejects_composites_and_range():
    with pytest.raises(NotPrime):
        build_field(4)
    with pytest.raises(NotPrime):
        build_field(1009 * 1013)
    with pytest.raises(Overflow):
        build_field(2)
    with pytest.raises(Overflow):
        build_field(2**31)
    with pytest.raises(NotPrime):
        build_field(3.0)


@pytest.mark.parametrize("p", PRIMES)
def test_table_invariants(p, fields):
    fld = fields(p)
    assert sorted(fld.exp_table.tolist()) == list(range(1, p))
    assert np.array_equal(
        fld.dlog_table[fld.exp_table], np.arange(p - 1, dtype=np.int64)
    )
    assert fld.dlog_table[0] == -1
    # order of g is exactly p-1
    for q in {2} | {d for d in range(3, p, 2) if (p - 1) % d == 0 and is_prime(d)}:
        if (p - 1) % q == 0:
            assert pow(fld.g, (p - 1) // q, p) != 1


def test_inv_examples(fields):
    assert inv(fields(7), 3) == 5
    assert inv(fields(5), 4) == 4
    with pytest.raises(ZeroInverse):
        inv(fields(7), 0)
    with pytest.raises(ZeroInverse):
        inv(fields(7), 14)


@pytest.mark.parametrize("p", PRIMES)
def test_inv_involution(p, fields):
    fld = fields(p)
    for x in range(1, p):
        y = inv(fld, x)
        assert x * y % p == 1
        assert inv(fld, y) == x


def test_additive_char_examples(fields):
    f5 = fields(5)
    assert additive_char(f5, 0) == 1 + 0j
    assert abs(additive_char(f5, 2) * additive_char(f5, 3) - 1) < 1e-12
    expected = complex(math.cos(2 * math.pi / 5), math.sin(2 * math.pi / 5))
    assert abs(additive_char(f5, 1) - expected) < 1e-9
    assert abs(additive_char(f5, 1) - (0.309017 + 0.951057j)) < 1e-6


@pytest.mark.parametrize("p", PRIMES)
def test_char_table_properties(p, fields):
    fld = fields(p)
    assert np.abs(np.abs(fld.char_table) - 1.0).max() < 1e-12
    total = fld.char_table.sum()
    assert abs(total) < 1e-9
    assert abs(fld.char_table[1:].sum() + 1) < 1e-9
    # values come from the angle, not repeated multiplication
    for t in (1, p // 2, p - 1):
        assert fld.char_table[t] == pytest.approx(
            cmath.exp(2j * cmath.pi * t / p), abs=1e-12
        )


def test_dlog_sentinel(fields):
    fld = fields(7)
    with pytest.raises(DomainError):
        fld.dlog(0)
    for k in range(6):
        assert fld.dlog(int(fld.exp_table[k])) == k


def test_tables_are_read_only(fields):
    fld = fields(7)
    with pytest.raises(ValueError):
        fld.exp_table[0] = 5
