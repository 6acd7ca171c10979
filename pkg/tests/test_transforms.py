import cmath

import numpy as np
import pytest

from kloosum.transforms import dft, idft


def naive_dft(x):
    n = len(x)
    return np.array(
        [
            sum(x[k] * cmath.exp(-2j * cmath.pi * j * k / n) for k in range(n))
            for j in range(n)
        ]
    )


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 12, 16, 37, 100])
def test_matches_naive_dft(n):
    rng = np.random.default_rng(n)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    got = dft(x)
    want = naive_dft(x)
    assert np.abs(got - want).max() < 1e-9


@pytest.mark.parametrize("n", [1, 4, 100, 1008, 10006, 2 * 5003])
def test_round_trip(n):
    rng = np.random.default_rng(n + 1)
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    back = idft(dft(x))
    scale = np.abs(x).max()
    assert np.abs(back - x).max() / scale < 1e-9


def test_idft_of_delta_is_flat():
    y = np.zeros(11, dtype=complex)
    y[0] = 11.0
    assert np.abs(idft(y) - 1.0).max() < 1e-12


def test_linearity():
    rng = np.random.default_rng(7)
    x = rng.standard_normal(30) + 1j * rng.standard_normal(30)
    y = rng.standard_normal(30) + 1j * rng.standard_normal(30)
    lhs = dft(2.5 * x - 1j * y)
    rhs = 2.5 * dft(x) - 1j * dft(y)
    assert np.abs(lhs - rhs).max() < 1e-9
