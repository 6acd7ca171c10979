"""Arbitrary-length DFT via the Bluestein chirp-z reduction.

A length-N transform rarely has N a power of two here (N = p - 1), so it is
rewritten as a chirp-modulated convolution and carried out with two
power-of-two FFTs.  Chirp angles use n^2 reduced mod 2N in exact integer
arithmetic, which keeps the round-trip error near machine precision even for
N around 10^7.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def _next_pow2(n: int) -> int:
    return 1 << (n - 1).bit_length()


@lru_cache(maxsize=64)
def _bluestein_tables(n: int) -> tuple[np.ndarray, np.ndarray, int]:
    """Chirp vector and the FFT of the padded convolution kernel for size n."""
    k = np.arange(n, dtype=np.int64)
    # exp(-i*pi*k^2/n) has period 2n in k^2; reduce in integers first.
    chirp = np.exp((-1j * np.pi / n) * ((k * k) % (2 * n)))
    m = _next_pow2(2 * n - 1)
    kernel = np.zeros(m, dtype=np.complex128)
    kernel[:n] = chirp.conj()
    kernel[m - (n - 1) :] = chirp[1:][::-1].conj()
    kernel_fft = np.fft.fft(kernel)
    chirp.flags.writeable = False
    kernel_fft.flags.writeable = False
    return chirp, kernel_fft, m


def dft(x: np.ndarray) -> np.ndarray:
    """Forward transform: X[j] = sum_k x[k] * exp(-2*pi*i*j*k/N)."""
    x = np.asarray(x, dtype=np.complex128)
    n = x.shape[0]
    if n == 1:
        return x.copy()
    chirp, kernel_fft, m = _bluestein_tables(n)
    buf = np.zeros(m, dtype=np.complex128)
    buf[:n] = x * chirp
    conv = np.fft.ifft(np.fft.fft(buf) * kernel_fft)
    return chirp * conv[:n]


def idft(y: np.ndarray) -> np.ndarray:
    """Inverse of dft(): x[k] = (1/N) * sum_j y[j] * exp(+2*pi*i*j*k/N)."""
    y = np.asarray(y, dtype=np.complex128)
    n = y.shape[0]
    if n == 1:
        return y.copy()
    return dft(y.conj()).conj() / n
