"""Normalized hyper-Kloosterman sums K_{r,p}(n) by three independent routes.

K_{r,p}(n) = p^{-(r-1)/2} * sum over x_1..x_r in F_p^x with x_1...x_r = n
of e_p(x_1 + ... + x_r).

naive_single    exhausts x_1..x_{r-1} and solves for x_r       (O(p^{r-1}))
convolution_table iterates direct multiplicative convolutions  (O(p^2 r))
spectral_table  inverts powers of Gauss sums with two DFTs     (O(p log p))

The first two are compensated-summation precision anchors; the spectral
route is the production path.  All three normalize identically at build
time, so their outputs are directly comparable.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import kernels
from .budget import check_budget
from .errors import DomainError
from .field import PrimeField
from .transforms import dft, idft


def _normalization(p: int, r: int) -> float:
    return float(p) ** (-(r - 1) / 2)


@dataclass(frozen=True)
class KloostermanTable:
    """values[n-1] = K_{r,p}(n) for n = 1..p-1, normalization included."""

    p: int
    r: int
    values: np.ndarray
    method_tag: str

    def __post_init__(self) -> None:
        if len(self.values) != self.p - 1:
            raise ValueError(
                f"table for p={self.p} must have {self.p - 1} values, "
                f"got {len(self.values)}"
            )
        self.values.flags.writeable = False

    def value(self, n: int) -> complex:
        n = int(n) % self.p
        if n == 0:
            raise DomainError("K_{r,p}(0) is undefined; n must be nonzero mod p")
        return complex(self.values[n - 1])

    def character_sum(self) -> complex:
        """sum_n K_{r,p}(n); analytically (-1)^r * p^{-(r-1)/2}."""
        return complex(self.values.sum())


def naive_single(fld: PrimeField, r: int, n: int, budget: int | None = None) -> complex:
    """K_{r,p}(n) by full enumeration of the defining sum."""
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    n = int(n) % fld.p
    if n == 0:
        raise DomainError("K_{r,p}(0) is undefined; n must be nonzero mod p")
    check_budget(fld.p ** (r - 1), budget, f"naive K sum at p={fld.p}, r={r}")
    raw = kernels.naive_sum(fld.p, r, n, fld.char_table, fld.inv_table)
    return raw * _normalization(fld.p, r)


def convolution_table(
    fld: PrimeField, r: int, budget: int | None = None
) -> KloostermanTable:
    """Full table by r-1 direct multiplicative convolutions of e_p."""
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    check_budget(fld.p * fld.p * r, budget, f"convolution table at p={fld.p}, r={r}")
    char_nz = np.ascontiguousarray(fld.char_table[1:])
    values = char_nz.copy()
    for _ in range(r - 1):
        values = kernels.convolution_pass(fld.p, char_nz, values, fld.inv_table)
    values = values * _normalization(fld.p, r)
    return KloostermanTable(fld.p, r, values, "convolution")


def gauss_sums(fld: PrimeField) -> np.ndarray:
    """tau(chi_j) for all p-1 multiplicative characters, chi_j(g^k) = w^(jk).

    One length-(p-1) transform of the sequence e_p(g^k).  Reusable across
    different r for the same field.
    """
    seq = fld.char_table[fld.exp_table]
    tau = dft(seq)
    tau.flags.writeable = False
    return tau


def spectral_from_gauss(fld: PrimeField, tau: np.ndarray, r: int) -> KloostermanTable:
    """Recover the K table from precomputed Gauss sums (one inverse DFT)."""
    if r < 1:
        raise DomainError(f"dimension r must be >= 1, got {r}")
    by_log = idft(tau**r)
    values = np.empty(fld.p - 1, dtype=np.complex128)
    values[fld.exp_table - 1] = by_log
    values *= _normalization(fld.p, r)
    return KloostermanTable(fld.p, r, values, "spectral")


def spectral_table(fld: PrimeField, r: int) -> KloostermanTable:
    """Full table via Gauss-sum powers; the O(p log p) production route."""
    return spectral_from_gauss(fld, gauss_sums(fld), r)


def naive_table(fld: PrimeField, r: int, budget: int | None = None) -> KloostermanTable:
    """Full table by per-entry enumeration; only viable at tiny p^r."""
    check_budget(
        (fld.p - 1) * fld.p ** (r - 1), budget, f"naive table at p={fld.p}, r={r}"
    )
    values = np.array(
        [naive_single(fld, r, n, budget=budget) for n in range(1, fld.p)],
        dtype=np.complex128,
    )
    return KloostermanTable(fld.p, r, values, "naive")


def deligne_excess(table: KloostermanTable) -> float:
    """max(0, max_n |K_{r,p}(n)| - r).

    |K_{r,p}(n)| <= r is a theorem; any excess beyond float noise flags a
    computation bug.
    """
    peak = float(np.abs(table.values).max())
    return max(0.0, peak - table.r)


def write_csv(table: KloostermanTable, path) -> None:
    """Table export: one 'n,re,im' row per n, ascending, 17 digit floats."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "re", "im"])
        for i, v in enumerate(table.values):
            writer.writerow([i + 1, f"{v.real:.17g}", f"{v.imag:.17g}"])
