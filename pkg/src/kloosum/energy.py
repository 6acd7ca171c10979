"""Mixed multiplicative energy J(H, M).

J(H, M) counts quadruples (x, y, m, n) with x, y in [1, H), m, n in M and
x*m = y*n (mod p).  Counting is exact integer arithmetic by two routes that
must agree:

  fast   tally T(c) = #{(x, m): x m = c} and return sum_c T(c)^2
  brute  pair count over the full product list, cost O(H^2 M^2)

The three-case upper bound and the GRH-form variant are evaluated shape-only
(all p^{o(1)} factors set to 1, never asserted); the diagonal and
Cauchy-Schwarz lower bounds are exact and always assertable.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

import numpy as np

from . import kernels
from .budget import check_budget
from .bilinear import SampleSet
from .errors import ValidationError
from .field import PrimeField

BOUND_NOTE = "shape only; implied constants unknown"

_DENSE_COUNTER_LIMIT = 1 << 26


def count_J(
    fld: PrimeField,
    H: int,
    m_set: SampleSet,
    method: str = "fast",
    budget: int | None = None,
) -> int:
    """Exact number of solutions of x m = y n (mod p), x, y in [1, H)."""
    p = fld.p
    if not 2 <= H <= p:
        raise ValidationError(f"H must satisfy 2 <= H <= p, got H={H}, p={p}")
    if m_set.p != p:
        raise ValidationError("sample set prime does not match the field")
    m_el = m_set.elements
    pairs = (H - 1) * len(m_el)
    if method == "fast":
        check_budget(pairs + p, budget, f"fast energy count at p={p}")
        prods = np.arange(1, H, dtype=np.int64)[:, None] * m_el[None, :] % p
        flat = prods.ravel()
        if p <= _DENSE_COUNTER_LIMIT:
            counts = np.bincount(flat, minlength=p)
        else:
            _, counts = np.unique(flat, return_counts=True)
        return int((counts.astype(np.int64) ** 2).sum())
    if method == "brute":
        check_budget(pairs * pairs, budget, f"brute energy count at p={p}")
        return int(kernels.brute_pair_count(p, H, m_el))
    raise ValidationError(f"unknown counting method {method!r}")


def energy_lower_bounds(H: int, m_card: int, p: int) -> tuple[int, float]:
    """(diagonal, cauchy): (H-1)M from x=y, m=n and ((H-1)M)^2/(p-1)."""
    diagonal = (H - 1) * m_card
    cauchy = diagonal * diagonal / (p - 1)
    return diagonal, cauchy


@dataclass(frozen=True)
class LemmaBound:
    """Shape of the J(H, M) upper bound; carries no implied constants."""

    case: str
    leading: float
    case_term: float
    total: float
    note: str = BOUND_NOTE


def lemma_bound_value(
    H: int, m_card: int, p: int, variant: str = "lemma"
) -> LemmaBound:
    """Three-case bound for J(H, M), or the GRH-form H^2 M^2 / p + H M.

    Case selection uses exact integer comparisons (H >= p^{2/3} iff
    H^3 >= p^2, M >= p^{1/3} iff M^3 >= p).  In the small case the leading
    term never dominates and is omitted.
    """
    if H < 1 or m_card < 1:
        raise ValidationError("H and M must be >= 1")
    leading = H * H * m_card * m_card / p
    if variant == "grh":
        case_term = float(H * m_card)
        return LemmaBound("grh", leading, case_term, leading + case_term)
    if variant != "lemma":
        raise ValidationError(f"unknown variant {variant!r}")
    if H**3 >= p**2:
        case = "H>=p^(2/3)"
        case_term = float(H * m_card)
    elif m_card**3 >= p:
        case = "middle"
        case_term = H * float(m_card) ** 1.75 * float(p) ** -0.25 + m_card * m_card
    else:
        case = "small"
        case_term = float(H * m_card + m_card * m_card)
        return LemmaBound(case, 0.0, case_term, case_term)
    return LemmaBound(case, leading, case_term, leading + case_term)


@dataclass(frozen=True)
class EnergyReport:
    """Measured J next to its bound shape and exact lower bounds."""

    p: int
    H: int
    m_card: int
    J: int
    bound: LemmaBound
    diagonal_lb: int
    cauchy_lb: float
    grh_bound: LemmaBound | None = None


def energy_report(
    fld: PrimeField,
    H: int,
    m_set: SampleSet,
    method: str = "fast",
    include_grh: bool = False,
    budget: int | None = None,
) -> EnergyReport:
    j = count_J(fld, H, m_set, method=method, budget=budget)
    m_card = m_set.cardinality
    diagonal, cauchy = energy_lower_bounds(H, m_card, fld.p)
    return EnergyReport(
        p=fld.p,
        H=H,
        m_card=m_card,
        J=j,
        bound=lemma_bound_value(H, m_card, fld.p),
        diagonal_lb=diagonal,
        cauchy_lb=cauchy,
        grh_bound=lemma_bound_value(H, m_card, fld.p, variant="grh")
        if include_grh
        else None,
    )


CSV_COLUMNS = [
    "p",
    "H",
    "M",
    "J",
    "case",
    "leading",
    "case_term",
    "bound_total",
    "diagonal_lb",
    "cauchy_lb",
]


def write_csv(reports, path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for rep in reports:
            writer.writerow(
                [
                    rep.p,
                    rep.H,
                    rep.m_card,
                    rep.J,
                    rep.bound.case,
                    f"{rep.bound.leading:.17g}",
                    f"{rep.bound.case_term:.17g}",
                    f"{rep.bound.total:.17g}",
                    rep.diagonal_lb,
                    f"{rep.cauchy_lb:.17g}",
                ]
            )
