"""Exact finite quantities from the Cauchy/Hoelder decomposition of |S|^2.

For a set M, interval N, weights alpha, and dyadic parameters A, B, these
are the desk-scale diagnostics: the Cauchy split S2 = diagonal + sigma, the
triple-indexed multiplicities nu(s, t, u) with their first and second
moments R1, R2, the 2*ell-power block correlation sum over shifted
arguments, and the standard parameter choices.  Everything is an exact
integer count or a compensated float; no implied constants enter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bilinear import IntervalSpec, SampleSet, WeightVector, type2_sum
from .budget import check_budget
from .errors import PreconditionFailed, ValidationError
from .field import PrimeField, inv
from .kloosterman import KloostermanTable


@dataclass(frozen=True)
class SigmaDecomposition:
    """Pieces of |S|^2 <= ||beta||_2^2 * S2, S2 = diagonal + sigma."""

    s2: float
    diagonal: float
    sigma: float
    sigma_direct: complex
    abs_s_sq: float
    cauchy_rhs: float


def sigma_decomposition(
    table: KloostermanTable,
    m_set: SampleSet,
    n_set: SampleSet | IntervalSpec,
    alpha: WeightVector,
    beta: WeightVector,
) -> SigmaDecomposition:
    """Evaluate the Cauchy decomposition exactly.

    sigma is reported both as S2 - diagonal and directly from its defining
    double sum over m1 != m2 (the two must agree to rounding).
    """
    p = table.p
    m_el = m_set.elements
    n_el = n_set.elements
    if len(alpha) != len(m_el) or len(beta) != len(n_el):
        raise ValidationError("weights must match the sets they are indexed by")
    # G[i, j] = K(m_i n_j)
    G = table.values[(m_el[:, None] * n_el[None, :]) % p - 1]
    col = alpha.weights @ G
    s2 = float(math.fsum((col.real * col.real + col.imag * col.imag).tolist()))
    absG2 = G.real * G.real + G.imag * G.imag
    aw2 = np.abs(alpha.weights) ** 2
    diagonal = float(math.fsum((aw2 @ absG2).tolist()))

    cross = G @ G.conj().T  # cross[i1, i2] = sum_n K(m_i1 n) conj(K(m_i2 n))
    pair = np.outer(alpha.weights, alpha.weights.conj()) * cross
    np.fill_diagonal(pair, 0.0)
    flat = pair.ravel()
    sigma_direct = complex(
        math.fsum(flat.real.tolist()), math.fsum(flat.imag.tolist())
    )

    s = type2_sum(table, m_set, n_set, alpha, beta)
    abs_s_sq = s.real * s.real + s.imag * s.imag
    return SigmaDecomposition(
        s2=s2,
        diagonal=diagonal,
        sigma=s2 - diagonal,
        sigma_direct=sigma_direct,
        abs_s_sq=abs_s_sq,
        cauchy_rhs=beta.norm2**2 * s2,
    )


@dataclass(frozen=True)
class NuMoments:
    """Support map of nu(s, t, u) and its moments R1 = sum nu, R2 = sum nu^2."""

    nu: dict[tuple[int, int, int], float]
    r1: float
    r2: float


def nu_r1_r2(
    fld: PrimeField,
    m_set: SampleSet,
    n_set: SampleSet | IntervalSpec,
    a_base: int,
    alpha: WeightVector,
    budget: int | None = None,
) -> NuMoments:
    """Accumulate nu(s, t, u) = sum |alpha_{m1} alpha_{m2}| over the tuples
    (a, m1 != m2, n) with a in {A..2A}, mapped through
    (s, t, u) = (a m1, a m2, n/a) mod p.
    """
    p = fld.p
    if a_base < 1 or 2 * a_base > p - 1:
        raise ValidationError(
            f"a-range {{{a_base}..{2 * a_base}}} must stay inside 1..{p - 1}"
        )
    m_el = [int(v) for v in m_set.elements]
    n_el = [int(v) for v in n_set.elements]
    m_card = len(m_el)
    tuples = (a_base + 1) * m_card * max(m_card - 1, 0) * len(n_el)
    check_budget(tuples, budget, f"nu enumeration at p={p}")
    absw = np.abs(alpha.weights)
    nu: dict[tuple[int, int, int], float] = {}
    for a in range(a_base, 2 * a_base + 1):
        a_inv = inv(fld, a)
        u_of = [(a_inv * n) % p for n in n_el]
        for i1, m1 in enumerate(m_el):
            s = a * m1 % p
            for i2, m2 in enumerate(m_el):
                if i2 == i1:
                    continue
                t = a * m2 % p
                w = float(absw[i1] * absw[i2])
                for u in u_of:
                    key = (s, t, u)
                    nu[key] = nu.get(key, 0.0) + w
    vals = list(nu.values())
    return NuMoments(nu=nu, r1=math.fsum(vals), r2=math.fsum(v * v for v in vals))


@dataclass(frozen=True)
class BlockSumResult:
    """Exact 2*ell-power block sum, its p^3 B^ell shape, and the skip count."""

    value: float
    shape_p3bl: float
    skipped_terms: int


def block_sum_S(
    fld: PrimeField,
    table: KloostermanTable,
    ell: int,
    b_base: int,
    eta: WeightVector,
    budget: int | None = None,
) -> BlockSumResult:
    """S = sum over s != t, u in F_p^x of
    |sum_{b in {B..2B}} eta_b K(s(u+b)) conj(K(t(u+b)))|^(2 ell).

    Inner terms whose shifted argument u + b vanishes mod p are skipped (K
    is undefined at 0); the count of skipped (u, b) slots is reported.  The
    total is an exact correctly-rounded sum of the per-(s, t, u) terms, so
    it is independent of enumeration order.
    """
    p = fld.p
    if ell < 1:
        raise ValidationError(f"ell must be >= 1, got {ell}")
    if b_base < 0:
        raise ValidationError(f"block base must be >= 0, got {b_base}")
    if len(eta) != b_base + 1:
        raise ValidationError(
            f"eta must have {b_base + 1} entries for the block "
            f"{{{b_base}..{2 * b_base}}}, got {len(eta)}"
        )
    L = p - 1
    check_budget(L * L * (L - 1) * (b_base + 1), budget, f"block sum at p={p}")
    terms = kernels.block_terms(p, table.values, ell, b_base, eta.weights)
    skipped = sum(
        1 for u in range(1, p) for b in range(b_base, 2 * b_base + 1) if (u + b) % p == 0
    )
    return BlockSumResult(
        value=math.fsum(terms.tolist()),
        shape_p3bl=float(p) ** 3 * float(b_base) ** ell,
        skipped_terms=skipped,
    )


@dataclass(frozen=True)
class ParameterChoice:
    b_base: int
    a_base: int


def parameter_choices(n_len: int, p: int, ell: int) -> ParameterChoice:
    """B = floor(0.25 p^{3/(2 ell)}), A = floor(0.5 N / B); both must be >= 1,
    and the construction guarantees 2AB <= N."""
    if ell < 2:
        raise PreconditionFailed(f"ell must be >= 2, got {ell}")
    b_base = math.floor(0.25 * float(p) ** (3.0 / (2 * ell)))
    if b_base < 1:
        raise PreconditionFailed(
            f"block length floor(0.25 p^(3/(2*ell))) = 0 at p={p}, ell={ell}"
        )
    a_base = math.floor(0.5 * n_len / b_base)
    if a_base < 1:
        raise PreconditionFailed(
            f"dyadic base floor(0.5 N / B) = 0 for N={n_len}, B={b_base}; "
            "the interval is shorter than p^(3/(2*ell))"
        )
    assert 2 * a_base * b_base <= n_len
    return ParameterChoice(b_base=b_base, a_base=a_base)


def middle_term_absorbed(ell: int) -> bool:
    """ceil((ell-1)/2) >= ell/3, the inequality that lets the middle shape
    term of the block-sum bound be absorbed for every integer ell >= 2."""
    return 3 * (ell // 2) >= ell


@dataclass(frozen=True)
class ProofInstance:
    """A validated bundle of everything the diagnostics consume."""

    fld: PrimeField
    table: KloostermanTable
    m_set: SampleSet
    n_set: IntervalSpec
    alpha: WeightVector
    a_base: int
    b_base: int
    eta: WeightVector
    ell: int

    def __post_init__(self) -> None:
        p = self.fld.p
        if self.table.p != p or self.m_set.p != p or self.n_set.p != p:
            raise ValidationError("field, table and sets must share one prime")
        if len(self.alpha) != self.m_set.cardinality:
            raise ValidationError("alpha must be indexed by the sample set")
        if self.alpha.norm_inf > 1 + 1e-12:
            raise ValidationError("alpha must satisfy ||alpha||_inf <= 1")
        if 2 * self.a_base * self.b_base > self.n_set.length:
            raise ValidationError(
                f"need 2*A*B <= N, got 2*{self.a_base}*{self.b_base} > "
                f"{self.n_set.length}"
            )
        if self.a_base < 1 or 2 * self.a_base > p - 1:
            raise ValidationError("a-range must stay inside 1..p-1")
        if len(self.eta) != self.b_base + 1:
            raise ValidationError("eta must cover the block {B..2B}")
        if np.any(np.abs(np.abs(self.eta.weights) - 1.0) > 1e-12):
            raise ValidationError("eta must be unimodular")
        if self.ell < 1:
            raise ValidationError("ell must be >= 1")
