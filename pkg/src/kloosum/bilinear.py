"""Bilinear sums of Kloosterman values and their explicit bounds.

Evaluates S = sum_{m in M} sum_{n in N} alpha_m beta_n K_{r,p}(m n) for an
arbitrary set M and a set or interval N, together with:

  * the trivial bound r * ||beta||_2 * M * sqrt(N),
  * the five-term saving factor Delta of the interval bound (valid for
    p > N >= p^{3/(2 ell)}), reported but never asserted because the
    underlying statement carries an unspecified p^{o(1)} factor,
  * the four range conditions under which the saving is a power of p.

Range arithmetic runs in log space so the checks stay overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .errors import (
    ConstantPolynomial,
    DomainError,
    IndexMismatch,
    PreconditionFailed,
    ValidationError,
)
from .kloosterman import KloostermanTable

_LOG_SLACK = 1e-12

# Multiplicative grace on the interval-length hypothesis N >= p^{3/(2 ell)}:
# integer lengths sit just under the real threshold (e.g. 1000 vs 1000.52),
# and rejecting those would rule out exactly the instances the bound is for.
_LENGTH_GRACE = math.log(1.01)


@dataclass(frozen=True)
class SampleSet:
    """Strictly increasing residues in 1..p-1."""

    p: int
    elements: np.ndarray

    def __post_init__(self) -> None:
        el = np.asarray(self.elements, dtype=np.int64)
        if el.ndim != 1 or len(el) == 0:
            raise ValidationError("sample set needs at least one element")
        if np.any(el < 1) or np.any(el > self.p - 1):
            raise ValidationError("sample set elements must lie in 1..p-1")
        if np.any(np.diff(el) <= 0):
            raise ValidationError("sample set elements must be strictly increasing")
        el.flags.writeable = False
        object.__setattr__(self, "elements", el)

    @property
    def cardinality(self) -> int:
        return len(self.elements)

    @classmethod
    def from_values(cls, p: int, values) -> "SampleSet":
        el = np.unique(np.asarray(list(values), dtype=np.int64) % p)
        return cls(p, el)

    @classmethod
    def random(cls, p: int, size: int, seed: int) -> "SampleSet":
        if size > p - 1:
            raise ValidationError(f"cannot draw {size} distinct residues mod {p}")
        rng = np.random.default_rng(seed)
        el = rng.choice(p - 1, size=size, replace=False) + 1
        return cls(p, np.sort(el.astype(np.int64)))

    @classmethod
    def poly_image(cls, p: int, coeffs, count: int) -> "SampleSet":
        """Distinct nonzero values f(1), ..., f(count) mod p."""
        vals = poly_values(p, coeffs, count)
        el = np.unique(vals[vals != 0])
        if len(el) == 0:
            raise ValidationError("polynomial image contains no nonzero residues")
        return cls(p, el)


@dataclass(frozen=True)
class IntervalSpec:
    """The block {B+1, ..., B+N} of consecutive integers inside 1..p-1."""

    p: int
    offset: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValidationError("interval length must be >= 1")
        if self.offset < 0 or self.offset + self.length > self.p - 1:
            raise ValidationError(
                f"interval {self.offset + 1}..{self.offset + self.length} must "
                f"stay inside 1..{self.p - 1} (no wraparound)"
            )

    @property
    def cardinality(self) -> int:
        return self.length

    @property
    def elements(self) -> np.ndarray:
        return np.arange(self.offset + 1, self.offset + self.length + 1, dtype=np.int64)


class WeightVector:
    """Complex weights with cached sup and l2 norms.

    `indices`, when given, pins the weights to specific residues; evaluators
    then refuse index sets that do not match.  Positional vectors (indices
    None) only need the right length.
    """

    def __init__(self, weights, indices=None) -> None:
        w = np.asarray(weights, dtype=np.complex128)
        if w.ndim != 1:
            raise ValidationError("weights must be one-dimensional")
        w.flags.writeable = False
        self.weights = w
        if indices is not None:
            indices = np.asarray(indices, dtype=np.int64)
            if indices.shape != w.shape:
                raise IndexMismatch("weight/index length mismatch")
            indices.flags.writeable = False
        self.indices = indices
        absw = np.abs(w)
        self.norm_inf = float(absw.max()) if len(w) else 0.0
        self.norm2 = float(np.sqrt((absw * absw).sum()))

    def __len__(self) -> int:
        return len(self.weights)

    def norm(self, sigma: float) -> float:
        """(sum |w|^sigma)^(1/sigma) for sigma > 0."""
        if sigma <= 0:
            raise ValidationError("norm exponent must be positive")
        return float((np.abs(self.weights) ** sigma).sum() ** (1.0 / sigma))

    def conj(self) -> "WeightVector":
        return WeightVector(self.weights.conj(), self.indices)


def make_weights(kind: str, size: int, seed: int) -> WeightVector:
    """Seeded weight generators; every kind satisfies ||.||_inf <= 1.

    ones       all entries 1
    unimodular exp(2*pi*i*theta), theta uniform
    bounded    rho * exp(2*pi*i*theta), rho then theta uniform in [0,1)
    """
    if size < 0:
        raise ValidationError("size must be >= 0")
    if kind == "ones":
        return WeightVector(np.ones(size, dtype=np.complex128))
    rng = np.random.default_rng(seed)
    if kind == "unimodular":
        theta = rng.random(size)
        return WeightVector(np.exp(2j * np.pi * theta))
    if kind == "bounded":
        rho = rng.random(size)
        theta = rng.random(size)
        return WeightVector(rho * np.exp(2j * np.pi * theta))
    raise ValidationError(f"unknown weight kind {kind!r}")


def _check_alignment(wv: WeightVector, members, what: str) -> None:
    el = members.elements
    if len(wv) != len(el):
        raise IndexMismatch(
            f"{what} has {len(wv)} weights for {len(el)} indices"
        )
    if wv.indices is not None and not np.array_equal(wv.indices, el):
        raise IndexMismatch(f"{what} index set does not match the summation set")


def type2_sum(
    table: KloostermanTable,
    m_set: SampleSet,
    n_set: SampleSet | IntervalSpec,
    alpha: WeightVector,
    beta: WeightVector,
) -> complex:
    """S = sum_m sum_n alpha_m beta_n K(m n mod p).

    One-sided sums are the special case beta = ones.  Products m*n never
    vanish mod p because both factors are units.
    """
    if table.p != m_set.p or table.p != n_set.p:
        raise DomainError("table and sets must share the same prime")
    _check_alignment(alpha, m_set, "alpha")
    _check_alignment(beta, n_set, "beta")
    return kernels.bilinear_sum(
        table.p,
        table.values,
        m_set.elements,
        np.ascontiguousarray(n_set.elements),
        alpha.weights,
        beta.weights,
    )


def poly_values(p: int, coeffs, count: int) -> np.ndarray:
    """f(1..count) mod p by Horner; coeffs ascending, reduced mod p.

    Raises ConstantPolynomial when the reduced degree is < 1.
    """
    c = [int(x) % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    if len(c) < 2:
        raise ConstantPolynomial(
            "polynomial twist needs degree >= 1 after reduction mod p"
        )
    ms = np.arange(1, count + 1, dtype=np.int64) % p
    vals = np.full(count, c[-1], dtype=np.int64)
    for coef in reversed(c[:-1]):
        vals = (vals * ms + coef) % p
    return vals


def polynomial_twist_sum(
    table: KloostermanTable,
    coeffs,
    m_count: int,
    n_set: SampleSet | IntervalSpec,
    alpha: WeightVector,
    beta: WeightVector,
) -> complex:
    """sum_{m=1}^{M} sum_n alpha_m beta_n K(f(m) n mod p).

    Every f(m) must be a unit; offending m are listed in the DomainError.
    """
    vals = poly_values(table.p, coeffs, m_count)
    zeros = np.nonzero(vals == 0)[0] + 1
    if len(zeros):
        raise DomainError(
            "polynomial vanishes mod p at m = " + ", ".join(map(str, zeros))
        )
    if len(alpha) != m_count:
        raise IndexMismatch(f"alpha has {len(alpha)} weights for m = 1..{m_count}")
    _check_alignment(beta, n_set, "beta")
    return kernels.bilinear_sum(
        table.p,
        table.values,
        vals,
        np.ascontiguousarray(n_set.elements),
        alpha.weights,
        beta.weights,
    )


def trivial_bound(
    r: int, beta: WeightVector, m_card: int, n_card: int, paper_display: bool = False
) -> float:
    """r * ||beta||_2 * M * sqrt(N); |S| never exceeds it when |alpha| <= 1.

    paper_display drops the r factor (the display that absorbs r into the
    implied constant), for report parity only.
    """
    factor = 1.0 if paper_display else float(r)
    return factor * beta.norm2 * m_card * math.sqrt(n_card)


@dataclass(frozen=True)
class BoundBreakdown:
    """The five saving terms, their sum Delta, and derived bound values."""

    p: int
    m_card: int
    n_len: int
    ell: int
    terms: tuple[float, float, float, float, float]
    delta: float
    theorem_bound: float | None = None
    trivial_bound: float | None = None
    measured_abs_s: float | None = field(default=None, compare=False)


def theorem_delta(
    m_card: int,
    n_len: int,
    p: int,
    ell: int,
    beta_norm2: float | None = None,
    r: int | None = None,
) -> BoundBreakdown:
    """Five-term saving factor for an interval of length p > N >= p^{3/(2 ell)}.

    Exponent arithmetic in log space; each term is exp of a linear form in
    (log M, log N, log p).  theorem_bound = ||beta||_2 * M * sqrt(N) * Delta
    when the beta norm is supplied.
    """
    if ell < 2:
        raise PreconditionFailed(f"ell must be >= 2, got {ell}")
    if m_card < 1:
        raise PreconditionFailed(f"set cardinality must be >= 1, got {m_card}")
    lm, ln, lp = math.log(m_card), math.log(n_len), math.log(p)
    lo = (3.0 / (2 * ell)) * lp
    if ln < lo - _LENGTH_GRACE - _LOG_SLACK:
        raise PreconditionFailed(
            f"interval too short: N = {n_len} < p^(3/(2*ell)) = {math.exp(lo):.6g}"
        )
    if ln >= lp - _LOG_SLACK:
        raise PreconditionFailed(f"interval too long: N = {n_len} >= p = {p}")
    le = float(ell)
    terms = (
        math.exp(-0.5 * lm),
        math.exp(-lm / (4 * le) - ln / (4 * le) + lp / (8 * le)),
        math.exp(
            -5 * lm / (16 * le) - ln / (2 * le) + lp * (5 / (16 * le) + 3 / (8 * le**2))
        ),
        math.exp(
            -lm / (2 * le) - ln / (2 * le) + lp * (3 / (8 * le) + 3 / (8 * le**2))
        ),
        math.exp(
            -lm / (4 * le) - 3 * ln / (4 * le) + lp * (3 / (8 * le) + 3 / (4 * le**2))
        ),
    )
    delta = math.fsum(terms)
    theorem_value = None
    trivial_value = None
    if beta_norm2 is not None:
        theorem_value = beta_norm2 * m_card * math.sqrt(n_len) * delta
        if r is not None:
            trivial_value = r * beta_norm2 * m_card * math.sqrt(n_len)
    return BoundBreakdown(
        p=p,
        m_card=m_card,
        n_len=n_len,
        ell=ell,
        terms=terms,
        delta=delta,
        theorem_bound=theorem_value,
        trivial_bound=trivial_value,
    )


@dataclass(frozen=True)
class RangeCondition:
    name: str
    lhs_log: float
    rhs_log: float
    holds: bool


@dataclass(frozen=True)
class CorollaryReport:
    p: int
    m_card: int
    n_len: int
    eps: float
    conditions: tuple[RangeCondition, ...]
    passed: bool

    def condition(self, name: str) -> RangeCondition:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)


def corollary_check(m_card: int, n_len: int, p: int, eps: float) -> CorollaryReport:
    """The four range conditions for a power-saving bound, in log space.

    No decay exponent is computed (none is explicit); the CLI reports the
    empirical decay ratio |S|/(MN) instead.
    """
    if eps <= 0:
        raise PreconditionFailed(f"eps must be positive, got {eps}")
    lm, ln, lp = math.log(m_card), math.log(n_len), math.log(p)
    raw = (
        ("min_size", min(lm, ln), eps * lp),
        ("M5N8", 5 * lm + 8 * ln, (5 + eps) * lp),
        ("MN", lm + ln, (0.75 + eps) * lp),
        ("M2N6", 2 * lm + 6 * ln, (3 + eps) * lp),
    )
    conds = tuple(
        RangeCondition(name, lhs, rhs, lhs >= rhs - _LOG_SLACK)
        for name, lhs, rhs in raw
    )
    return CorollaryReport(
        p=p,
        m_card=m_card,
        n_len=n_len,
        eps=eps,
        conditions=conds,
        passed=all(c.holds for c in conds),
    )
