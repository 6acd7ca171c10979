import cmath
import csv
import itertools
import math

import numpy as np
import pytest

from kloosum.errors import DomainError, Infeasible
from kloosum.field import additive_char
from kloosum.kloosterman import (
    convolution_table,
    deligne_excess,
    naive_single,
    naive_table,
    spectral_table,
    write_csv,
)


def definitional_k(p, r, n):
    """Oracle straight from the definition: every r-tuple, filter on the
    product.  O(p^r); keep p and r tiny."""
    total = 0j
    for xs in itertools.product(range(1, p), repeat=r):
        prod = 1
        for x in xs:
            prod = prod * x % p
        if prod == n % p:
            total += cmath.exp(2j * cmath.pi * (sum(xs) % p) / p)
    return total / p ** ((r - 1) / 2)


# frozen through definitional_k(5, 2, .): 0.17082, -1.44721, 1.17082
SPOT_VALUES = {1: 0.17082, 2: -1.44721, 4: 1.17082}


class TestNaiveSingle:
    def test_r1_is_additive_character(self, fields):
        f7 = fields(7)
        assert naive_single(f7, 1, 3) == pytest.approx(additive_char(f7, 3), abs=1e-12)

    @pytest.mark.parametrize("n,expected", sorted(SPOT_VALUES.items()))
    def test_spot_values_p5_r2(self, n, expected, fields):
        got = naive_single(fields(5), 2, n)
        assert got == pytest.approx(definitional_k(5, 2, n), abs=1e-12)
        assert got.real == pytest.approx(expected, abs=1e-4)
        assert abs(got.imag) < 1e-12

    @pytest.mark.parametrize("p,r", [(5, 2), (7, 2), (7, 3), (11, 3), (5, 4)])
    def test_matches_definition(self, p, r, fields):
        for n in (1, 2, p - 1):
            assert naive_single(fields(p), r, n) == pytest.approx(
                definitional_k(p, r, n), abs=1e-10
            )

    def test_rejects_n_zero(self, fields):
        with pytest.raises(DomainError):
            naive_single(fields(7), 2, 0)
        with pytest.raises(DomainError):
            naive_single(fields(7), 0, 1)

    def test_budget(self, fields):
        with pytest.raises(Infeasible):
            naive_single(fields(101), 4, 1, budget=10_000)


class TestConvolutionTable:
    def test_r1_is_additive_character(self, fields):
        f11 = fields(11)
        table = convolution_table(f11, 1)
        want = np.array([additive_char(f11, n) for n in range(1, 11)])
        assert np.abs(table.values - want).max() < 1e-12

    def test_matches_naive_everywhere_p5_r2(self, fields):
        table = convolution_table(fields(5), 2)
        for n in range(1, 5):
            assert table.value(n) == pytest.approx(
                naive_single(fields(5), 2, n), abs=1e-10
            )

    def test_character_sum_p13_r3(self, fields):
        table = convolution_table(fields(13), 3)
        assert table.character_sum() == pytest.approx(-1 / 13, abs=1e-9)

    def test_budget(self, fields):
        with pytest.raises(Infeasible):
            convolution_table(fields(1009), 3, budget=100_000)


class TestSpectralTable:
    def test_agrees_with_convolution_p5_r2(self, fields, tables):
        conv = convolution_table(fields(5), 2)
        assert np.abs(tables(5, 2).values - conv.values).max() < 1e-10

    def test_character_sum_p13_r3(self, tables):
        assert tables(13, 3).character_sum() == pytest.approx(-1 / 13, abs=1e-8)

    def test_deligne_p101_r2(self, tables):
        assert np.abs(tables(101, 2).values).max() <= 2 + 1e-9

    @pytest.mark.parametrize(
        "p,rs", [(11, (1, 2, 3, 4)), (101, (1, 2, 3)), (199, (2,))]
    )
    def test_oracle_equivalence(self, p, rs, fields, tables):
        fld = fields(p)
        rng = np.random.default_rng(p)
        for r in rs:
            spec = tables(p, r)
            conv = convolution_table(fld, r)
            assert np.abs(spec.values - conv.values).max() < 1e-8
            for n in rng.integers(1, p, size=10):
                kn = naive_single(fld, r, int(n))
                assert abs(spec.value(int(n)) - kn) < 1e-8
                assert abs(conv.value(int(n)) - kn) < 1e-8

    def test_value_accessor_rejects_zero(self, tables):
        with pytest.raises(DomainError):
            tables(11, 2).value(0)


class TestInvariants:
    @pytest.mark.parametrize("p", [11, 101, 199])
    def test_character_sum_identity(self, p, tables):
        for r in (1, 2, 3):
            expected = (-1) ** r * float(p) ** (-(r - 1) / 2)
            assert abs(tables(p, r).character_sum() - expected) < 1e-8

    @pytest.mark.parametrize("p", [101, 199])
    def test_realness_r2(self, p, tables):
        assert np.abs(tables(p, 2).values.imag).max() < 1e-9

    def test_deligne_excess_examples(self, tables):
        assert deligne_excess(tables(101, 2)) <= 1e-9
        assert deligne_excess(tables(199, 3)) <= 1e-9
        assert deligne_excess(tables(101, 1)) <= 1e-12

    def test_deligne_small_sweep(self, fields, tables):
        for p in (3, 5, 7, 11, 13, 101, 199):
            for r in (2, 3, 4):
                assert deligne_excess(tables(p, r)) <= 1e-9


def test_naive_table_matches_convolution(fields):
    fld = fields(7)
    nt = naive_table(fld, 2)
    ct = convolution_table(fld, 2)
    assert np.abs(nt.values - ct.values).max() < 1e-12
    assert nt.method_tag == "naive"


def test_csv_export_round_trip(tmp_path, tables):
    table = tables(11, 2)
    path = tmp_path / "k.csv"
    write_csv(table, path)
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["n", "re", "im"]
    assert len(rows) == 11
    for i, row in enumerate(rows[1:]):
        assert int(row[0]) == i + 1
        got = complex(float(row[1]), float(row[2]))
        assert got == pytest.approx(complex(table.values[i]), abs=1e-15)


def test_methods_are_bit_comparable(fields):
    # identical normalization path: the same scalar multiplies every route
    fld = fields(13)
    for r in (2, 3):
        conv = convolution_table(fld, r)
        spec = spectral_table(fld, r)
        nv = naive_single(fld, r, 5)
        assert abs(conv.value(5) - nv) < 1e-12
        assert abs(spec.value(5) - nv) < 1e-10
