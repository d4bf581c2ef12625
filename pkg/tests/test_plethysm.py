from fractions import Fraction
from math import comb

import pytest

from oracles import brute_plethysm
from symkron.characters import class_order_z
from symkron.coefficients import kostka
from symkron.config import config
from symkron.plethysm import (
    PlethysmCapError,
    SymFuncP,
    dimension_oracle,
    plethysm_coefficient,
    plethysm_h_h,
    schur_at_ones,
    schur_expansion,
)
from symkron.partitions import partitions_of, rectangle

PAIRS = [(d, m) for d in range(1, 11) for m in range(1, 11) if d * m <= 10]


def test_small_expansions():
    assert plethysm_h_h(1, 1) == SymFuncP.power_sum((1,))
    for m in range(1, 7):
        assert plethysm_h_h(1, m) == SymFuncP.complete(m)
        assert plethysm_coefficient((m,), 1, m) == 1


def test_two_two():
    assert plethysm_coefficient((4,), 2, 2) == 1
    assert plethysm_coefficient((2, 2), 2, 2) == 1
    assert plethysm_coefficient((3, 1), 2, 2) == 0
    assert plethysm_coefficient((2, 2, 2), 2, 3) == 0


@pytest.mark.parametrize("d, m", [(2, 2), (2, 3), (3, 2), (2, 4), (4, 2), (3, 3)])
def test_matches_weight_peeling(d, m):
    assert schur_expansion(d, m) == brute_plethysm(d, m)


def test_dimension_oracle_examples():
    assert dimension_oracle(2, 2, 2) == (6, 6)
    assert dimension_oracle(2, 3, 2) == (10, 10)
    for m in range(1, 6):
        assert dimension_oracle(1, m, 3) == (comb(m + 2, m),) * 2


@pytest.mark.parametrize("d, m", PAIRS)
def test_dimension_oracle(d, m):
    for k in (1, 2, 3):
        lhs, rhs = dimension_oracle(d, m, k)
        assert lhs == rhs


@pytest.mark.parametrize("d, m", PAIRS)
def test_kostka_upper_bound_and_vanishing(d, m):
    box = rectangle(d, m)
    for lam in partitions_of(d * m):
        a, k = plethysm_coefficient(lam, d, m), kostka(lam, box)
        assert 0 <= a <= k
        if lam[0] < m:
            assert a == 0 and k == 0


@pytest.mark.parametrize("d, m", [(d, m) for d in range(1, 13) for m in range(1, 13) if d * m <= 12])
def test_power_sum_coefficients_positive(d, m):
    f = plethysm_h_h(d, m)
    for rho, c in f.items():
        assert c > 0
        assert (c * class_order_z(rho)).denominator == 1 or class_order_z(rho) % c.denominator == 0


def test_cap(fresh_config):
    with pytest.raises(PlethysmCapError):
        plethysm_h_h(3, 5)
    assert config.plethysm_cap == 14


def test_schur_at_ones():
    assert schur_at_ones((2, 1), 2) == 2
    assert schur_at_ones((1, 1, 1), 2) == 0
    assert schur_at_ones((3,), 3) == 10


def test_symfunc_arithmetic():
    h2 = SymFuncP.complete(2)
    assert h2.coefficient((1, 1)) == Fraction(1, 2)
    assert h2.coefficient((2,)) == Fraction(1, 2)
    assert (h2 * h2).degree == 4
    assert hash(h2 + SymFuncP()) == hash(h2)
    with pytest.raises(ValueError):
        SymFuncP({(2,): 1, (1,): 1})
