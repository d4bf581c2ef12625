import random
from fractions import Fraction

import pytest
import sympy

from symkron.partitions import enumerate_partitions
from symkron.stabilizer import (
    DerivationOperator,
    DimensionMismatch,
    ExactPolynomial,
    PolynomialCapError,
    ad_report,
    annihilator_dimension,
    apply_operator,
    build_pow,
    invariant_dimension,
    matrix_power_trace,
    perturbed_pow,
    symmetry_check,
    var,
)


def _to_sympy(f, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod(x**k for x, k in zip(xs, e)) for e, c in f.terms)


def _symbols(n):
    return sympy.symbols(f"x0:{n * n}")


def test_pow_2_2():
    f = build_pow(2, 2)
    xs = _symbols(2)
    a, b, c, d = xs
    assert sympy.expand(_to_sympy(f, xs) - (a**2 + 2 * b * c + d**2)) == 0


def test_pow_n1_and_identity():
    for m in range(1, 6):
        assert build_pow(1, m).terms == (((m,), Fraction(1)),)
    ident = [[int(i == j) for j in range(3)] for i in range(3)]
    assert build_pow(3, 3).evaluate(ident) == 3


@pytest.mark.parametrize("n, m", [(2, 3), (3, 3), (3, 4), (4, 3)])
def test_evaluation_matches_matrix_power(n, m):
    rng = random.Random(7 * n + m)
    f = build_pow(n, m)
    for _ in range(20):
        X = [[Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(n)]
        assert f.evaluate(X) == matrix_power_trace(X, m)


@pytest.mark.parametrize("n, m", [(2, 2), (2, 3), (3, 2)])
def test_apply_operator_matches_differentiation(n, m):
    xs = _symbols(n)
    f = build_pow(n, m)
    F = _to_sympy(f, xs)
    for i, j, k, l in [(0, 0, 0, 0), (0, 1, 1, 0), (1, 0, 0, 1), (1, 1, 0, 1)]:
        L = DerivationOperator.basis(n, i, j, k, l)
        want = sympy.expand(xs[var(n, k, l)] * sympy.diff(F, xs[var(n, j, i)]))
        assert sympy.expand(_to_sympy(apply_operator(L, f), xs) - want) == 0


def test_operator_on_zero_and_bounds():
    zero = ExactPolynomial(2, ())
    assert apply_operator(DerivationOperator.basis(2, 0, 1, 1, 0), zero).is_zero()
    with pytest.raises(DimensionMismatch):
        DerivationOperator.basis(2, 0, 2, 0, 0)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("m", range(1, 6))
def test_ad_kills_pow(n, m):
    if n**m > 2000:
        pytest.skip("term count")
    pw = build_pow(n, m)
    for k in range(n):
        for j in range(n):
            assert apply_operator(DerivationOperator.ad(n, k, j), pw).is_zero()


def _sympy_annihilator(n, m):
    f = build_pow(n, m)
    images = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    images.append(apply_operator(DerivationOperator.basis(n, i, j, k, l), f).as_dict())
    monos = sorted({e for img in images for e in img})
    M = sympy.Matrix([[img.get(e, 0) for img in images] for e in monos])
    return n**4 - M.rank()


@pytest.mark.parametrize("n, m", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_annihilator_matches_dense_rank(n, m):
    assert annihilator_dimension(n, m) == _sympy_annihilator(n, m)


@pytest.mark.parametrize("n, m", [(3, 3), (3, 4), (4, 3), (3, 5)])
def test_annihilator_is_pgl(n, m):
    assert annihilator_dimension(n, m) == n * n - 1
    assert ad_report(n, m) == {"ad_rank": n * n - 1, "all_kill_pow": True}


@pytest.mark.parametrize("n, m", [(3, 3), (3, 4), (4, 3), (3, 5), (4, 4)])
def test_invariants_count_partitions(n, m):
    dim = invariant_dimension(n, m)
    assert dim == sum(1 for _ in enumerate_partitions(m, n))
    assert dim > 1


def test_invariant_examples():
    assert invariant_dimension(3, 3) == 3
    assert invariant_dimension(3, 4) == 4
    assert invariant_dimension(4, 4) == 5


@pytest.mark.parametrize("n, m", [(3, 3), (2, 2)])
def test_symmetries_hold(n, m):
    rep = symmetry_check(n, m, trials=3, seed=1)
    assert rep["mismatches"] == []


def test_symmetry_negative_control():
    rep = symmetry_check(3, 3, trials=1, poly=perturbed_pow(3, 3))
    assert not rep["transpose"]
    assert "transposition" in rep["mismatches"]


def test_cap():
    with pytest.raises(PolynomialCapError):
        annihilator_dimension(6, 6)
