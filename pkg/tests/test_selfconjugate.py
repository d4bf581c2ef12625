import pytest
from hypothesis import given, strategies as st

from symkron.coefficients import verify_sign_theorem
from symkron.partitions import (
    durfee,
    is_self_conjugate,
    self_conjugate_partitions,
    sign_self_conjugate,
    weight,
)
from symkron.selfconjugate import (
    X_A,
    X_S,
    ExceptionalPairError,
    base_table,
    construct_self_conjugate,
    diagonal_witness,
    even_case,
    exhaustive,
    formula_candidates,
    iter_self_conjugate,
    length_bound,
    odd_case,
)

SIGNS = (1, -1)


def _achievable(a, sign):
    return a not in (X_S if sign == 1 else X_A)


def _check(res, a, sign):
    lam = res.partition
    assert weight(lam) == a
    assert is_self_conjugate(lam)
    assert sign_self_conjugate(lam) == sign
    assert len(lam) <= max(int(a**0.5) + 2, 12)
    assert all(res.validate().values())


@given(st.integers(1, 500), st.sampled_from(SIGNS))
def test_invariants_random(a, sign):
    if not _achievable(a, sign):
        with pytest.raises(ExceptionalPairError):
            construct_self_conjugate(a, sign)
        return
    _check(construct_self_conjugate(a, sign), a, sign)


def test_invariants_all():
    for a in range(1, 501):
        for sign in SIGNS:
            if _achievable(a, sign):
                _check(construct_self_conjugate(a, sign), a, sign)


def test_exceptional_sets_match_enumeration():
    # an exceptional pair has no self-conjugate partition of that sign at all
    for a in range(1, 15):
        signs = {sign_self_conjugate(p) for p in self_conjugate_partitions(a)}
        assert (1 not in signs) == (a in X_S)
        assert (-1 not in signs) == (a in X_A)


def test_table_examples():
    assert construct_self_conjugate(4, -1).partition == (2, 2)
    assert construct_self_conjugate(9, 1).partition == (5, 1, 1, 1, 1)
    assert construct_self_conjugate(4, -1).method == "base-table"
    with pytest.raises(ExceptionalPairError, match="X_s"):
        construct_self_conjugate(2, 1)
    with pytest.raises(ExceptionalPairError, match="X_a"):
        construct_self_conjugate(5, -1)


def test_table_covers_exactly_the_achievable_pairs():
    for a in range(1, 15):
        for sign in SIGNS:
            lam = base_table(a, sign)
            assert (lam is not None) == _achievable(a, sign)
            if lam is not None:
                assert weight(lam) == a and sign_self_conjugate(lam) == sign
    with pytest.raises(ValueError):
        base_table(15, 1)


def test_144_pair():
    alpha, beta = even_case(144)
    assert alpha == (12,) * 12
    assert sign_self_conjugate(alpha) == 1
    assert sign_self_conjugate(beta) == -1
    assert (weight(alpha), weight(beta)) == (144, 144)
    for sign, want in ((1, alpha), (-1, beta)):
        res = construct_self_conjugate(144, sign)
        assert res.method == "even-case" and res.partition == want


def test_101_odd_case():
    method, (gamma, delta) = formula_candidates(101)
    assert method == "odd-case"
    res = construct_self_conjugate(101, -1)
    assert res.method == "odd-case"
    assert res.partition in (gamma, delta)
    _check(res, 101, -1)


def test_15_uses_fallback():
    res = construct_self_conjugate(15, 1)
    assert res.method == "exhaustive-fallback"
    assert len(res.partition) <= 12
    _check(res, 15, 1)


@pytest.mark.parametrize("a", range(100, 501))
def test_formula_pair_differs_by_one_box(a):
    method, pair = formula_candidates(a)
    first, second = pair
    assert first is not None and second is not None
    assert is_self_conjugate(first) and is_self_conjugate(second)
    above = [(weight(p) - durfee(p)) // 2 for p in pair]
    assert above[1] - above[0] == 1
    assert construct_self_conjugate(a, 1).method == method
    assert construct_self_conjugate(a, -1).method == method


def test_odd_case_only_on_odd_remainder():
    assert formula_candidates(121)[0] == "even-case"
    assert odd_case(122)[0] is not None


def test_iter_self_conjugate_matches_filter():
    for a in range(1, 26):
        for bound in (3, 5, 12):
            got = sorted(iter_self_conjugate(a, bound))
            want = sorted(p for p in self_conjugate_partitions(a) if len(p) <= bound)
            assert got == want


def test_exhaustive_and_witness():
    assert exhaustive(2, 1, 12) is None
    nu = diagonal_witness(49, 7, 7)
    assert nu == (7,) * 7
    assert diagonal_witness(50, 7, 7) is None
    assert length_bound(400) == 22


@pytest.mark.parametrize("a", range(1, 17))
def test_sign_theorem_cross_check(a):
    for sign in SIGNS:
        if not _achievable(a, sign):
            continue
        rec = verify_sign_theorem(construct_self_conjugate(a, sign).partition)
        assert rec.consistent
        assert (rec.sk, rec.ak) == ((1, 0) if sign == 1 else (0, 1))


def test_as_dict():
    d = construct_self_conjugate(9, 1).as_dict()
    assert d["partition"] == "5,1^4"
    assert d["weight"] == 9 and d["method"] == "base-table"
