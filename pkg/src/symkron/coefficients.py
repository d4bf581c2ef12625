"""Kronecker, symmetric/antisymmetric Kronecker, sm/am and Kostka coefficients.

Every character sum is carried out over the integers as
``sum_rho |C_rho| * (...)`` and divided by ``D!`` (or ``2 D!``) at the end; a
nonzero remainder means a character is wrong, so it raises instead of rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from math import factorial

from .characters import WeightMismatch, character_row, class_data
from .config import config
from .partitions import (
    Partition,
    column,
    count_partitions_in_box,
    enumerate_partitions,
    is_self_conjugate,
    make_partition,
    rectangle,
    sign_self_conjugate,
    weight,
)


class IntegralityError(ArithmeticError):
    """A character sum that should be a nonnegative integer was not."""


class WeightCapError(ValueError):
    pass


def _check_weight(D: int) -> None:
    if D > config.max_weight:
        raise WeightCapError(
            f"weight {D} exceeds the coefficient cap {config.max_weight} (raise KF_MAX_WEIGHT to override)"
        )


def _exact(total: int, denom: int, what: str) -> int:
    q, r = divmod(total, denom)
    if r or q < 0:
        raise IntegralityError(f"{what}: {total}/{denom} is not a nonnegative integer")
    return q


def _same_weight(*parts: Partition) -> int:
    ws = {weight(p) for p in parts}
    if len(ws) != 1:
        raise WeightMismatch(f"partitions of different weights: {parts}")
    D = ws.pop()
    _check_weight(D)
    return D


def kronecker(lam: Partition, mu: Partition, nu: Partition) -> int:
    """``g(lam, mu, nu) = (1/D!) sum_rho |C_rho| chi_lam chi_mu chi_nu``."""
    D = _same_weight(lam, mu, nu)
    _, sizes, _ = class_data(D)
    a, b, c = character_row(lam), character_row(mu), character_row(nu)
    total = sum(s * x * y * z for s, x, y, z in zip(sizes, a, b, c))
    return _exact(total, factorial(D), f"g{(lam, mu, nu)}")


def _sym_alt_totals(lam: Partition, mu: Partition) -> tuple[int, int, int]:
    D = _same_weight(lam, mu)
    _, sizes, squares = class_data(D)
    a, b = character_row(lam), character_row(mu)
    sym = alt = 0
    for s, x, y, sq in zip(sizes, a, b, squares):
        y2 = b[sq]
        sym += s * x * (y * y + y2)
        alt += s * x * (y * y - y2)
    return sym, alt, 2 * factorial(D)


def sym_kron(lam: Partition, mu: Partition) -> int:
    """``sk(lam, mu)``: multiplicity of ``[lam]`` in ``S^2[mu]``."""
    sym, _, denom = _sym_alt_totals(lam, mu)
    return _exact(sym, denom, f"sk{(lam, mu)}")


def alt_kron(lam: Partition, mu: Partition) -> int:
    """``ak(lam, mu)``: multiplicity of ``[lam]`` in ``Lambda^2[mu]``."""
    _, alt, denom = _sym_alt_totals(lam, mu)
    return _exact(alt, denom, f"ak{(lam, mu)}")


@cache
def _kernel(D: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # per-class sums over mu |- D with l(mu) <= n of chi_mu^2 +/- chi_mu(rho^2)
    classes, _, squares = class_data(D)
    sym = [0] * len(classes)
    alt = [0] * len(classes)
    for mu in enumerate_partitions(D, n):
        row = character_row(mu)
        for i, sq in enumerate(squares):
            y = row[i]
            sym[i] += y * y + row[sq]
            alt[i] += y * y - row[sq]
    return tuple(sym), tuple(alt)


def _bounded_sum(lam: Partition, n: int, which: int) -> int:
    D = weight(lam)
    _check_weight(D)
    _, sizes, _ = class_data(D)
    # every mu |- D has at most D parts, so larger n share one kernel
    kern = _kernel(D, min(n, D))[which]
    a = character_row(lam)
    total = sum(s * x * k for s, x, k in zip(sizes, a, kern))
    return _exact(total, 2 * factorial(D), f"{'sm' if which == 0 else 'am'}{(lam, n)}")


def sm(lam: Partition, n: int) -> int:
    """``sum_{mu |- |lam|, l(mu) <= n} sk(lam, mu)``."""
    if n <= 0:
        raise ValueError("n must be positive")
    return _bounded_sum(tuple(lam), n, 0)


def am(lam: Partition, n: int) -> int:
    """``sum_{mu |- |lam|, l(mu) <= n} ak(lam, mu)``."""
    if n <= 0:
        raise ValueError("n must be positive")
    return _bounded_sum(tuple(lam), n, 1)


def sm_terms(lam: Partition, n: int) -> dict[Partition, int]:
    """The nonzero summands ``sk(lam, mu)`` of ``sm(lam, n)``, keyed by ``mu``."""
    out = {}
    for mu in enumerate_partitions(weight(lam), n):
        v = sym_kron(tuple(lam), mu)
        if v:
            out[mu] = v
    return out


def am_terms(lam: Partition, n: int) -> dict[Partition, int]:
    out = {}
    for mu in enumerate_partitions(weight(lam), n):
        v = alt_kron(tuple(lam), mu)
        if v:
            out[mu] = v
    return out


def sm_positive(lam: Partition, n: int) -> bool:
    """Positivity-only mode: stops at the first ``mu`` with ``sk(lam, mu) > 0``."""
    return any(sym_kron(tuple(lam), mu) > 0 for mu in enumerate_partitions(weight(lam), n))


def am_positive(lam: Partition, n: int) -> bool:
    return any(alt_kron(tuple(lam), mu) > 0 for mu in enumerate_partitions(weight(lam), n))


def sm_by_degree(lam: Partition, n: int, d: int, m: int) -> int:
    """``sm`` computed as a multiplicity in degree ``d`` of the orbit of ``Pow^m_n``.

    Only the product ``d*m = |lam|`` enters, which is what makes the two-argument
    notation ``sm(lam, n)`` well defined.
    """
    if d * m != weight(lam):
        raise WeightMismatch(f"d*m = {d * m} but |lambda| = {weight(lam)}")
    return sum(sym_kron(tuple(lam), mu) for mu in enumerate_partitions(d * m, n))


@cache
def _kostka(shape: Partition, content: tuple[int, ...]) -> int:
    # strip the boxes holding the largest letter: a horizontal strip of size content[-1]
    if not content:
        return 1 if not shape else 0
    k = content[-1]
    rest = content[:-1]
    if weight(shape) != sum(content):
        return 0
    if len(shape) > len(content):
        return 0
    total = 0
    n = len(shape)

    def rec(i: int, removed: int, inner: list[int]) -> None:
        nonlocal total
        if i == n:
            if removed == k:
                total += _kostka(tuple(p for p in inner if p > 0), rest)
            return
        lower = shape[i + 1] if i + 1 < n else 0
        for keep in range(shape[i], lower - 1, -1):
            take = shape[i] - keep
            if removed + take > k:
                break
            inner.append(keep)
            rec(i + 1, removed + take, inner)
            inner.pop()

    rec(0, 0, [])
    return total


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    if weight(lam) != weight(mu):
        raise WeightMismatch(f"|lambda| = {weight(lam)} but |mu| = {weight(mu)}")
    return _kostka(tuple(lam), tuple(mu))


@dataclass(frozen=True)
class SignTheoremRecord:
    partition: Partition
    sk: int
    ak: int
    sign: int
    consistent: bool


def verify_sign_theorem(lam: Partition) -> SignTheoremRecord:
    """Compare ``sk(1^D, lam)``/``ak(1^D, lam)`` against the sign of a self-conjugate ``lam``."""
    if not is_self_conjugate(lam):
        raise ValueError(f"{lam} is not self-conjugate")
    lam = tuple(lam)
    sign = sign_self_conjugate(lam)
    pi = column(weight(lam))
    s, a = sym_kron(pi, lam), alt_kron(pi, lam)
    expected = (1, 0) if sign == 1 else (0, 1)
    return SignTheoremRecord(lam, s, a, sign, (s, a) == expected)


def two_row_comparison(r: int, b: int) -> dict:
    """``g((r^2-b, b), r x r, r x r)`` next to ``p_b(r,r) - p_{b-1}(r,r)``."""
    square = rectangle(r, r)
    two_row = make_partition((r * r - b, b))
    g = kronecker(two_row, square, square)
    diff = count_partitions_in_box(b, r, r) - count_partitions_in_box(b - 1, r, r)
    return {"r": r, "b": b, "kronecker": g, "box_difference": diff, "agree": g == diff}
