"""Irreducible characters of the symmetric group via Murnaghan-Nakayama.

Rim hooks are removed on the beta-set (abacus) of the shape: a hook of length
``k`` corresponds to sliding one bead from position ``b`` to the free position
``b - k``, with sign ``(-1)^(beads strictly between)``. Cycles are consumed
longest first, and the recursion is memoized on (remaining shape, remaining
cycles). All values are Python ints.
"""

from __future__ import annotations

from collections import Counter
from functools import cache
from math import factorial, prod

from .partitions import Partition, partitions_of, weight


class WeightMismatch(ValueError):
    pass


def class_order_z(mu: Partition) -> int:
    """``z_mu = prod_i i^{m_i} m_i!``, the centralizer order of the class ``mu``."""
    return prod(i**m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Partition) -> int:
    return factorial(weight(mu)) // class_order_z(mu)


def square_cycle_type(mu: Partition) -> Partition:
    """Cycle type of ``sigma^2`` when ``sigma`` has cycle type ``mu``."""
    out: list[int] = []
    for c in mu:
        if c % 2:
            out.append(c)
        else:
            out.extend([c // 2, c // 2])
    return tuple(sorted(out, reverse=True))


def _remove_hook(beta: tuple[int, ...], k: int):
    """Yield (sign, new_beta) for every rim hook of length ``k``."""
    bset = set(beta)
    for b in beta:
        t = b - k
        if t < 0 or t in bset:
            continue
        between = sum(1 for c in beta if t < c < b)
        new = tuple(sorted((c if c != b else t for c in beta), reverse=True))
        yield (-1 if between % 2 else 1), new


def _shape_from_beta(beta: tuple[int, ...]) -> Partition:
    n = len(beta)
    return tuple(p for p in (beta[i] - (n - 1 - i) for i in range(n)) if p > 0)


@cache
def _mn(shape: Partition, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    n = len(shape)
    beta = tuple(shape[i] + (n - 1 - i) for i in range(n))
    total = 0
    for sign, new_beta in _remove_hook(beta, k):
        total += sign * _mn(_shape_from_beta(new_beta), rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Exact value of the irreducible character ``chi_lam`` on the class of cycle type ``mu``."""
    if weight(lam) != weight(mu):
        raise WeightMismatch(f"|lambda| = {weight(lam)} but |mu| = {weight(mu)}")
    return _mn(tuple(lam), tuple(sorted(mu, reverse=True)))


def dimension(lam: Partition) -> int:
    """Hook-length formula."""
    hooks = 1
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(weight(lam)) // hooks


@cache
def class_data(D: int) -> tuple[tuple[Partition, ...], tuple[int, ...], tuple[int, ...]]:
    """Classes of S_D in enumeration order, their sizes, and the index of each square class."""
    classes = partitions_of(D)
    index = {c: i for i, c in enumerate(classes)}
    sizes = tuple(class_size(c) for c in classes)
    squares = tuple(index[square_cycle_type(c)] for c in classes)
    return classes, sizes, squares


@cache
def character_row(lam: Partition) -> tuple[int, ...]:
    """``chi_lam`` on every class of S_|lam|, in :func:`class_data` order."""
    classes, _, _ = class_data(weight(lam))
    return tuple(_mn(lam, c) for c in classes)


def clear_cache() -> None:
    _mn.cache_clear()
    character_row.cache_clear()
    class_data.cache_clear()


def conjugate_sign_check(max_weight: int) -> list[list[str]]:
    """Pairs ``(lam, mu)`` with ``|lam| <= max_weight`` violating ``chi_{lam^t}(mu) = (-1)^{D - l(mu)} chi_lam(mu)``."""
    from .partitions import conjugate, format_partition

    bad = []
    for D in range(1, max_weight + 1):
        classes, _, _ = class_data(D)
        for lam in classes:
            row, trow = character_row(lam), character_row(conjugate(lam))
            for mu, x, y in zip(classes, row, trow):
                if y != (-1) ** (D - len(mu)) * x:
                    bad.append([format_partition(lam), format_partition(mu)])
    return bad
