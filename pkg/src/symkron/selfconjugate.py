"""Self-conjugate partitions of prescribed weight, sign and bounded length.

For ``a <= 14`` the answers are tabulated. For ``a >= 100`` two explicit shapes
are built from ``b = floor(sqrt a)`` and ``r = a - b^2 = 2 r1 + c1``; they differ
by one box above the diagonal, so one has each sign. The range ``15 <= a <= 99``,
and any formula output that fails validation, goes to an exhaustive search.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from math import isqrt
from typing import Iterator

from .partitions import (
    Partition,
    add,
    column,
    durfee,
    format_partition,
    from_diagonal_hooks,
    is_self_conjugate,
    rectangle,
    sign_self_conjugate,
    weight,
)

log = logging.getLogger(__name__)

X_S = frozenset({2, 3, 4, 7, 8, 12})
X_A = frozenset({1, 2, 5, 6, 10, 14})

# sign +1 witnesses for a not in X_s, sign -1 witnesses for a not in X_a
_PLUS = {
    1: (1,),
    5: (3, 1, 1),
    6: (3, 2, 1),
    9: (5, 1, 1, 1, 1),
    10: (5, 2, 1, 1, 1),
    11: (4, 3, 3, 1),
    13: (7, 1, 1, 1, 1, 1, 1),
    14: (7, 2, 1, 1, 1, 1, 1),
}
_MINUS = {
    3: (2, 1),
    4: (2, 2),
    7: (4, 1, 1, 1),
    8: (4, 2, 1, 1),
    9: (3, 3, 3),
    11: (6, 1, 1, 1, 1, 1),
    12: (6, 2, 1, 1, 1, 1),
    13: (5, 3, 3, 1, 1),
}

METHODS = ("base-table", "even-case", "odd-case", "exhaustive-fallback")


class ExceptionalPairError(ValueError):
    """No self-conjugate partition of this weight has the requested sign."""


@dataclass(frozen=True)
class ConstructionResult:
    partition: Partition
    target_sign: int
    method: str
    length_bound_used: int

    def validate(self) -> dict[str, bool]:
        lam = self.partition
        sc = is_self_conjugate(lam)
        return {
            "self_conjugate": sc,
            "sign": sc and sign_self_conjugate(lam) == self.target_sign,
            "length": len(lam) <= self.length_bound_used,
        }

    def as_dict(self) -> dict:
        d = asdict(self)
        d["partition"] = format_partition(self.partition)
        d["weight"] = weight(self.partition)
        d["validation"] = self.validate()
        return d


def length_bound(a: int) -> int:
    return max(isqrt(a) + 2, 12)


def base_table(a: int, sign: int) -> Partition | None:
    if not 1 <= a <= 14:
        raise ValueError(f"base table covers 1 <= a <= 14, got {a}")
    table = _PLUS if sign == 1 else _MINUS
    return table.get(a)


def _canonical(parts: list[int]) -> Partition | None:
    if any(p < 0 for p in parts):
        return None
    return tuple(sorted((p for p in parts if p > 0), reverse=True))


def even_case(a: int) -> tuple[Partition | None, Partition | None]:
    """The ``c1 = 0`` pair: ``alpha`` with ``(a-b)/2`` boxes above the diagonal, ``beta`` with one more."""
    b = isqrt(a)
    r1 = (a - b * b) // 2
    alpha = _canonical(list(add(rectangle(b, b), column(r1))) + [r1])
    if r1 <= b - 2:
        top = add(add(rectangle(b - 2, b), column(r1)), column(2))
        beta = _canonical(list(top) + [b - 2, b - 2, r1, 2])
    else:
        e = r1 - b + 4
        beta = _canonical(list(add(rectangle(b - 2, b + 1), column(e))) + [b - 2] * 3 + [e])
    return alpha, beta


def odd_case(a: int) -> tuple[Partition | None, Partition | None]:
    """The ``c1 = 1`` pair with ``d = b - 1``: ``gamma`` then ``delta``."""
    b = isqrt(a)
    r1 = (a - b * b - 1) // 2
    d = b - 1
    gamma = _canonical(list(add(add(rectangle(d, d + 1), column(r1)), column(1))) + [d, r1, 1])
    if r1 <= d - 2:
        top = add(add(rectangle(d - 2, d + 1), column(r1)), column(5))
        delta = _canonical(list(top) + [d - 2] * 3 + [r1, 5])
    else:
        e = r1 - d + 7
        delta = _canonical(list(add(rectangle(d - 2, d + 2), column(e))) + [d - 2] * 4 + [e])
    return gamma, delta


def formula_candidates(a: int) -> tuple[str, tuple[Partition | None, Partition | None]]:
    """Evaluate whichever pair of explicit shapes applies to the parity of ``a - b^2``."""
    b = isqrt(a)
    if (a - b * b) % 2 == 0:
        return "even-case", even_case(a)
    return "odd-case", odd_case(a)


def _valid(lam: Partition | None, a: int, sign: int, bound: int) -> bool:
    return (
        lam is not None
        and weight(lam) == a
        and is_self_conjugate(lam)
        and sign_self_conjugate(lam) == sign
        and len(lam) <= bound
    )


def iter_self_conjugate(a: int, max_length: int) -> Iterator[Partition]:
    """Self-conjugate partitions of ``a`` with at most ``max_length`` parts, largest diagonal hooks first."""
    odd = [h for h in range(2 * max_length - 1, 0, -2) if h <= a]

    def rec(remaining: int, start: int, hooks: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield from_diagonal_hooks(hooks)
            return
        for idx in range(start, len(odd)):
            h = odd[idx]
            if h > remaining:
                continue
            # the remaining odd hooks below h cannot reach `remaining`
            k = len(odd) - idx
            if h * k < remaining:
                break
            hooks.append(h)
            yield from rec(remaining - h, idx + 1, hooks)
            hooks.pop()

    yield from rec(a, 0, [])


def exhaustive(a: int, sign: int, bound: int) -> Partition | None:
    for lam in iter_self_conjugate(a, bound):
        if sign_self_conjugate(lam) == sign:
            return lam
    return None


def construct_self_conjugate(a: int, sign: int) -> ConstructionResult:
    """A self-conjugate ``lam |- a`` with ``sgn(lam) = sign`` and ``len(lam) <= max(floor(sqrt a)+2, 12)``."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    if a < 1:
        raise ValueError(f"a must be positive, got {a}")
    if sign == 1 and a in X_S:
        raise ExceptionalPairError(f"a = {a} is in X_s = {sorted(X_S)}: no self-conjugate partition has sign +1")
    if sign == -1 and a in X_A:
        raise ExceptionalPairError(f"a = {a} is in X_a = {sorted(X_A)}: no self-conjugate partition has sign -1")
    bound = length_bound(a)
    if a <= 14:
        return ConstructionResult(base_table(a, sign), sign, "base-table", bound)
    if a >= 100:
        method, pair = formula_candidates(a)
        for lam in pair:
            if _valid(lam, a, sign, bound):
                return ConstructionResult(lam, sign, method, bound)
        log.warning("%s output for a=%d failed validation; using exhaustive search", method, a)
    lam = exhaustive(a, sign, bound)
    if lam is None:
        raise ExceptionalPairError(f"no self-conjugate partition of {a} with sign {sign:+d} and length <= {bound}")
    return ConstructionResult(lam, sign, "exhaustive-fallback", bound)


def diagonal_witness(a: int, min_durfee: int, max_length: int) -> Partition | None:
    """First self-conjugate ``nu |- a`` with ``durfee(nu) >= min_durfee`` and ``len(nu) <= max_length``."""
    for nu in iter_self_conjugate(a, max_length):
        if durfee(nu) >= min_durfee:
            return nu
    return None
