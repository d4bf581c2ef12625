"""Integer partitions stored as plain tuples of positive parts.

A partition is a nonincreasing tuple of positive integers; the empty tuple is
the unique partition of 0. Everything downstream (characters, coefficients,
certificates) keys caches on these tuples, so they are kept hashable and
canonical: zero parts are never stored.
"""

from __future__ import annotations

import re
from functools import cache
from typing import Iterable, Iterator

Partition = tuple[int, ...]

MAX_PARSE_WEIGHT = 10**6


def make_partition(parts: Iterable[int]) -> Partition:
    """Validate ``parts`` and return the canonical tuple with zeros trimmed."""
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {out}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts must be nonincreasing: {out}")
    return tuple(p for p in out if p > 0)


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def is_self_conjugate(lam: Partition) -> bool:
    return conjugate(lam) == tuple(lam)


def add(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum, padding the shorter partition with zeros."""
    n = max(len(lam), len(mu))
    a = tuple(lam) + (0,) * (n - len(lam))
    b = tuple(mu) + (0,) * (n - len(mu))
    return tuple(x + y for x, y in zip(a, b))


def durfee(lam: Partition) -> int:
    r = 0
    while r < len(lam) and lam[r] >= r + 1:
        r += 1
    return r


def sign_self_conjugate(lam: Partition) -> int:
    """+1 if the number of boxes strictly above the diagonal is even, else -1."""
    if not is_self_conjugate(lam):
        raise ValueError(f"{format_partition(lam)} is not self-conjugate")
    above = (weight(lam) - durfee(lam)) // 2
    return 1 if above % 2 == 0 else -1


def column_multiset(lam: Partition) -> tuple[int, ...]:
    """Column lengths of ``lam`` in nonincreasing order."""
    return conjugate(lam)


def from_columns(columns: Iterable[int]) -> Partition:
    """Reassemble a partition from a multiset of column lengths."""
    return conjugate(tuple(sorted((c for c in columns if c > 0), reverse=True)))


def column(k: int) -> Partition:
    """The single column ``1^k``."""
    return (1,) * k


def rectangle(rows: int, cols: int) -> Partition:
    """``rows x cols``: ``rows`` parts each equal to ``cols``."""
    if rows <= 0 or cols <= 0:
        return ()
    return (cols,) * rows


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order on partitions of the same weight."""
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True


def enumerate_partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Yield partitions of ``n`` in reverse-lexicographic order.

    ``max_parts`` bounds the length, ``max_part`` bounds the largest part;
    ``None`` means unbounded. The order is fixed so reports are byte-stable:
    (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
    """
    if n < 0:
        return
    parts_cap = n if max_parts is None else max_parts
    size_cap = n if max_part is None else max_part

    def rec(remaining: int, cap: int, slots: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield tuple(prefix)
            return
        if slots == 0:
            return
        for p in range(min(cap, remaining), 0, -1):
            if p * slots < remaining:
                break
            prefix.append(p)
            yield from rec(remaining - p, p, slots - 1, prefix)
            prefix.pop()

    yield from rec(n, size_cap, parts_cap, [])


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    return tuple(enumerate_partitions(n))


def count_partitions_in_box(b: int, rows: int, cols: int) -> int:
    """Number of partitions of ``b`` fitting inside a ``rows x cols`` rectangle."""
    if b < 0:
        return 0
    return _box_count(b, rows, cols)


@cache
def _box_count(b: int, rows: int, cols: int) -> int:
    # p_b(rows, cols) = p_b(rows-1, cols) + p_{b-rows}(rows, cols-1)  (first column full or not)
    if b == 0:
        return 1
    if rows <= 0 or cols <= 0 or b > rows * cols:
        return 0
    return _box_count(b, rows - 1, cols) + _box_count(b - rows, rows, cols - 1)


def self_conjugate_partitions(n: int, max_length: int | None = None) -> list[Partition]:
    """All self-conjugate partitions of ``n`` (optionally of bounded length), reverse-lex order.

    Built from diagonal hooks: distinct odd hook lengths ``h_1 > h_2 > ...`` summing to ``n``.
    """
    cap = n if max_length is None else max_length
    # first hook is 2*lam_1 - 1 and lam_1 = length for self-conjugate shapes
    odd = [h for h in range(1, 2 * cap, 2) if h <= n]
    found: list[Partition] = []

    def rec(remaining: int, idx: int, hooks: list[int]) -> None:
        if remaining == 0:
            found.append(from_diagonal_hooks(hooks))
            return
        for j in range(idx, -1, -1):
            h = odd[j]
            if h > remaining:
                continue
            hooks.append(h)
            rec(remaining - h, j - 1, hooks)
            hooks.pop()

    rec(n, len(odd) - 1, [])
    found = [p for p in found if len(p) <= cap]
    found.sort(reverse=True)
    return found


def from_diagonal_hooks(hooks: list[int]) -> Partition:
    """Self-conjugate partition with the given strictly decreasing odd diagonal hook lengths."""
    # row i (0-based, i < d) has arm (h_i - 1)/2 to the right of the diagonal box
    d = len(hooks)
    top = [i + 1 + (h - 1) // 2 for i, h in enumerate(hooks)]
    if any(top[i] < top[i + 1] for i in range(d - 1)):
        raise AssertionError("hook lengths must decrease")
    rows = list(top)
    # rows below the Durfee square mirror the columns to the right of it
    below = conjugate(tuple(t - d for t in top if t > d))
    rows.extend(below)
    return tuple(rows)


_TOKEN = re.compile(r"^(\d+)(?:\^(\d+))?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4,4"``, ``"1^8"`` or ``"7,2,1^5"``; ``"()"`` or ``""`` is empty."""
    s = text.strip().replace(" ", "")
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if s in ("", "0"):
        return ()
    parts: list[int] = []
    for tok in s.split(","):
        m = _TOKEN.match(tok)
        if m is None:
            raise ValueError(f"bad partition token {tok!r} in {text!r}")
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        if value > MAX_PARSE_WEIGHT or reps > MAX_PARSE_WEIGHT:
            raise ValueError(f"partition {text!r} exceeds the weight limit {MAX_PARSE_WEIGHT}")
        parts.extend([value] * reps)
        if sum(parts) > MAX_PARSE_WEIGHT:
            raise ValueError(f"partition {text!r} exceeds the weight limit {MAX_PARSE_WEIGHT}")
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    """Comma list; runs of four or more equal parts are written ``p^k``."""
    if not lam:
        return "()"
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        if run >= 4:
            out.append(f"{lam[i]}^{run}")
        else:
            out.extend(str(lam[i]) for _ in range(run))
        i = j
    return ",".join(out)
