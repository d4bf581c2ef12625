"""Positivity certificates for ``sm(lam, ell) > 0`` built from column groups.

A certificate splits the columns of ``lam`` into blocks, each carrying a
positivity claim (``sm`` or ``am``) and a justification. Blocks are merged with
the semigroup rules

1. sm + sm -> sm
2. am + am -> sm
3. sm + am -> am

and the final kind must be sm. :func:`verify_certificate` re-checks a
certificate from scratch and never calls :func:`certify`.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import isqrt

from .coefficients import am, sm
from .config import config
from .partitions import (
    Partition,
    column,
    column_multiset,
    durfee,
    enumerate_partitions,
    format_partition,
    from_columns,
    is_self_conjugate,
    make_partition,
    sign_self_conjugate,
    weight,
)
from .selfconjugate import (
    X_A,
    X_S,
    ExceptionalPairError,
    base_table,
    construct_self_conjugate,
    diagonal_witness,
    exhaustive,
)

SM, AM = "sm-positive", "am-positive"
KINDS = (SM, AM)
JUSTIFICATIONS = ("direct-computation", "base-table", "sign-theorem")
CITATIONS = ("columns-table", "small-values", "column-2")

# partitions excluded from the general sm-positivity statement
SM_POSITIVE_EXCEPTIONS = frozenset(
    {column(r) for r in (2, 3, 4, 7, 8, 12)} | {(2, 1, 1), (3, 1, 1), (2,) + (1,) * 7}
)
# partitions excluded from the tabulated sm(lam, 7) > 0 statement
SMALL_VALUES_EXCEPTIONS = frozenset({column(r) for r in X_S} | {(2, 1, 1), (3, 1, 1), (2,) + (1,) * 7})
# zero by direct computation but absent from both lists above (see the decisions ledger)
MEASURED_ZEROS = frozenset({(2, 1, 1, 1)})

SMALL_VALUES_ELL = 7
SMALL_VALUES_MAX_LENGTH = 14
COLUMN_2_MIN_DURFEE = 7

_RULES = {(SM, SM): (1, SM), (AM, AM): (2, SM), (SM, AM): (3, AM), (AM, SM): (3, AM)}


def ceil_sqrt(n: int) -> int:
    return 0 if n <= 0 else isqrt(n - 1) + 1


def proposition_ell(lam: Partition) -> int:
    """``max(ceil(sqrt L) + 2, 12)`` with ``L = len(lam)``."""
    return max(ceil_sqrt(len(lam)) + 2, 12)


def columns_ell(a: int) -> int:
    """``max(floor(sqrt a) + 2, 12)``, the bound used for single columns ``1^a``."""
    return max(isqrt(a) + 2, 12)


@dataclass(frozen=True)
class Block:
    columns: tuple[int, ...]
    kind: str
    justification: str
    citation: str = ""
    witnesses: tuple[Partition, ...] = ()

    @property
    def partition(self) -> Partition:
        return from_columns(self.columns)

    def as_dict(self) -> dict:
        return {
            "partition": format_partition(self.partition),
            "columns": list(self.columns),
            "kind": self.kind,
            "justification": self.justification,
            "citation": self.citation,
            "witnesses": [format_partition(w) for w in self.witnesses],
        }


@dataclass(frozen=True)
class FoldStep:
    rule: int
    left: str
    right: str
    result: str


@dataclass(frozen=True)
class Certificate:
    target: Partition
    ell: int
    blocks: tuple[Block, ...]
    steps: tuple[FoldStep, ...]

    def as_dict(self) -> dict:
        return {
            "status": "certified",
            "target": format_partition(self.target),
            "ell": self.ell,
            "blocks": [b.as_dict() for b in self.blocks],
            "fold": [vars(s) for s in self.steps],
        }


@dataclass(frozen=True)
class Failure:
    target: Partition
    ell: int
    reason: str  # exceptional | measured-zero | undecided
    matched: str

    def as_dict(self) -> dict:
        return {"status": "failure", "target": format_partition(self.target), "ell": self.ell,
                "reason": self.reason, "matched": self.matched}


def fold(blocks: tuple[Block, ...]) -> tuple[FoldStep, ...]:
    steps = []
    acc = blocks[0].kind
    for b in blocks[1:]:
        rule, out = _RULES[(acc, b.kind)]
        steps.append(FoldStep(rule, acc, b.kind, out))
        acc = out
    return tuple(steps)


def _positive(kind: str, lam: Partition, ell: int) -> bool:
    return (sm if kind == SM else am)(lam, ell) > 0


def _column_block(k: int, kind: str, ell: int) -> Block | None:
    sign = 1 if kind == SM else -1
    if k in (X_S if kind == SM else X_A):
        return None
    if k <= 14:
        witness = base_table(k, sign)
        just, cite = "base-table", "columns-table"
    else:
        witness = construct_self_conjugate(k, sign).partition
        just, cite = "sign-theorem", ""
    if len(witness) <= ell:
        return Block((k,), kind, just, cite, (witness,))
    if k <= config.direct_block_cap and _positive(kind, column(k), ell):
        return Block((k,), kind, "direct-computation")
    return None


def _group_block(cols: list[int], ell: int) -> Block | None:
    cols_t = tuple(sorted(cols, reverse=True))
    lam = from_columns(cols_t)
    if weight(lam) <= config.direct_block_cap:
        return Block(cols_t, SM, "direct-computation") if _positive(SM, lam, ell) else None
    if (
        ell >= SMALL_VALUES_ELL
        and len(lam) <= SMALL_VALUES_MAX_LENGTH
        and lam not in SMALL_VALUES_EXCEPTIONS
        and lam not in MEASURED_ZEROS
    ):
        return Block(cols_t, SM, "base-table", "small-values")
    return None


def _column2_block(k1: int, k2: int, ell: int) -> Block | None:
    # sm or am of 1^2 + 1^k1 is positive; both sm and am of 1^k2 are, so the triple is sm-positive
    nu = diagonal_witness(k1 + 2, COLUMN_2_MIN_DURFEE, ell)
    if nu is None:
        return None
    plus = _column_block(k2, SM, ell)
    minus = _column_block(k2, AM, ell)
    if plus is None or minus is None:
        return None
    cols = tuple(sorted((2, k1, k2), reverse=True))
    return Block(cols, SM, "base-table", "column-2", (nu, plus.witnesses[0], minus.witnesses[0]))


def _take(pool: list[int], *values: int) -> list[int]:
    rest = list(pool)
    for v in values:
        rest.remove(v)
    return rest


def _grow(r: int, alpha: list[int], ell: int) -> tuple[Block, list[int]] | None:
    group = [r]
    for k in alpha:
        group.append(k)
        blk = _group_block(group, ell)
        if blk is not None:
            return blk, _take(alpha, *group[1:])
    return None


def certify(lam: Partition, ell: int | None = None) -> Certificate | Failure:
    """Certificate for ``sm(lam, ell) > 0``, or a :class:`Failure` naming why none was found."""
    lam = make_partition(lam)
    ell = proposition_ell(lam) if ell is None else ell
    if ell <= 0:
        raise ValueError("ell must be positive")
    if lam in SM_POSITIVE_EXCEPTIONS:
        if all(p == 1 for p in lam):
            return Failure(lam, ell, "exceptional", f"1^r with r = {len(lam)} in X_s")
        return Failure(lam, ell, "exceptional", format_partition(lam))
    if not lam:
        return _finish(lam, ell, [Block((), SM, "direct-computation")])

    cols = list(column_multiset(lam))
    beta = [c for c in cols if c in X_S]
    alpha = [c for c in cols if c not in X_S]
    head: list[Block] = []

    if len(beta) >= 2:
        blk = _group_block(beta, ell)
        if blk is None:
            return _stuck(lam, ell)
        head.append(blk)
    elif len(beta) == 1:
        r = beta[0]
        found = None
        if r != 2:
            for k in alpha:
                if k in X_A:
                    continue
                pair = (_column_block(r, AM, ell), _column_block(k, AM, ell))
                if None not in pair:
                    found = (list(pair), _take(alpha, k))
                    break
        if found is None:
            for k in dict.fromkeys(alpha):
                if r == 2 and k > 14:
                    continue
                blk = _group_block([r, k], ell)
                if blk is not None:
                    found = ([blk], _take(alpha, k))
                    break
        if found is None and r == 2 and len(alpha) >= 2:
            for k1, k2 in ((alpha[0], alpha[1]), (alpha[1], alpha[0])):
                blk = _column2_block(k1, k2, ell)
                if blk is not None:
                    found = ([blk], _take(alpha, k1, k2))
                    break
        if found is None:
            grown = _grow(r, alpha, ell)
            if grown is not None:
                found = ([grown[0]], grown[1])
        if found is None:
            return _stuck(lam, ell)
        head, alpha = found

    tail = []
    for k in alpha:
        blk = _column_block(k, SM, ell)
        if blk is None:
            return Failure(lam, ell, "undecided", f"no sm witness for column 1^{k} at ell={ell}")
        tail.append(blk)
    return _finish(lam, ell, head + tail)


def _finish(lam: Partition, ell: int, blocks: list[Block]) -> Certificate:
    blocks_t = tuple(blocks)
    return Certificate(lam, ell, blocks_t, fold(blocks_t))


def _is_two_two_column(lam: Partition) -> bool:
    return len(lam) >= 2 and lam[:2] == (2, 2) and all(p == 1 for p in lam[2:])


def _stuck(lam: Partition, ell: int) -> Failure:
    if weight(lam) <= config.direct_block_cap and sm(lam, ell) == 0:
        return Failure(lam, ell, "measured-zero", format_partition(lam))
    if _is_two_two_column(lam):
        return Failure(lam, ell, "undecided", f"(2,2,1^{len(lam) - 2}) family")
    return Failure(lam, ell, "undecided", "no block decomposition found")


def certificate_problems(cert: Certificate) -> list[str]:
    """Every reason ``cert`` fails to prove ``sm(target, ell) > 0``; empty means valid."""
    problems: list[str] = []
    ell = cert.ell
    if not cert.blocks:
        return ["no blocks"]
    used = Counter(c for b in cert.blocks for c in b.columns)
    if used != Counter(column_multiset(cert.target)):
        problems.append("block columns do not reassemble the target")
    for i, b in enumerate(cert.blocks):
        problems.extend(f"block {i}: {p}" for p in _block_problems(b, ell))
    try:
        expected = fold(cert.blocks)
    except KeyError:
        problems.append("unknown block kind in fold")
    else:
        if expected != cert.steps:
            problems.append("fold steps do not follow the semigroup rules")
        final = expected[-1].result if expected else cert.blocks[0].kind
        if final != SM:
            problems.append(f"fold ends in {final}, not {SM}")
    return problems


def _block_problems(b: Block, ell: int) -> list[str]:
    if b.kind not in KINDS:
        return [f"unknown kind {b.kind!r}"]
    if b.justification not in JUSTIFICATIONS:
        return [f"unknown justification {b.justification!r}"]
    lam = b.partition
    if weight(lam) <= config.direct_block_cap:
        return [] if _positive(b.kind, lam, ell) else [f"direct computation refutes {b.kind} for {format_partition(lam)}"]
    if b.justification == "direct-computation":
        return [f"direct computation not allowed above weight {config.direct_block_cap}"]
    sign = 1 if b.kind == SM else -1
    if b.justification == "sign-theorem" or b.citation == "columns-table":
        if len(b.columns) != 1 or len(b.witnesses) != 1:
            return ["column citation needs one column and one witness"]
        (k,), (w,) = b.columns, b.witnesses
        if b.citation == "columns-table" and (k > 14 or base_table(k, sign) != w):
            return ["witness is not the tabulated one"]
        if not (is_self_conjugate(w) and weight(w) == k and sign_self_conjugate(w) == sign and len(w) <= ell):
            return ["witness fails the sign-theorem hypotheses"]
        return []
    if b.citation == "small-values":
        ok = (
            b.kind == SM
            and ell >= SMALL_VALUES_ELL
            and len(lam) <= SMALL_VALUES_MAX_LENGTH
            and lam not in SMALL_VALUES_EXCEPTIONS
            and lam not in MEASURED_ZEROS
        )
        return [] if ok else ["small-values hypotheses fail"]
    if b.citation == "column-2":
        return _column2_problems(b, ell)
    return [f"base-table block with unknown citation {b.citation!r}"]


def _column2_problems(b: Block, ell: int) -> list[str]:
    if b.kind != SM or len(b.columns) != 3 or 2 not in b.columns or len(b.witnesses) != 3:
        return ["column-2 block must be sm over columns {2, k1, k2} with three witnesses"]
    nu, plus, minus = b.witnesses
    k1 = weight(nu) - 2
    rest = list(b.columns)
    rest.remove(2)
    if k1 not in rest:
        return ["dichotomy witness weight does not match a column"]
    rest.remove(k1)
    (k2,) = rest
    if not (k1 > 14 and k2 > 14):
        return ["column-2 citation needs both other columns longer than 14"]
    if not (is_self_conjugate(nu) and durfee(nu) >= COLUMN_2_MIN_DURFEE and len(nu) <= ell):
        return ["dichotomy witness fails its hypotheses"]
    for w, s in ((plus, 1), (minus, -1)):
        if not (is_self_conjugate(w) and weight(w) == k2 and sign_self_conjugate(w) == s and len(w) <= ell):
            return [f"column witness for 1^{k2} fails the sign-theorem hypotheses"]
    return []


def verify_certificate(cert: Certificate) -> bool:
    return isinstance(cert, Certificate) and not certificate_problems(cert)


def _pmap(fn, items):
    items = list(items)
    if config.threads <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=config.threads) as ex:
        return list(ex.map(fn, items))


@dataclass(frozen=True)
class ScanRow:
    a: int
    ell: int
    sm: int
    am: int
    sm_witness: Partition | None
    am_witness: Partition | None


@dataclass(frozen=True)
class ExceptionalScan:
    max_a: int
    X_s: tuple[int, ...]
    X_a: tuple[int, ...]
    rows: tuple[ScanRow, ...] = field(repr=False)

    def as_dict(self) -> dict:
        return {
            "max_a": self.max_a,
            "X_s": list(self.X_s),
            "X_a": list(self.X_a),
            "rows": [
                {
                    "a": r.a, "ell": r.ell, "sm": r.sm, "am": r.am,
                    "sm_witness": None if r.sm_witness is None else format_partition(r.sm_witness),
                    "am_witness": None if r.am_witness is None else format_partition(r.am_witness),
                }
                for r in self.rows
            ],
        }


SCAN_MAX_A = 20
SMALL_VALUES_MAX_CAP = 13


class ScanCapError(ValueError):
    pass


def _scan_row(a: int) -> ScanRow:
    ell = columns_ell(a)
    s, t = sm(column(a), ell), am(column(a), ell)
    plus = exhaustive(a, 1, ell) if s else None
    minus = exhaustive(a, -1, ell) if t else None
    return ScanRow(a, ell, s, t, plus, minus)


def scan_exceptional(max_a: int) -> ExceptionalScan:
    """Compute ``sm(1^a, ell)`` and ``am(1^a, ell)`` for ``a = 1..max_a`` and collect the zeros."""
    if not 1 <= max_a <= SCAN_MAX_A:
        raise ScanCapError(f"max_a must be in [1, {SCAN_MAX_A}], got {max_a}")
    rows = tuple(_pmap(_scan_row, range(1, max_a + 1)))
    xs = tuple(r.a for r in rows if r.sm == 0)
    xa = tuple(r.a for r in rows if r.am == 0)
    return ExceptionalScan(max_a, xs, xa, rows)


@dataclass(frozen=True)
class SmallValuesReport:
    weight_cap: int
    checked: int
    zeros: tuple[Partition, ...]
    mismatches: tuple[Partition, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "weight_cap": self.weight_cap,
            "ell": SMALL_VALUES_ELL,
            "checked": self.checked,
            "zeros": [format_partition(z) for z in self.zeros],
            "mismatches": [format_partition(z) for z in self.mismatches],
            "ok": self.ok,
        }


def reproduce_small_values(weight_cap: int) -> SmallValuesReport:
    """Classify ``sm(lam, 7) > 0`` for ``|lam| <= weight_cap``, ``len(lam) <= 14`` against the exception list."""
    if not 1 <= weight_cap <= SMALL_VALUES_MAX_CAP:
        raise ScanCapError(f"weight cap must be in [1, {SMALL_VALUES_MAX_CAP}], got {weight_cap}")
    shapes = [lam for D in range(1, weight_cap + 1) for lam in enumerate_partitions(D, SMALL_VALUES_MAX_LENGTH)]
    values = _pmap(lambda lam: sm(lam, SMALL_VALUES_ELL), shapes)
    zeros = tuple(lam for lam, v in zip(shapes, values) if v == 0)
    mismatches = tuple(
        lam for lam, v in zip(shapes, values) if (v > 0) != (lam not in SMALL_VALUES_EXCEPTIONS)
    )
    return SmallValuesReport(weight_cap, len(shapes), zeros, mismatches)


def column_2_dichotomy(a: int) -> dict:
    """``sm`` and ``am`` of ``(2,2,1^a)`` at ``ell = max(7, ceil(sqrt(a+2)))``; at least one should be positive."""
    lam = (2, 2) + (1,) * a
    ell = max(7, ceil_sqrt(a + 2))
    s, t = sm(lam, ell), am(lam, ell)
    return {"a": a, "ell": ell, "sm": s, "am": t, "holds": s > 0 or t > 0}


def certify_and_verify(lam: Partition, ell: int | None = None) -> tuple[Certificate | Failure, bool]:
    """Run :func:`certify` and, on success, :func:`verify_certificate` on its output."""
    out = certify(lam, ell)
    return out, isinstance(out, Certificate) and verify_certificate(out)


__all__ = [
    "Block", "Certificate", "ExceptionalPairError", "ExceptionalScan", "Failure", "FoldStep",
    "ScanCapError", "SmallValuesReport", "certify", "certify_and_verify", "certificate_problems", "column_2_dichotomy",
    "columns_ell", "proposition_ell", "reproduce_small_values", "scan_exceptional", "verify_certificate",
]
