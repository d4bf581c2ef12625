"""The one-shot verification report: every desk-checkable claim as a CheckRecord.

The report has three parts. ``body`` holds the records without timings and is
byte-stable for a given (level, version). ``digest`` is the sha256 of the
canonical JSON of ``body``. ``footer`` holds runtimes and is excluded from the hash.
"""

from __future__ import annotations

import hashlib
import json
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import __version__
from .certifier import (
    Certificate,
    certify,
    column_2_dichotomy,
    proposition_ell,
    reproduce_small_values,
    scan_exceptional,
    verify_certificate,
)
from .characters import conjugate_sign_check
from .coefficients import alt_kron, am, kostka, kronecker, sm, sm_by_degree, sym_kron, two_row_comparison, verify_sign_theorem
from .config import config
from .partitions import (
    column,
    conjugate,
    enumerate_partitions,
    format_partition,
    partitions_of,
    rectangle,
    self_conjugate_partitions,
)
from .plethysm import dimension_oracle, plethysm_coefficient
from .selfconjugate import X_A, X_S, construct_self_conjugate, length_bound
from .stabilizer import ad_report, annihilator_dimension, invariant_dimension, partition_count, symmetry_check

SCHEMA = "symkron.verify-report/1"
STATUSES = ("pass", "fail", "reported-only")


@dataclass
class CheckRecord:
    check_id: str
    paper_anchor: str
    status: str
    payload: dict
    runtime_ms: int = field(default=0, compare=False)

    def body(self) -> dict:
        return {"check_id": self.check_id, "paper_anchor": self.paper_anchor, "status": self.status, "payload": self.payload}


@dataclass(frozen=True)
class Level:
    name: str
    coefficient_cap: int
    sweep_cap: int
    stabilizer_pairs: tuple[tuple[int, int], ...]


LEVELS = {
    "quick": Level("quick", 10, 12, ((3, 3), (3, 4), (4, 3))),
    "full": Level("full", 12, 14, ((3, 3), (3, 4), (4, 3), (4, 4), (3, 5))),
}


def _status(ok: bool) -> str:
    return "pass" if ok else "fail"


def _fmt(lams) -> list[str]:
    return [format_partition(x) for x in lams]


def check_xs_scan(level: Level):
    scan = scan_exceptional(14)
    return _status(set(scan.X_s) == X_S), {"max_a": 14, "X_s": list(scan.X_s), "expected": sorted(X_S)}


def check_xa_scan(level: Level):
    scan = scan_exceptional(14)
    return _status(set(scan.X_a) == X_A), {"max_a": 14, "X_a": list(scan.X_a), "expected": sorted(X_A)}


def check_sign_theorem(level: Level):
    bad, count = [], 0
    for D in range(1, 13):
        for lam in self_conjugate_partitions(D):
            count += 1
            if not verify_sign_theorem(lam).consistent:
                bad.append(lam)
    return _status(not bad), {"max_weight": 12, "checked": count, "inconsistent": _fmt(bad)}


def check_sk_plus_ak(level: Level):
    bad, count = [], 0
    for D in range(1, level.coefficient_cap + 1):
        for lam in partitions_of(D):
            for mu in partitions_of(D):
                count += 1
                if sym_kron(lam, mu) + alt_kron(lam, mu) != kronecker(lam, mu, mu):
                    bad.append([format_partition(lam), format_partition(mu)])
    return _status(not bad), {"max_weight": level.coefficient_cap, "pairs": count, "violations": bad}


def check_g_pi_transpose(level: Level):
    bad, count = [], 0
    for D in range(1, level.coefficient_cap + 1):
        for lam in partitions_of(D):
            count += 1
            if kronecker(column(D), lam, conjugate(lam)) != 1:
                bad.append(lam)
    return _status(not bad), {"max_weight": level.coefficient_cap, "checked": count, "violations": _fmt(bad)}


def check_character_conjugation(level: Level):
    bad = conjugate_sign_check(level.coefficient_cap)
    return _status(not bad), {"max_weight": level.coefficient_cap, "violations": bad}


def check_small_values(level: Level):
    report = reproduce_small_values(min(level.sweep_cap, 13))
    return _status(report.ok), report.as_dict()


def check_construction_sweep(level: Level):
    bad, methods = [], {}
    for a in range(1, 501):
        for sign in (1, -1):
            if (sign == 1 and a in X_S) or (sign == -1 and a in X_A):
                continue
            res = construct_self_conjugate(a, sign)
            methods[res.method] = methods.get(res.method, 0) + 1
            v = res.validate()
            if not (all(v.values()) and sum(res.partition) == a and res.length_bound_used == length_bound(a)):
                bad.append([a, sign])
    return _status(not bad), {"max_a": 500, "methods": dict(sorted(methods.items())), "violations": bad}


def check_construction_cross(level: Level):
    bad = []
    for a in range(1, 17):
        for sign in (1, -1):
            if (sign == 1 and a in X_S) or (sign == -1 and a in X_A):
                continue
            rec = verify_sign_theorem(construct_self_conjugate(a, sign).partition)
            if (rec.sk if sign == 1 else rec.ak) != 1:
                bad.append([a, sign])
    return _status(not bad), {"max_a": 16, "violations": bad}


def check_certifier(level: Level):
    unsound, mismatched, failures, count = [], [], [], 0
    for D in range(0, level.sweep_cap + 1):
        for lam in partitions_of(D):
            count += 1
            ell = proposition_ell(lam)
            out = certify(lam, ell)
            truth = sm(lam, ell) > 0
            if isinstance(out, Certificate):
                if not verify_certificate(out):
                    unsound.append(lam)
                if not truth:
                    mismatched.append(lam)
            else:
                failures.append({"partition": format_partition(lam), "reason": out.reason})
                if truth:
                    mismatched.append(lam)
    ok = not unsound and not mismatched
    return _status(ok), {
        "max_weight": level.sweep_cap, "checked": count,
        "unsound": _fmt(unsound), "mismatched": _fmt(mismatched), "failures": failures,
    }


def check_prop_pos(level: Level):
    m = 10
    bad, count = [], 0
    for lam in partitions_of(m):
        # len(lam) <= m^2 is taken as given, not verified
        if lam[0] < 3 or len(lam) > m * m:
            continue
        count += 1
        out = certify(lam, m + 2)
        if not (isinstance(out, Certificate) and verify_certificate(out)):
            bad.append(lam)
    return _status(not bad), {"m": m, "ell": m + 2, "checked": count, "uncertified": _fmt(bad)}


def random_partition(rng: random.Random, max_weight: int):
    w = rng.randint(1, max_weight)
    return rng.choice(partitions_of(w))


def semigroup_violations(pairs: int = 200, seed: int = 2024, max_weight: int = 8, max_n: int = 5) -> tuple[list, dict]:
    from .partitions import add

    rng = random.Random(seed)
    bad = []
    fired = {"sm+sm": 0, "am+am": 0, "sm+am": 0}
    for _ in range(pairs):
        lam, nu = random_partition(rng, max_weight), random_partition(rng, max_weight)
        n = rng.randint(1, max_n)
        s = add(lam, nu)
        sl, sn, al, an = sm(lam, n), sm(nu, n), am(lam, n), am(nu, n)
        tests = (
            ("sm+sm", sl > 0 and sn > 0, lambda: sm(s, n) >= max(sl, sn)),
            ("am+am", al > 0 and an > 0, lambda: sm(s, n) >= max(al, an)),
            ("sm+am", sl > 0 and an > 0, lambda: am(s, n) >= max(sl, an)),
        )
        for name, hyp, concl in tests:
            if hyp:
                fired[name] += 1
                if not concl():
                    bad.append([name, format_partition(lam), format_partition(nu), n])
    return bad, fired


def check_semigroup(level: Level):
    bad, fired = semigroup_violations()
    return _status(not bad), {"pairs": 200, "seed": 2024, "hypotheses_fired": fired, "violations": bad}


def check_monotone(level: Level):
    bad = []
    for D in range(1, 9):
        for lam in partitions_of(D):
            for n in range(1, D + 1):
                if sm(lam, n) > sm(lam, n + 1):
                    bad.append([format_partition(lam), n])
    return _status(not bad), {"max_weight": 8, "violations": bad}


def check_sm_factorizations(level: Level):
    bad = []
    D = level.coefficient_cap
    factorizations = [(d, D // d) for d in range(1, D + 1) if D % d == 0]
    for lam in partitions_of(D):
        for n in (3, 7):
            values = {sm_by_degree(lam, n, d, m) for d, m in factorizations}
            if values != {sm(lam, n)}:
                bad.append([format_partition(lam), n])
    return _status(not bad), {"weight": D, "factorizations": factorizations, "violations": bad}


def _plethysm_pairs(cap: int):
    return [(d, m) for d in range(1, cap + 1) for m in range(1, cap + 1) if d * m <= cap]


def check_plethysm_bound(level: Level):
    bad, count = [], 0
    for d, m in _plethysm_pairs(level.coefficient_cap):
        for lam in partitions_of(d * m):
            count += 1
            if plethysm_coefficient(lam, d, m) > kostka(lam, rectangle(d, m)):
                bad.append([format_partition(lam), d, m])
    return _status(not bad), {"max_dm": level.coefficient_cap, "checked": count, "violations": bad}


def check_plethysm_vanishing(level: Level):
    bad, locus, extra = [], 0, 0
    for d, m in _plethysm_pairs(level.coefficient_cap):
        for lam in partitions_of(d * m):
            a, k = plethysm_coefficient(lam, d, m), kostka(lam, rectangle(d, m))
            if lam[0] < m:
                locus += 1
                if a or k:
                    bad.append([format_partition(lam), d, m])
            elif a == 0:
                extra += 1
    return _status(not bad), {
        "max_dm": level.coefficient_cap, "locus_size": locus, "violations": bad,
        "zeros_outside_locus": extra,
    }


def check_dimension_oracle(level: Level):
    bad = []
    for d, m in _plethysm_pairs(10):
        for k in (1, 2, 3):
            lhs, rhs = dimension_oracle(d, m, k)
            if lhs != rhs:
                bad.append([d, m, k, lhs, rhs])
    return _status(not bad), {"max_dm": 10, "max_k": 3, "violations": bad}


def check_kostka_dominance(level: Level):
    from .partitions import dominates

    bad = []
    for D in range(1, 9):
        for lam in partitions_of(D):
            for mu in partitions_of(D):
                if (kostka(lam, mu) > 0) != dominates(lam, mu):
                    bad.append([format_partition(lam), format_partition(mu)])
    return _status(not bad), {"max_weight": 8, "violations": bad}


def _annihilator(n: int, m: int):
    def run(level: Level):
        dim = annihilator_dimension(n, m)
        rep = ad_report(n, m)
        ok = dim == n * n - 1 and rep["ad_rank"] == n * n - 1 and rep["all_kill_pow"]
        return _status(ok), {"n": n, "m": m, "dimension": dim, "expected": n * n - 1, **rep}

    return run


def _invariants(n: int, m: int):
    def run(level: Level):
        dim = invariant_dimension(n, m)
        want = partition_count(m, n)
        return _status(dim == want and dim > 1), {"n": n, "m": m, "dimension": dim, "partitions": want}

    return run


def _annihilator_reported(n: int, m: int):
    def run(level: Level):
        return "reported-only", {"n": n, "m": m, "dimension": annihilator_dimension(n, m), "n2_minus_1": n * n - 1}

    return run


def check_symmetries(level: Level):
    rep = symmetry_check(3, 3, trials=3, seed=0)
    ok = rep["transpose"] and rep["conjugation"] and rep["homogeneous_degree_m"]
    return _status(ok), rep


def check_column_2(level: Level):
    rows = [column_2_dichotomy(a) for a in range(0, 9)]
    return _status(all(r["holds"] for r in rows)), {"rows": rows}


def _two_row(r: int):
    def run(level: Level):
        rows = [two_row_comparison(r, b) for b in range(0, r * r // 2 + 1)]
        return "reported-only", {"r": r, "rows": rows, "all_agree": all(x["agree"] for x in rows)}

    return run


def checks_for(level: Level) -> list[tuple[str, str, Callable]]:
    out = [
        ("X_s-scan", "columns: X_s = {2,3,4,7,8,12}", check_xs_scan),
        ("X_a-scan", "columns: X_a = {1,2,5,6,10,14}", check_xa_scan),
        ("sign-theorem-sweep", "signaction: sk(pi,lam), ak(pi,lam) from sgn(lam)", check_sign_theorem),
        ("sk-plus-ak", "g(lam,mu,mu) = sk(lam,mu) + ak(lam,mu)", check_sk_plus_ak),
        ("g-pi-transpose", "g(pi,lam,lam^t) = 1", check_g_pi_transpose),
        ("character-conjugation", "chi_{lam^t} = sign * chi_lam", check_character_conjugation),
        ("small-values", "small_values: sm(lam,7) > 0 off the exceptional list", check_small_values),
        ("construction-sweep", "columns: self-conjugate mu, nu with length <= max(floor(sqrt a)+2, 12)", check_construction_sweep),
        ("construction-sign-cross-check", "columns: 1 = sk(1^a, mu), 1 = ak(1^a, nu)", check_construction_cross),
        ("certifier-round-trip", "sm_positive: certificates against direct sm(lam, ell)", check_certifier),
        ("pos-m10", "pos: sm(lam,n) > 0 for n >= m+2 at m = 10", check_prop_pos),
        ("semigroup", "semigroup: parts (1), (2), (3)", check_semigroup),
        ("sm-monotone", "sm(lam,n) <= sm(lam,n+1)", check_monotone),
        ("sm-notation", "sm(lam,n) depends only on |lam| = dm and n", check_sm_factorizations),
        ("plethysm-kostka-bound", "a_lam(d[m]) <= K_{lam,d x m}", check_plethysm_bound),
        ("plethysm-vanishing", "plethvanish: lam_1 < m forces a_lam(d[m]) = K_{lam,d x m} = 0", check_plethysm_vanishing),
        ("dimension-oracle", "sum_lam a_lam(d[m]) s_lam(1^k) = dim S^d(S^m C^k)", check_dimension_oracle),
        ("kostka-dominance", "K_{lam,mu} > 0 iff lam dominates mu", check_kostka_dominance),
    ]
    for n, m in level.stabilizer_pairs:
        out.append((f"annihilator-({n},{m})", "stabilizer: ann(Pow) = Im(Ad), dimension n^2 - 1", _annihilator(n, m)))
    for n, m in level.stabilizer_pairs:
        out.append((f"invariants-({n},{m})", "space invariant under S: #{gamma |- m, len(gamma) <= n}", _invariants(n, m)))
    for n, m in ((2, 2), (2, 3), (3, 2)):
        out.append((f"annihilator-({n},{m})", "stabilizer: small n or m, not asserted", _annihilator_reported(n, m)))
    out += [
        ("symmetries-(3,3)", "stabilizer: transpose, conjugation, scaling by m-th roots of unity", check_symmetries),
        ("column-2-dichotomy", "column_2: sm or am of (2,2,1^a) positive", check_column_2),
        ("two-row-r2", "kron_2row: g((r^2-b,b), r x r, r x r) vs p_b - p_{b-1}, asserted only for r >= 7", _two_row(2)),
        ("two-row-r3", "kron_2row: g((r^2-b,b), r x r, r x r) vs p_b - p_{b-1}, asserted only for r >= 7", _two_row(3)),
    ]
    return out


def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def _run_one(item, level: Level) -> CheckRecord:
    check_id, anchor, fn = item
    t0 = time.perf_counter()
    status, payload = fn(level)
    ms = int((time.perf_counter() - t0) * 1000)
    assert status in STATUSES
    return CheckRecord(check_id, anchor, status, payload, ms)


def run_checks(level_name: str) -> list[CheckRecord]:
    level = LEVELS[level_name]
    items = checks_for(level)
    if config.threads <= 1:
        return [_run_one(it, level) for it in items]
    with ThreadPoolExecutor(max_workers=config.threads) as ex:
        return list(ex.map(lambda it: _run_one(it, level), items))


def build_report(level_name: str, records: list[CheckRecord]) -> dict:
    level = LEVELS[level_name]
    failed = [r.check_id for r in records if r.status == "fail"]
    body = {
        "level": level.name,
        "version": __version__,
        "caps": {"coefficient": level.coefficient_cap, "sweep": level.sweep_cap,
                 "stabilizer": [list(p) for p in level.stabilizer_pairs]},
        "checks": [r.body() for r in records],
        "summary": {
            "asserted": sum(r.status != "reported-only" for r in records),
            "passed": sum(r.status == "pass" for r in records),
            "reported_only": sum(r.status == "reported-only" for r in records),
            "failed": failed,
        },
    }
    body = json.loads(_canonical(body))  # plain JSON tree: tuples become lists
    return {
        "schema": SCHEMA,
        "body": body,
        "digest": hashlib.sha256(_canonical(body).encode()).hexdigest(),
        "footer": {"runtime_ms": {r.check_id: r.runtime_ms for r in records}, "threads": config.threads},
    }


def verify_paper(level: str = "quick") -> tuple[dict, int]:
    """Run every check at ``level``; returns the report and the exit code (0 iff nothing failed)."""
    if level not in LEVELS:
        raise ValueError(f"level must be one of {sorted(LEVELS)}, got {level!r}")
    report = build_report(level, run_checks(level))
    return report, 0 if not report["body"]["summary"]["failed"] else 1


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
