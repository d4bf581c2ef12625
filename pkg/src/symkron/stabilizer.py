"""The trace-power polynomial ``Pow^m_n = tr(X^m)`` and its linear symmetries.

Variables ``x^i_j`` (0-based here) are the entries of an ``n x n`` matrix, stored
row-major at index ``i*n + j``. The operator ``xi^i_j (x) x^k_l`` acts on
polynomials as ``x^k_l * d/dx^j_i``, and

    Ad(eta^k (x) e_j) = sum_i (xi^k_i (x) x^i_j - xi^i_j (x) x^k_i)

is the derivative of conjugation, so it kills ``Pow``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .config import config
from .linalg import SparseEchelon, sparse_rank
from .partitions import enumerate_partitions

Monomial = tuple[int, ...]


class PolynomialCapError(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


@dataclass(frozen=True)
class ExactPolynomial:
    n: int
    terms: tuple[tuple[Monomial, Fraction], ...]

    @classmethod
    def from_dict(cls, n: int, d: dict[Monomial, Fraction]) -> "ExactPolynomial":
        return cls(n, tuple(sorted((k, Fraction(v)) for k, v in d.items() if v)))

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e, _ in self.terms}

    def is_zero(self) -> bool:
        return not self.terms

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        out = self.as_dict()
        for e, c in other.terms:
            out[e] = out.get(e, Fraction(0)) - c
        return ExactPolynomial.from_dict(self.n, out)

    def evaluate(self, X) -> Fraction:
        flat = [Fraction(X[i][j]) for i in range(self.n) for j in range(self.n)]
        total = Fraction(0)
        for e, c in self.terms:
            t = c
            for v, k in enumerate(e):
                if k:
                    t *= flat[v] ** k
            total += t
        return total


def var(n: int, i: int, j: int) -> int:
    return i * n + j


def build_pow(n: int, m: int) -> ExactPolynomial:
    """``sum over i_1..i_m of x^{i1}_{i2} x^{i2}_{i3} ... x^{im}_{i1}``."""
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive")
    if comb(n * n + m - 1, m) > config.poly_term_cap * 10 or n**m > 10**6:
        raise PolynomialCapError(f"Pow^{m}_{n} exceeds the polynomial cap")
    out: dict[Monomial, Fraction] = {}
    for idx in product(range(n), repeat=m):
        e = [0] * (n * n)
        for t in range(m):
            e[var(n, idx[t], idx[(t + 1) % m])] += 1
        key = tuple(e)
        out[key] = out.get(key, Fraction(0)) + 1
    return ExactPolynomial.from_dict(n, out)


def matrix_power_trace(X, m: int) -> Fraction:
    n = len(X)
    P = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    A = [[Fraction(v) for v in row] for row in X]
    for _ in range(m):
        P = [[sum(P[i][t] * A[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return sum(P[i][i] for i in range(n))


@dataclass(frozen=True)
class DerivationOperator:
    """A formal combination ``sum coeff * (xi^i_j (x) x^k_l)`` keyed by ``(i, j, k, l)``."""

    n: int
    terms: tuple[tuple[tuple[int, int, int, int], int], ...]

    @classmethod
    def basis(cls, n: int, i: int, j: int, k: int, l: int) -> "DerivationOperator":
        if not all(0 <= t < n for t in (i, j, k, l)):
            raise DimensionMismatch(f"indices {(i, j, k, l)} out of range for n={n}")
        return cls(n, (((i, j, k, l), 1),))

    @classmethod
    def ad(cls, n: int, k: int, j: int) -> "DerivationOperator":
        """``Ad(eta^k (x) e_j)``."""
        acc: dict[tuple[int, int, int, int], int] = {}
        for i in range(n):
            acc[(k, i, i, j)] = acc.get((k, i, i, j), 0) + 1
            acc[(i, j, k, i)] = acc.get((i, j, k, i), 0) - 1
        return cls(n, tuple(sorted((key, c) for key, c in acc.items() if c)))

    def vector(self) -> dict[int, int]:
        n = self.n
        return {((i * n + j) * n + k) * n + l: c for (i, j, k, l), c in self.terms}


def _apply_basis(n: int, i: int, j: int, k: int, l: int, f: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    # x^k_l * d/dx^j_i
    src, dst = var(n, j, i), var(n, k, l)
    out: dict[Monomial, Fraction] = {}
    for e, c in f.items():
        p = e[src]
        if not p:
            continue
        new = list(e)
        new[src] -= 1
        new[dst] += 1
        key = tuple(new)
        out[key] = out.get(key, Fraction(0)) + c * p
    return out


def apply_operator(L: DerivationOperator, f: ExactPolynomial) -> ExactPolynomial:
    if L.n != f.n:
        raise DimensionMismatch(f"operator has n={L.n} but polynomial has n={f.n}")
    base = f.as_dict()
    out: dict[Monomial, Fraction] = {}
    for (i, j, k, l), coeff in L.terms:
        for e, c in _apply_basis(f.n, i, j, k, l, base).items():
            out[e] = out.get(e, Fraction(0)) + coeff * c
    return ExactPolynomial.from_dict(f.n, out)


def _check_caps(n: int, m: int) -> None:
    if comb(n * n + m - 1, m) > config.poly_term_cap:
        raise PolynomialCapError(
            f"degree-{m} monomials in {n * n} variables exceed the cap {config.poly_term_cap}"
        )


def _integer_row(p: dict[Monomial, Fraction], index: dict[Monomial, int]) -> dict[int, int]:
    row = {}
    for e, c in p.items():
        if c:
            if c.denominator != 1:
                raise ValueError("expected integer coefficients")
            row[index.setdefault(e, len(index))] = int(c)
    return row


def annihilator_dimension(n: int, m: int) -> int:
    """Dimension of ``{L in End(C^{n x n}) : L . Pow = 0}``, from the rank of the ``n^4`` images."""
    _check_caps(n, m)
    pw = build_pow(n, m).as_dict()
    index: dict[Monomial, int] = {}
    ech = SparseEchelon()
    for i, j, k, l in product(range(n), repeat=4):
        ech.add(_integer_row(_apply_basis(n, i, j, k, l, pw), index))
    return n**4 - ech.rank


def ad_report(n: int, m: int) -> dict:
    """Rank of the ``Ad`` span inside operator space and whether each generator kills ``Pow``."""
    pw = build_pow(n, m)
    gens = [DerivationOperator.ad(n, k, j) for k in range(n) for j in range(n)]
    return {
        "ad_rank": sparse_rank(g.vector() for g in gens),
        "all_kill_pow": all(apply_operator(g, pw).is_zero() for g in gens),
    }


def transpose_monomial(n: int, e: Monomial) -> Monomial:
    return tuple(e[var(n, j, i)] for i in range(n) for j in range(n))


def _monomials(nvars: int, m: int):
    # exponent vectors of total degree m, graded lex on the row-major variable order
    def rec(v: int, left: int, acc: list[int]):
        if v == nvars - 1:
            yield tuple(acc + [left])
            return
        for k in range(left, -1, -1):
            yield from rec(v + 1, left - k, acc + [k])

    yield from rec(0, m, [])


def _weight_zero(n: int, e: Monomial) -> bool:
    # diagonal generators Ad(eta^k (x) e_k) scale x^a_b by [b == k] - [a == k]
    for k in range(n):
        rows = sum(e[var(n, k, j)] for j in range(n))
        cols = sum(e[var(n, i, k)] for i in range(n))
        if rows != cols:
            return False
    return True


def invariant_dimension(n: int, m: int) -> int:
    """Dimension of degree-``m`` polynomials killed by every ``Ad`` and fixed by transposition."""
    _check_caps(n, m)
    # rows of the diagonal generators are single unknowns, forcing c_u = 0 off weight zero
    unknowns = [e for e in _monomials(n * n, m) if _weight_zero(n, e)]
    col = {e: t for t, e in enumerate(unknowns)}
    equations: dict[tuple, dict[int, int]] = {}
    for k in range(n):
        for j in range(n):
            if k == j:
                continue
            L = DerivationOperator.ad(n, k, j)
            for u, t in col.items():
                for (a, b, c, d), coeff in L.terms:
                    for w, val in _apply_basis(n, a, b, c, d, {u: Fraction(1)}).items():
                        eq = equations.setdefault((k, j, w), {})
                        eq[t] = eq.get(t, 0) + coeff * int(val)
    ech = SparseEchelon()
    for eq in equations.values():
        ech.add(eq)
    for u, t in col.items():
        tu = col[transpose_monomial(n, u)]
        if tu != t:
            ech.add({t: 1, tu: -1})
    return len(unknowns) - ech.rank


def partition_count(m: int, n: int) -> int:
    """``#{gamma |- m : len(gamma) <= n}``."""
    return sum(1 for _ in enumerate_partitions(m, n))


def _poly_mul(a: dict[Monomial, Fraction], b: dict[Monomial, Fraction]) -> dict[Monomial, Fraction]:
    out: dict[Monomial, Fraction] = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return {k: v for k, v in out.items() if v}


def substitute(f: ExactPolynomial, forms: list[dict[Monomial, Fraction]]) -> ExactPolynomial:
    """Replace variable ``v`` by the polynomial ``forms[v]`` and expand."""
    nv = f.n * f.n
    unit = {tuple([0] * nv): Fraction(1)}
    cache: dict[tuple[int, ...], dict[Monomial, Fraction]] = {(): unit}

    def prefix(vs: tuple[int, ...]) -> dict[Monomial, Fraction]:
        if vs not in cache:
            cache[vs] = _poly_mul(prefix(vs[:-1]), forms[vs[-1]])
        return cache[vs]

    out: dict[Monomial, Fraction] = {}
    for e, c in f.terms:
        vs = tuple(v for v, k in enumerate(e) for _ in range(k))
        for key, val in prefix(vs).items():
            out[key] = out.get(key, Fraction(0)) + c * val
    return ExactPolynomial.from_dict(f.n, out)


def _inverse(g: list[list[Fraction]]) -> list[list[Fraction]] | None:
    n = len(g)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(g)]
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return None
        a[c], a[p] = a[p], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def random_invertible(n: int, rng: random.Random) -> tuple[list[list[Fraction]], list[list[Fraction]]]:
    while True:
        g = [[Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        ginv = _inverse(g)
        if ginv is not None:
            return g, ginv


def conjugation_forms(g, ginv) -> list[dict[Monomial, Fraction]]:
    """Entries of ``g X g^{-1}`` as linear forms in the entries of ``X``."""
    n = len(g)
    forms = []
    for i in range(n):
        for j in range(n):
            form: dict[Monomial, Fraction] = {}
            for a in range(n):
                for b in range(n):
                    c = g[i][a] * ginv[b][j]
                    if c:
                        e = [0] * (n * n)
                        e[var(n, a, b)] = 1
                        form[tuple(e)] = c
            forms.append(form)
    return forms


def transposed(f: ExactPolynomial) -> ExactPolynomial:
    return ExactPolynomial.from_dict(f.n, {transpose_monomial(f.n, e): c for e, c in f.terms})


def perturbed_pow(n: int, m: int) -> ExactPolynomial:
    """``Pow`` plus ``x^0_1 (x^0_0)^{m-1}``, which is not transposition invariant for ``n >= 2``."""
    d = build_pow(n, m).as_dict()
    e = [0] * (n * n)
    e[var(n, 0, 0)] = m - 1
    e[var(n, 0, 1)] += 1
    d[tuple(e)] = d.get(tuple(e), Fraction(0)) + 1
    return ExactPolynomial.from_dict(n, d)


def symmetry_check(n: int, m: int, trials: int = 3, seed: int = 0, poly: ExactPolynomial | None = None) -> dict:
    """Transposition, conjugation by random rational ``g``, and homogeneity of degree ``m``."""
    f = build_pow(n, m) if poly is None else poly
    rng = random.Random(seed)
    mismatches: list[str] = []
    transpose_ok = (transposed(f) - f).is_zero()
    if not transpose_ok:
        mismatches.append("transposition")
    conj_ok = True
    for t in range(trials):
        g, ginv = random_invertible(n, rng)
        if not (substitute(f, conjugation_forms(g, ginv)) - f).is_zero():
            conj_ok = False
            mismatches.append(f"conjugation trial {t}")
    homogeneous = f.degrees() <= {m}
    if not homogeneous:
        mismatches.append("homogeneity")
    return {
        "n": n, "m": m, "trials": trials,
        "transpose": transpose_ok, "conjugation": conj_ok, "homogeneous_degree_m": homogeneous,
        "mismatches": mismatches,
    }


def stabilizer_report(n: int, m: int, trials: int = 2) -> dict:
    out = {"n": n, "m": m, "expected_annihilator": n * n - 1, "annihilator_dimension": annihilator_dimension(n, m)}
    out.update(ad_report(n, m))
    out["invariant_dimension"] = invariant_dimension(n, m)
    out["partitions_of_m_in_n_parts"] = partition_count(m, n)
    out["symmetry"] = symmetry_check(n, m, trials)
    return out
