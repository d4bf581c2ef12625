"""Plethysm ``h_d[h_m]`` in the power-sum basis and its Schur coefficients.

``p_k[f]`` multiplies every power-sum index of ``f`` by ``k``, and
``h_d[f] = sum_{nu |- d} p_nu[f] / z_nu``. The Schur coefficient of ``s_lam`` in
a symmetric function ``sum_rho c_rho p_rho`` is ``sum_rho c_rho chi_lam(rho)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb

from .characters import WeightMismatch, character, class_order_z
from .coefficients import IntegralityError
from .config import config
from .partitions import Partition, partitions_of, weight


class PlethysmCapError(ValueError):
    pass


class SymFuncP:
    """Finitely supported map from power-sum indices to exact rationals."""

    __slots__ = ("_terms", "degree")

    def __init__(self, terms: dict[Partition, Fraction] | None = None, degree: int | None = None):
        clean: dict[Partition, Fraction] = {}
        for rho, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[tuple(sorted(rho, reverse=True))] = c
        degrees = {weight(rho) for rho in clean}
        if len(degrees) > 1:
            raise WeightMismatch(f"mixed degrees {sorted(degrees)}")
        if degrees:
            found = degrees.pop()
            if degree is not None and degree != found:
                raise WeightMismatch(f"declared degree {degree} but terms have degree {found}")
            degree = found
        self._terms = clean
        self.degree = 0 if degree is None else degree

    @classmethod
    def power_sum(cls, rho: Partition) -> "SymFuncP":
        return cls({tuple(rho): Fraction(1)})

    @classmethod
    def complete(cls, m: int) -> "SymFuncP":
        """``h_m = sum_{rho |- m} p_rho / z_rho``."""
        return cls({rho: Fraction(1, class_order_z(rho)) for rho in partitions_of(m)}, m)

    def items(self):
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, rho: Partition) -> Fraction:
        return self._terms.get(tuple(rho), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymFuncP):
            return NotImplemented
        return self._terms == other._terms and (self.degree == other.degree or not self._terms)

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        body = " + ".join(f"{c}*p{list(rho)}" for rho, c in self.items())
        return f"SymFuncP({body or '0'})"

    def __add__(self, other: "SymFuncP") -> "SymFuncP":
        out = dict(self._terms)
        for rho, c in other._terms.items():
            out[rho] = out.get(rho, Fraction(0)) + c
        return SymFuncP(out, self.degree if self._terms else other.degree)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFuncP({rho: c * other for rho, c in self._terms.items()}, self.degree)
        out: dict[Partition, Fraction] = {}
        for r1, c1 in self._terms.items():
            for r2, c2 in other._terms.items():
                rho = tuple(sorted(r1 + r2, reverse=True))
                out[rho] = out.get(rho, Fraction(0)) + c1 * c2
        return SymFuncP(out, self.degree + other.degree)

    __rmul__ = __mul__

    def pleth_power(self, k: int) -> "SymFuncP":
        """``p_k[self]``: every index part multiplied by ``k``."""
        return SymFuncP({tuple(k * i for i in rho): c for rho, c in self._terms.items()}, k * self.degree)


def one() -> SymFuncP:
    return SymFuncP({(): Fraction(1)}, 0)


def _check_cap(d: int, m: int) -> None:
    if d <= 0 or m <= 0:
        raise ValueError("d and m must be positive")
    if d * m > config.plethysm_cap:
        raise PlethysmCapError(f"d*m = {d * m} exceeds the plethysm cap {config.plethysm_cap}")


def plethysm_h(d: int, f: SymFuncP) -> SymFuncP:
    """``h_d[f]`` for a symmetric function ``f`` given in the power-sum basis."""
    total = SymFuncP(degree=d * f.degree)
    for nu in partitions_of(d):
        term = one()
        for part in nu:
            term = term * f.pleth_power(part)
        total = total + term * Fraction(1, class_order_z(nu))
    return total


@cache
def plethysm_h_h(d: int, m: int) -> SymFuncP:
    """``h_d[h_m]`` expanded exactly in power sums."""
    _check_cap(d, m)
    return plethysm_h(d, SymFuncP.complete(m))


def schur_coefficient(f: SymFuncP, lam: Partition) -> int:
    """``<f, s_lam>``; must be an integer for a Schur-integral ``f``."""
    if weight(lam) != f.degree:
        raise WeightMismatch(f"|lambda| = {weight(lam)} but f has degree {f.degree}")
    total = sum((c * character(tuple(lam), rho) for rho, c in f.items()), Fraction(0))
    if total.denominator != 1:
        raise IntegralityError(f"<f, s_{lam}> = {total} is not an integer")
    return int(total)


def plethysm_coefficient(lam: Partition, d: int, m: int) -> int:
    """``a_lam(d[m])``: multiplicity of ``s_lam`` in ``h_d[h_m]``."""
    if weight(lam) != d * m:
        raise WeightMismatch(f"|lambda| = {weight(lam)} but d*m = {d * m}")
    value = schur_coefficient(plethysm_h_h(d, m), lam)
    if value < 0:
        raise IntegralityError(f"a_{lam}({d}[{m}]) = {value} is negative")
    return value


def schur_expansion(d: int, m: int) -> dict[Partition, int]:
    """All nonzero ``a_lam(d[m])``, keyed by ``lam`` in reverse-lex order."""
    return {lam: a for lam in partitions_of(d * m) if (a := plethysm_coefficient(lam, d, m))}


def schur_at_ones(lam: Partition, k: int) -> int:
    """``s_lam(1^k) = prod (k + content) / hook`` over the boxes of ``lam``."""
    num = den = 1
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    for i, row in enumerate(lam):
        for j in range(row):
            num *= k + j - i
            den *= (row - j - 1) + (conj[j] - i - 1) + 1
    return num // den


def dimension_oracle(d: int, m: int, k: int) -> tuple[int, int]:
    """``(sum_lam a_lam(d[m]) s_lam(1^k), dim S^d(S^m C^k))``; the two must agree."""
    lhs = sum(a * schur_at_ones(lam, k) for lam, a in schur_expansion(d, m).items())
    rhs = comb(comb(k + m - 1, m) + d - 1, d)
    return lhs, rhs
