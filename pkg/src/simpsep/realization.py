"""Neighborhoods in the thin realization and their membership tests.

``NbhdSystem`` holds the data ``(family, intervals, eps)`` around a point
``(x, alpha)`` and answers membership in

* the open set ``U_{k,eps}``: some ``f : [n] => [k]`` has ``y in U(f)`` and
  ``beta`` in ``W(g, eps)`` for every ``g >= f``;
* the closed variant ``U'_{k,eps}``: some ``f`` has ``y in U(f)`` and
  ``beta`` in the closure of ``W(f, eps)``.

Region tables are built lazily per degree by enumerating ``Hom([n], [k])``,
which is fine for the small degrees used by the compatibility checks.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .admissible import AdmissibleFamily, u_of_gamma
from .delta import degeneracy, face
from .gamma import GammaMor, enumerate_gamma, upper_set
from .geometry import (
    BaryPoint,
    IntervalFamily,
    LinSystem,
    pushforward,
    w_constraints,
    w_member_fast,
)
from .sampling import random_point
from .sset import FiniteSSet, Simplex, nondeg


@dataclass(eq=False)
class NbhdSystem:
    family: AdmissibleFamily
    intervals: IntervalFamily
    eps: Fraction
    _regions: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.eps = Fraction(self.eps)
        if not 0 < self.eps < 1:
            raise ValueError(f"eps={self.eps} outside ]0, 1[")
        if self.intervals.n != self.family.n:
            raise ValueError("interval family and admissible family disagree on n")

    @property
    def S(self) -> FiniteSSet:
        return self.family.S

    def regions(self, k: int) -> dict[Simplex, tuple[GammaMor, ...]]:
        """For every ``y`` in ``A_k`` the morphisms ``f`` with ``y in U(f)``."""
        hit = self._regions.get(k)
        if hit is None:
            table: dict[Simplex, list[GammaMor]] = {y: [] for y in self.S.simplices_of_degree(k)}
            for f in enumerate_gamma(self.family.n, k):
                for y in u_of_gamma(self.family, f):
                    table[y].append(f)
            hit = self._regions[k] = {y: tuple(fs) for y, fs in table.items()}
        return hit

    def piece(self, f: GammaMor) -> LinSystem:
        """``bigcap_{g >= f} W(g, eps)`` as one open linear system."""
        systems = [w_constraints(g, self.eps, self.intervals) for g in upper_set(f)]
        out = systems[0]
        for s in systems[1:]:
            out = out & s
        return out

    def member(self, k: int, y: Simplex, beta: BaryPoint, closed: bool = False) -> bool:
        if y.degree != k or len(beta) != k + 1:
            raise ValueError("degree mismatch between simplex, point and k")
        for f in self.regions(k)[y]:
            if closed:
                if w_member_fast(f, self.eps, self.intervals, True, beta):
                    return True
            elif all(w_member_fast(g, self.eps, self.intervals, False, beta) for g in upper_set(f)):
                return True
        return False


def build_regions(F: AdmissibleFamily, intervals: IntervalFamily, eps, kmax: int) -> NbhdSystem:
    nb = NbhdSystem(F, intervals, eps)
    for k in range(kmax + 1):
        nb.regions(k)
    return nb


def point_normal_form(S: FiniteSSet, y: Simplex, beta: BaryPoint) -> tuple[Simplex, BaryPoint]:
    """The unique representative with a non-degenerate cell and an interior point."""
    if len(beta) != y.degree + 1:
        raise ValueError("point and simplex degrees differ")
    while True:
        beta = pushforward(y.epi, beta)
        y = nondeg(y.cell, y.epi.cod)
        zeros = [j for j, c in enumerate(beta.coords) if c == 0]
        if not zeros:
            return y, beta
        j = zeros[0]
        p = y.degree
        beta = BaryPoint(beta.coords[:j] + beta.coords[j + 1:])
        y = S.apply(face(p - 1, j), y)


@dataclass
class CompatReport:
    kind: str
    k: int
    i: int
    closed: bool
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def cases(self) -> int:
        return self.checked

    @property
    def nviolations(self) -> int:
        return len(self.violations)

    def __str__(self):
        variant = "closed" if self.closed else "open"
        status = "ok" if self.ok else f"{len(self.violations)} violations"
        return f"compat-{self.kind} k={self.k} i={self.i} {variant}: {self.checked} cases, {status}"


def _probes(k: int, samples: int, rng) -> list[BaryPoint]:
    out = [BaryPoint(tuple(Fraction(int(q == p)) for q in range(k + 1))) for p in range(k + 1)]
    out.append(BaryPoint((Fraction(1, k + 1),) * (k + 1)))
    out += [random_point(k, rng) for _ in range(samples)]
    return out


def check_compat_face(nb: NbhdSystem, k: int, i: int, samples: int, rng, closed: bool = False) -> CompatReport:
    """``(y, (delta_i)_* beta)`` in the degree-``k`` set iff ``(d_i y, beta)`` in degree ``k-1``."""
    S = nb.S
    rep = CompatReport("face", k, i, closed)
    d = face(k - 1, i)
    probes = _probes(k - 1, samples, rng)
    for y in S.simplices_of_degree(k):
        dy = S.apply(d, y)
        for beta in probes:
            lhs = nb.member(k, y, pushforward(d, beta), closed)
            rhs = nb.member(k - 1, dy, beta, closed)
            rep.checked += 1
            if lhs != rhs:
                rep.violations.append((y, beta, lhs, rhs))
    return rep


def check_compat_degen(nb: NbhdSystem, k: int, i: int, samples: int, rng, closed: bool = False) -> CompatReport:
    """``(y, (sigma_i)_* beta)`` in degree ``k`` iff ``(s_i y, beta)`` in degree ``k+1``."""
    S = nb.S
    rep = CompatReport("degen", k, i, closed)
    s = degeneracy(k + 1, i)
    probes = _probes(k + 1, samples, rng)
    for y in S.simplices_of_degree(k):
        sy = S.apply(s, y)
        for beta in probes:
            lhs = nb.member(k, y, pushforward(s, beta), closed)
            rhs = nb.member(k + 1, sy, beta, closed)
            rep.checked += 1
            if lhs != rhs:
                rep.violations.append((y, beta, lhs, rhs))
    return rep
