"""Exact feasibility of mixed strict/weak rational linear systems.

Equalities are substituted away first, then variables are eliminated by
Fourier-Motzkin.  Combining two bounds yields a strict row as soon as either
bound is strict.  A witness is rebuilt by back-substitution, picking the
midpoint of the residual interval for every variable.

Two standard devices keep elimination small: the next variable is the one
producing the fewest new rows, and Chernikov's rule drops a derived row whose
set of contributing input rows has more than ``s + 1`` members after ``s``
eliminations.  Such a row is a sum of rows with smaller contributing sets
that jointly cover its own, so strictness is never lost by dropping it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .geometry import EQ, LT, LinSystem

FEASIBLE, INFEASIBLE = "feasible", "infeasible"

# internal row: (coeffs, strict, rhs, history) meaning  coeffs.x < rhs  (or <=);
# history is a bitmask of the input inequalities combined into the row
_Row = tuple[tuple[Fraction, ...], bool, Fraction, int]


@dataclass(frozen=True)
class FeasibilityResult:
    status: str
    witness: Optional[tuple[Fraction, ...]] = None
    eliminated: int = 0
    max_rows: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == FEASIBLE

    def __bool__(self):
        return self.feasible


def _normalize(coeffs, strict, rhs, hist) -> _Row:
    for c in coeffs:
        if c:
            scale = abs(c)
            if scale != 1:
                coeffs = tuple(v / scale for v in coeffs)
                rhs = rhs / scale
            break
    return tuple(coeffs), strict, rhs, hist


def _tighter(a: _Row, b: _Row) -> bool:
    """``a`` implies ``b`` (same direction) and was built from a subset of ``b``'s inputs."""
    if a[3] & ~b[3]:
        return False
    return a[2] < b[2] or (a[2] == b[2] and (a[1] or not b[1]))


def _prune(rows: list[_Row]) -> Optional[list[_Row]]:
    """Drop trivial rows and rows dominated by a tighter row with fewer inputs.

    Dominance also requires the history to shrink; otherwise a tighter row
    with a larger history could push its descendants over Chernikov's bound
    and lose information.  Returns ``None`` if a constant row is violated.
    """
    best: dict[tuple[Fraction, ...], list[_Row]] = {}
    for coeffs, strict, rhs, hist in rows:
        if not any(coeffs):
            if rhs < 0 or (strict and rhs == 0):
                return None
            continue
        r = _normalize(coeffs, strict, rhs, hist)
        kept = best.setdefault(r[0], [])
        if any(_tighter(k, r) for k in kept):
            continue
        kept[:] = [k for k in kept if not _tighter(r, k)]
        kept.append(r)
    return [r for kept in best.values() for r in kept]


def _substitute(rows: list[_Row], var: int, expr: tuple[tuple[Fraction, ...], Fraction]) -> list[_Row]:
    """Replace ``x_var`` by ``expr_coeffs . x + expr_const`` in every row."""
    ecoef, econst = expr
    out = []
    for coeffs, strict, rhs, hist in rows:
        c = coeffs[var]
        if not c:
            out.append((coeffs, strict, rhs, hist))
            continue
        new = tuple(
            (0 if j == var else coeffs[j]) + c * ecoef[j] for j in range(len(coeffs))
        )
        out.append((new, strict, rhs - c * econst, hist))
    return out


def _split(rows: list[_Row], var: int):
    upper, lower, rest = [], [], []
    for r in rows:
        c = r[0][var]
        if c > 0:
            upper.append(r)
        elif c < 0:
            lower.append(r)
        else:
            rest.append(r)
    return upper, lower, rest


def _eliminate(rows: list[_Row], var: int, limit: int) -> list[_Row]:
    """Fourier-Motzkin step; combined rows with more than ``limit`` ancestors are implied and skipped."""
    upper, lower, rest = _split(rows, var)
    out = list(rest)
    for cu, su, ru, hu in upper:
        a = cu[var]
        for cl, sl, rl, hl in lower:
            hist = hu | hl
            if hist.bit_count() > limit:
                continue
            b = -cl[var]
            coeffs = tuple(b * x + a * y for x, y in zip(cu, cl))
            out.append((coeffs, su or sl, b * ru + a * rl, hist))
    return out


def _cost(rows: list[_Row], var: int) -> int:
    up = sum(1 for r in rows if r[0][var] > 0)
    lo = sum(1 for r in rows if r[0][var] < 0)
    return up * lo - up - lo


def _pick(rows: list[_Row], var: int, x: list[Fraction]) -> Fraction:
    """A value for ``x_var`` satisfying every row given the already-fixed others."""
    lo: Optional[Fraction] = None
    lo_strict = False
    hi: Optional[Fraction] = None
    hi_strict = False
    for coeffs, strict, rhs, _ in rows:
        c = coeffs[var]
        if not c:
            continue
        rest = sum((coeffs[j] * x[j] for j in range(len(coeffs)) if j != var and coeffs[j]), Fraction(0))
        bound = (rhs - rest) / c
        if c > 0:
            if hi is None or bound < hi or (bound == hi and strict):
                hi, hi_strict = bound, strict
        else:
            if lo is None or bound > lo or (bound == lo and strict):
                lo, lo_strict = bound, strict
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi - 1 if hi_strict else hi
    if hi is None:
        return lo + 1 if lo_strict else lo
    if lo == hi:
        return lo
    return (lo + hi) / 2


def feasible(sys: LinSystem, order: Optional[Sequence[int]] = None) -> FeasibilityResult:
    """Decide whether ``sys`` has a real (equivalently rational) solution.

    ``order`` fixes the elimination order; by default it is chosen greedily.
    """
    n = sys.nvars
    rows: list[_Row] = []
    equalities = []
    for r in sys.rows:
        if r.rel == EQ:
            equalities.append((r.coeffs, r.rhs))
        else:
            rows.append((r.coeffs, r.rel == LT, r.rhs, 1 << len(rows)))

    # equalities: solve each for one variable and substitute everywhere
    substitutions: list[tuple[int, tuple[tuple[Fraction, ...], Fraction]]] = []
    pending = list(equalities)
    while pending:
        coeffs, rhs = pending.pop(0)
        pivot = next((j for j, c in enumerate(coeffs) if c), None)
        if pivot is None:
            if rhs != 0:
                return FeasibilityResult(INFEASIBLE)
            continue
        c = coeffs[pivot]
        expr = (tuple(Fraction(0) if j == pivot else -coeffs[j] / c for j in range(n)), rhs / c)
        substitutions.append((pivot, expr))
        rows = _substitute(rows, pivot, expr)
        new_pending = []
        for pc, pr in pending:
            pc_row = _substitute([(pc, False, pr, 0)], pivot, expr)[0]
            new_pending.append((pc_row[0], pc_row[2]))
        pending = new_pending
        substitutions = [
            (v, _substitute_expr(e, pivot, expr)) for v, e in substitutions
        ]

    pruned = _prune(rows)
    if pruned is None:
        return FeasibilityResult(INFEASIBLE)
    rows = pruned
    fixed = {v for v, _ in substitutions}
    free = [j for j in (order if order is not None else range(n)) if j not in fixed]

    stages: list[tuple[int, list[_Row]]] = []
    max_rows = len(rows)
    while free:
        var = free[0] if order is not None else min(free, key=lambda v: _cost(rows, v))
        free.remove(var)
        stages.append((var, rows))
        rows = _prune(_eliminate(rows, var, len(stages) + 1))
        if rows is None:
            return FeasibilityResult(INFEASIBLE, eliminated=len(stages), max_rows=max_rows)
        max_rows = max(max_rows, len(rows))

    x = [Fraction(0)] * n
    for var, stage_rows in reversed(stages):
        x[var] = _pick(stage_rows, var, x)
    for var, (ecoef, econst) in reversed(substitutions):
        x[var] = econst + sum((ecoef[j] * x[j] for j in range(n) if ecoef[j]), Fraction(0))
    witness = tuple(x)
    if not sys.holds(witness):
        raise AssertionError(f"witness {witness} fails the system it was built for")
    return FeasibilityResult(FEASIBLE, witness, eliminated=len(stages), max_rows=max_rows)


def _substitute_expr(e, var, expr):
    coeffs, const = e
    c = coeffs[var]
    if not c:
        return e
    ecoef, econst = expr
    new = tuple((0 if j == var else coeffs[j]) + c * ecoef[j] for j in range(len(coeffs)))
    return new, const + c * econst


def disjoint(a: LinSystem, b: LinSystem) -> FeasibilityResult:
    """Feasibility of ``a`` and ``b`` together; infeasible means the polyhedra are disjoint."""
    return feasible(a & b)
