"""Exact barycentric geometry on standard simplices and the W-polytopes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .delta import DeltaMor
from .gamma import GammaMor
from .rational import fmt, parse_rational

LT, LE, EQ = "<", "<=", "="
RELATIONS = (LT, LE, EQ)


@dataclass(frozen=True)
class BaryPoint:
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if not coords:
            raise ValueError("a point needs at least one coordinate")
        if any(c < 0 for c in coords):
            raise ValueError(f"negative barycentric coordinate in {coords}")
        if sum(coords) != 1:
            raise ValueError(f"coordinates sum to {sum(coords)}, not 1")

    @property
    def dim(self) -> int:
        return len(self.coords) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return "(" + ",".join(fmt(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [fmt(c) for c in self.coords]

    @classmethod
    def from_json(cls, doc) -> "BaryPoint":
        return cls(tuple(parse_rational(c) for c in doc))


def point(*coords) -> BaryPoint:
    return BaryPoint(tuple(parse_rational(c) if isinstance(c, str) else Fraction(c) for c in coords))


def vertex(k: int, p: int) -> BaryPoint:
    return BaryPoint(tuple(Fraction(int(i == p)) for i in range(k + 1)))


def barycenter(k: int) -> BaryPoint:
    return BaryPoint((Fraction(1, k + 1),) * (k + 1))


def pushforward(d: DeltaMor, t: BaryPoint) -> BaryPoint:
    """``Delta^*(d)``: coordinate ``j`` of the image is the mass of ``d^{-1}(j)``."""
    if len(t) != d.dom + 1:
        raise ValueError(f"point has {len(t)} coordinates, map expects {d.dom + 1}")
    out = [Fraction(0)] * (d.cod + 1)
    for i, v in enumerate(d.images):
        out[v] += t.coords[i]
    return BaryPoint(tuple(out))


def is_interior(t: BaryPoint) -> bool:
    return all(c > 0 for c in t.coords)


def lambda_ratios(alpha: BaryPoint) -> dict[tuple[int, int], Fraction]:
    if not is_interior(alpha):
        raise ValueError(f"{alpha!r} is on the boundary")
    c = alpha.coords
    return {(i, j): c[j] / c[i] for i, j in combinations(range(len(c)), 2)}


@dataclass(frozen=True)
class IntervalFamily:
    """Open intervals ``(a_ij, b_ij)`` in ``]0, +inf[`` indexed by pairs ``i < j`` of ``[n]``."""

    n: int
    bounds: tuple[tuple[tuple[int, int], Fraction, Fraction], ...]

    def __post_init__(self):
        pairs = [(i, j) for (i, j), _, _ in self.bounds]
        if sorted(pairs) != list(combinations(range(self.n + 1), 2)):
            raise ValueError("bounds must cover every pair i < j exactly once")
        for (i, j), a, b in self.bounds:
            if not 0 < a < b:
                raise ValueError(f"interval ({a}, {b}) at {(i, j)} is not inside ]0, +inf[")

    def interval(self, i: int, j: int) -> tuple[Fraction, Fraction]:
        for pair, a, b in self.bounds:
            if pair == (i, j):
                return a, b
        raise KeyError((i, j))

    def as_dict(self) -> dict[tuple[int, int], tuple[Fraction, Fraction]]:
        return {pair: (a, b) for pair, a, b in self.bounds}

    def contains(self, i: int, j: int, value: Fraction, closed: bool = False) -> bool:
        a, b = self.interval(i, j)
        return a <= value <= b if closed else a < value < b

    def to_json(self) -> dict:
        return {f"{i},{j}": [fmt(a), fmt(b)] for (i, j), a, b in self.bounds}

    @classmethod
    def from_json(cls, n: int, doc: dict) -> "IntervalFamily":
        bounds = []
        for key, (a, b) in doc.items():
            i, j = (int(v) for v in key.split(","))
            bounds.append(((i, j), parse_rational(a), parse_rational(b)))
        return cls(n, tuple(sorted(bounds)))


def family_from_windows(n: int, windows: dict) -> IntervalFamily:
    return IntervalFamily(n, tuple(sorted((pair, Fraction(a), Fraction(b)) for pair, (a, b) in windows.items())))


def make_admissible(alpha: BaryPoint, spread=Fraction(2)) -> IntervalFamily:
    """Intervals ``(lambda / spread, lambda * spread)`` around every ratio of ``alpha``."""
    spread = Fraction(spread)
    if spread <= 1:
        raise ValueError("spread must exceed 1")
    lam = lambda_ratios(alpha)
    return IntervalFamily(alpha.dim, tuple((pair, v / spread, v * spread) for pair, v in sorted(lam.items())))


def spread_schedule(depth: int = 64):
    """Spreads ``2, 3/2, 4/3, ...`` used when intervals must be shrunk."""
    for j in range(1, depth + 1):
        yield 1 + Fraction(1, j)


def make_disjoint_pair(alpha: BaryPoint, beta: BaryPoint, k: int, l: int, depth: int = 1 << 12):
    """Admissible families for ``alpha`` and ``beta`` whose closed ``(k, l)`` windows are disjoint."""
    if alpha.dim != beta.dim:
        raise ValueError("points live in different simplices")
    la, lb = lambda_ratios(alpha)[(k, l)], lambda_ratios(beta)[(k, l)]
    if la == lb:
        raise ValueError(f"ratios agree at {(k, l)}; no separating windows exist")
    lo, hi = min(la, lb), max(la, lb)
    for s in spread_schedule(depth):
        if lo * s < hi / s:
            return make_admissible(alpha, s), make_admissible(beta, s)
    raise ValueError("spread schedule exhausted")


# ---------------------------------------------------------------------------
# linear systems


@dataclass(frozen=True)
class Row:
    coeffs: tuple[Fraction, ...]
    rel: str
    rhs: Fraction

    def holds(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((c * v for c, v in zip(self.coeffs, x) if c), Fraction(0))
        if self.rel == LT:
            return lhs < self.rhs
        if self.rel == LE:
            return lhs <= self.rhs
        return lhs == self.rhs

    def __str__(self):
        terms = [f"{fmt(c)}*x{i}" for i, c in enumerate(self.coeffs) if c]
        return f"{' + '.join(terms) or '0'} {self.rel} {fmt(self.rhs)}"


@dataclass(frozen=True)
class LinSystem:
    nvars: int
    rows: tuple[Row, ...] = ()

    def __post_init__(self):
        for r in self.rows:
            if len(r.coeffs) != self.nvars:
                raise ValueError(f"row has {len(r.coeffs)} coefficients, system has {self.nvars} variables")
            if r.rel not in RELATIONS:
                raise ValueError(f"unknown relation {r.rel!r}")

    def holds(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.nvars:
            raise ValueError(f"point has {len(x)} coordinates, system has {self.nvars} variables")
        return all(r.holds(x) for r in self.rows)

    def __and__(self, other: "LinSystem") -> "LinSystem":
        if self.nvars != other.nvars:
            raise ValueError(f"variable counts differ: {self.nvars} vs {other.nvars}")
        return LinSystem(self.nvars, self.rows + other.rows)

    def __str__(self):
        return "\n".join(str(r) for r in self.rows) or "(empty system)"


def row(coeffs: Iterable, rel: str, rhs) -> Row:
    return Row(tuple(Fraction(c) for c in coeffs), rel, Fraction(rhs))


def simplex_rows(nvars: int) -> list[Row]:
    rows = [row([-1 if p == q else 0 for q in range(nvars)], LE, 0) for p in range(nvars)]
    rows.append(row([1] * nvars, EQ, 1))
    return rows


def _check_eps(eps) -> Fraction:
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"eps={eps} outside ]0, 1[")
    return eps


def w_constraints(f: GammaMor, eps, family: IntervalFamily, closed: bool = False) -> LinSystem:
    """The polytope ``W(f, eps)`` (or its closure) in ``Delta^{cod f}`` as a linear system.

    The closed form drops the block-positivity rows; they follow from the weak
    ratio rows and the mass row.
    """
    eps = _check_eps(eps)
    if family.n != f.dom:
        raise ValueError(f"interval family has degree {family.n}, morphism has {f.dom}")
    nv = f.cod + 1

    def indicator(block):
        members = set(block)
        return [1 if p in members else 0 for p in range(nv)]

    sums = [indicator(b) for b in f.blocks]
    rows = []
    strict = LE if closed else LT
    if not closed:
        rows += [row([-c for c in s], LT, 0) for s in sums]
    for (i, j), a, b in family.bounds:
        # a * S_i < S_j < b * S_i
        rows.append(row([a * si - sj for si, sj in zip(sums[i], sums[j])], strict, 0))
        rows.append(row([sj - b * si for si, sj in zip(sums[i], sums[j])], strict, 0))
    covered = indicator(f.support)
    rows.append(row([-c for c in covered], strict, eps - 1))
    rows += simplex_rows(nv)
    return LinSystem(nv, tuple(rows))


def w_member(f: GammaMor, eps, family: IntervalFamily, closed: bool, t: BaryPoint) -> bool:
    if len(t) != f.cod + 1:
        raise ValueError(f"point has {len(t)} coordinates, expected {f.cod + 1}")
    return w_constraints(f, eps, family, closed).holds(t.coords)


def block_sums(f: GammaMor, t: BaryPoint) -> list[Fraction]:
    c = t.coords
    return [sum((c[p] for p in b), Fraction(0)) for b in f.blocks]


def w_member_fast(f: GammaMor, eps: Fraction, family: IntervalFamily, closed: bool, t: BaryPoint) -> bool:
    """Same predicate as :func:`w_member`, evaluated on block sums directly."""
    sums = block_sums(f, t)
    if closed:
        if sum(sums) < 1 - eps:
            return False
        for (i, j), a, b in family.bounds:
            if not a * sums[i] <= sums[j] <= b * sums[i]:
                return False
        return True
    if any(s <= 0 for s in sums) or sum(sums) <= 1 - eps:
        return False
    for (i, j), a, b in family.bounds:
        if not a * sums[i] < sums[j] < b * sums[i]:
            return False
    return True
