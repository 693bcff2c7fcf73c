"""Finite simplicial sets stored in Eilenberg-Zilber normal form.

Only non-degenerate cells are stored.  Each face ``d_i(c)`` of a cell is kept
as a normal form ``(epi, cell)``, so faces of non-degenerate cells may be
degenerate.  Every simplex is a pair ``(epi, cell)`` with ``epi : [k] ->> [p]``
and ``cell`` non-degenerate of degree ``p``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .delta import (
    DeltaMor,
    compose,
    degeneracy,
    enumerate_morphisms,
    epi_mono_factor,
    face,
    identity,
    is_epi,
    is_identity,
)


class SSetError(ValueError):
    """Malformed simplicial set data."""


@dataclass(frozen=True, order=True)
class Simplex:
    epi: DeltaMor
    cell: str

    @property
    def degree(self) -> int:
        return self.epi.dom

    def __repr__(self):
        if is_identity(self.epi):
            return self.cell
        return f"{list(self.epi.images)}*{self.cell}"

    def to_json(self) -> dict:
        return {"epi": list(self.epi.images), "cell": self.cell}


def nondeg(cell: str, degree: int) -> Simplex:
    return Simplex(identity(degree), cell)


def is_degenerate(s: Simplex) -> bool:
    return not is_identity(s.epi)


@dataclass(eq=False)
class FiniteSSet:
    dim: int
    cells: dict[int, tuple[str, ...]]
    faces: dict[str, tuple[Simplex, ...]]
    name: str = ""
    degree_of: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.degree_of = {}
        for p, names in self.cells.items():
            for c in names:
                if c in self.degree_of:
                    raise SSetError(f"cell {c!r} declared twice")
                self.degree_of[c] = p
        self._apply = lru_cache(maxsize=1 << 18)(self._apply_uncached)
        self._check_references()
        self._key = json.dumps(self.to_json(), sort_keys=True)

    def _check_references(self):
        for c, p in self.degree_of.items():
            fs = self.faces.get(c, ())
            if p == 0:
                if fs:
                    raise SSetError(f"vertex {c!r} cannot have faces")
                continue
            if len(fs) != p + 1:
                raise SSetError(f"cell {c!r} of degree {p} needs {p + 1} faces, has {len(fs)}")
            for i, s in enumerate(fs):
                if s.cell not in self.degree_of:
                    raise SSetError(f"face d_{i}({c}) references unknown cell {s.cell!r}")
                if s.degree != p - 1:
                    raise SSetError(f"face d_{i}({c}) has degree {s.degree}, expected {p - 1}")
                if not is_epi(s.epi) or s.epi.cod != self.degree_of[s.cell]:
                    raise SSetError(f"face d_{i}({c}) is not in normal form")
        for c in self.faces:
            if c not in self.degree_of:
                raise SSetError(f"faces given for undeclared cell {c!r}")

    def __repr__(self):
        counts = tuple(len(self.cells.get(p, ())) for p in range(self.dim + 1))
        return f"FiniteSSet({self.name or '?'}, cells={counts})"

    # -- simplicial operators -------------------------------------------------

    def apply(self, delta: DeltaMor, s: Simplex) -> Simplex:
        """``delta^*(s)`` in normal form."""
        if delta.cod != s.degree:
            raise ValueError(f"cannot apply {delta!r} to a simplex of degree {s.degree}")
        return self._apply(delta, s)

    def _apply_uncached(self, delta: DeltaMor, s: Simplex) -> Simplex:
        epi, mono = epi_mono_factor(compose(s.epi, delta))
        inner = self._apply_mono(mono, s.cell)
        return Simplex(compose(inner.epi, epi), inner.cell)

    def _apply_mono(self, mono: DeltaMor, cell: str) -> Simplex:
        p = mono.cod
        if mono.dom == p:
            return nondeg(cell, p)
        # write mono = face(p-1, j) o rest with j a value outside the image
        img = set(mono.images)
        j = next(v for v in range(p + 1) if v not in img)
        rest = DeltaMor(mono.dom, p - 1, tuple(v if v < j else v - 1 for v in mono.images))
        return self.apply(rest, self.faces[cell][j])

    def d(self, i: int, s: Simplex) -> Simplex:
        return self.apply(face(s.degree - 1, i), s)

    def s(self, i: int, s: Simplex) -> Simplex:
        return self.apply(degeneracy(s.degree + 1, i), s)

    # -- enumeration ------------------------------------------------------------

    def nondegenerate(self, p: int | None = None) -> list[Simplex]:
        ps = range(self.dim + 1) if p is None else [p]
        return [nondeg(c, q) for q in ps for c in self.cells.get(q, ())]

    def simplices_of_degree(self, k: int) -> tuple[Simplex, ...]:
        return _simplices(self, k)

    def validate(self) -> list[tuple[str, int, int]]:
        """Offending ``(cell, i, j)`` for which ``d_i d_j != d_{j-1} d_i`` (``i < j``)."""
        bad = []
        for x in self.nondegenerate():
            p = x.degree
            if p < 2:
                continue
            for i, j in combinations(range(p + 1), 2):
                if self.d(i, self.d(j, x)) != self.d(j - 1, self.d(i, x)):
                    bad.append((x.cell, i, j))
        return bad

    # -- serialization -----------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "cells": {str(p): list(self.cells.get(p, ())) for p in range(self.dim + 1)},
            "faces": {
                c: [{"epi": s.epi.to_json(), "cell": s.cell} for s in self.faces[c]]
                for p in range(1, self.dim + 1)
                for c in self.cells.get(p, ())
            },
        }

    def __eq__(self, other):
        return isinstance(other, FiniteSSet) and self._key == other._key

    def __hash__(self):
        return hash(self._key)


@lru_cache(maxsize=None)
def _simplices(S: FiniteSSet, k: int) -> tuple[Simplex, ...]:
    out = []
    for p in range(min(k, S.dim) + 1):
        for epi in enumerate_morphisms(k, p, "epi"):
            for c in S.cells.get(p, ()):
                out.append(Simplex(epi, c))
    return tuple(out)


def load_json(doc) -> FiniteSSet:
    """Build and validate a simplicial set from its JSON document (dict or text)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    try:
        dim = int(doc["dim"])
        cells = {int(p): tuple(str(c) for c in names) for p, names in doc["cells"].items()}
        faces = {}
        for c, entries in doc.get("faces", {}).items():
            faces[c] = tuple(Simplex(DeltaMor.from_json(e["epi"]), str(e["cell"])) for e in entries)
    except (KeyError, TypeError, ValueError) as exc:
        raise SSetError(f"schema violation: {exc}") from exc
    if any(p > dim or p < 0 for p in cells):
        raise SSetError("cell degree outside [0, dim]")
    S = FiniteSSet(dim, cells, faces, name=str(doc.get("name", "")))
    bad = S.validate()
    if bad:
        c, i, j = bad[0]
        raise SSetError(f"simplicial identity d_{i} d_{j} = d_{j - 1} d_{i} fails on {c!r}")
    return S


def _subset_name(sub) -> str:
    digits = "".join(map(str, sub)) if max(sub) < 10 else "_".join(map(str, sub))
    prefix = {1: "v", 2: "e", 3: "t"}.get(len(sub), "s")
    return prefix + digits


def _subset_complex(n: int, keep) -> FiniteSSet:
    subsets = [sub for p in range(n + 1) for sub in combinations(range(n + 1), p + 1) if keep(sub)]
    cells: dict[int, list[str]] = {}
    faces = {}
    for sub in subsets:
        p = len(sub) - 1
        cells.setdefault(p, []).append(_subset_name(sub))
        if p:
            faces[_subset_name(sub)] = tuple(
                nondeg(_subset_name(sub[:i] + sub[i + 1:]), p - 1) for i in range(p + 1)
            )
    dim = max(cells)
    return FiniteSSet(dim, {p: tuple(v) for p, v in cells.items()}, faces)


def standard_simplex(n: int) -> FiniteSSet:
    S = _subset_complex(n, lambda sub: True)
    S.name = f"delta{n}"
    return S


def boundary(n: int) -> FiniteSSet:
    if n < 1:
        raise ValueError("the boundary of Delta[0] is empty")
    S = _subset_complex(n, lambda sub: len(sub) <= n)
    S.name = f"boundary{n}"
    return S


def circle() -> FiniteSSet:
    """One vertex and one edge with both faces at that vertex."""
    v = nondeg("v", 0)
    return FiniteSSet(1, {0: ("v",), 1: ("e",)}, {"e": (v, v)}, name="circle")


def collapsed_triangle() -> FiniteSSet:
    """``Delta[2]`` with the edge ``e12`` collapsed to a degenerate face."""
    v = {i: nondeg(f"v{i}", 0) for i in range(2)}
    e01, e02 = nondeg("e01", 1), nondeg("e02", 1)
    degen = Simplex(DeltaMor(1, 0, (0, 0)), "v1")
    faces = {
        "e01": (v[1], v[0]),
        "e02": (v[1], v[0]),
        "t012": (degen, e02, e01),
    }
    return FiniteSSet(2, {0: ("v0", "v1"), 1: ("e01", "e02"), 2: ("t012",)}, faces, name="collapsed")


BUILTIN = {
    "delta0": lambda: standard_simplex(0),
    "delta1": lambda: standard_simplex(1),
    "delta2": lambda: standard_simplex(2),
    "delta3": lambda: standard_simplex(3),
    "boundary2": lambda: boundary(2),
    "boundary3": lambda: boundary(3),
    "circle": circle,
    "collapsed": collapsed_triangle,
}


def resolve(name_or_path: str) -> FiniteSSet:
    """A builtin name such as ``boundary2`` or a path to a JSON document."""
    if name_or_path in BUILTIN:
        return BUILTIN[name_or_path]()
    with open(name_or_path) as fh:
        return load_json(json.load(fh))
