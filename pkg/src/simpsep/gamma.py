"""Morphisms of the category of disjoint-union preserving maps ``P([k]) -> P([k'])``.

A morphism ``f : [k] => [k']`` is determined by its values on singletons, so it
is stored as the ordered tuple of blocks ``(f({0}), ..., f({k}))``.  Blocks are
non-empty and strictly ordered (``max(block j) < min(block j+1)``).

The module also carries the ``+i`` / ``-i`` calculus and the order generated by
``f -> f^{+i}``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Optional

from .delta import DeltaMor, face, is_epi, is_mono, mono_from_image


@dataclass(frozen=True)
class GammaMor:
    dom: int
    cod: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.blocks) != self.dom + 1:
            raise ValueError(f"expected {self.dom + 1} blocks, got {len(self.blocks)}")
        prev = -1
        for b in self.blocks:
            if not b:
                raise ValueError("blocks must be non-empty")
            if list(b) != sorted(set(b)):
                raise ValueError(f"block {b} must be sorted without repeats")
            if b[0] <= prev:
                raise ValueError(f"blocks not strictly ordered: {self.blocks}")
            if b[-1] > self.cod:
                raise ValueError(f"block {b} leaves [0, {self.cod}]")
            prev = b[-1]

    def __repr__(self):
        inner = ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"GammaMor([{self.dom}]=>[{self.cod}] {inner})"

    def sort_key(self):
        return tuple((b[0], b) for b in self.blocks)

    def __lt__(self, other):
        return (self.dom, self.cod, self.sort_key()) < (other.dom, other.cod, other.sort_key())

    @property
    def support(self) -> frozenset[int]:
        return frozenset(p for b in self.blocks for p in b)

    def labels(self) -> tuple[Optional[int], ...]:
        """Block index of every coordinate of ``[cod]`` (``None`` if uncovered)."""
        out: list[Optional[int]] = [None] * (self.cod + 1)
        for j, b in enumerate(self.blocks):
            for p in b:
                out[p] = j
        return tuple(out)

    def to_json(self) -> dict:
        return {"dom": self.dom, "cod": self.cod, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, doc: dict) -> "GammaMor":
        return cls(int(doc["dom"]), int(doc["cod"]), tuple(tuple(int(p) for p in b) for b in doc["blocks"]))


def gmor(blocks, cod: int) -> GammaMor:
    blocks = tuple(tuple(sorted(b)) for b in blocks)
    return GammaMor(len(blocks) - 1, cod, blocks)


def from_labels(labels, dom: int) -> GammaMor:
    blocks: list[list[int]] = [[] for _ in range(dom + 1)]
    for p, lab in enumerate(labels):
        if lab is not None:
            blocks[lab].append(p)
    return GammaMor(dom, len(labels) - 1, tuple(tuple(b) for b in blocks))


def gamma_identity(k: int) -> GammaMor:
    return GammaMor(k, k, tuple((j,) for j in range(k + 1)))


def eval_on(f: GammaMor, subset: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for j in subset:
        if not 0 <= j <= f.dom:
            raise ValueError(f"element {j} outside [0, {f.dom}]")
        out.update(f.blocks[j])
    return frozenset(out)


def is_onto(f: GammaMor) -> bool:
    return sum(len(b) for b in f.blocks) == f.cod + 1


def onto_to_epi(f: GammaMor) -> DeltaMor:
    if not is_onto(f):
        raise ValueError(f"{f!r} is not onto")
    return DeltaMor(f.cod, f.dom, f.labels())


def epi_to_onto(s: DeltaMor) -> GammaMor:
    if not is_epi(s):
        raise ValueError(f"{s!r} is not an epimorphism")
    return GammaMor(s.cod, s.dom, tuple(s.preimage(j) for j in range(s.cod + 1)))


def push_mono(d: DeltaMor, f: GammaMor) -> GammaMor:
    """``d_*(f)``: relabel the codomain of ``f`` along the mono ``d``."""
    if not is_mono(d):
        raise ValueError(f"{d!r} is not a monomorphism")
    if d.dom != f.cod:
        raise ValueError(f"dom(d)={d.dom} != cod(f)={f.cod}")
    im = d.images
    return GammaMor(f.dom, d.cod, tuple(tuple(im[p] for p in b) for b in f.blocks))


def red_sup(f: GammaMor) -> tuple[GammaMor, DeltaMor]:
    """Unique decomposition ``f = push_mono(sup, red)`` with ``red`` onto."""
    sup = mono_from_image(f.support, f.cod)
    rank = {v: r for r, v in enumerate(sup.images)}
    red = GammaMor(f.dom, sup.dom, tuple(tuple(rank[p] for p in b) for b in f.blocks))
    return red, sup


def count_at(f: GammaMor, i: int) -> int:
    """Size of the block containing ``i`` (0 when ``i`` is uncovered)."""
    if not 0 <= i <= f.cod:
        raise ValueError(f"index {i} outside [0, {f.cod}]")
    for b in f.blocks:
        if i in b:
            return len(b)
    return 0


def plus(f: GammaMor, i: int) -> Optional[GammaMor]:
    """``f^{+i}``, or ``None`` when neither attaching rule applies."""
    if not 0 <= i < f.cod:
        raise ValueError(f"index {i} outside [0, {f.cod - 1}]")
    ci, cn = count_at(f, i), count_at(f, i + 1)
    if ci == 0 and cn >= 1:
        new, anchor = i, i + 1
    elif ci >= 1 and cn == 0:
        new, anchor = i + 1, i
    else:
        return None
    blocks = tuple(tuple(sorted(b + (new,))) if anchor in b else b for b in f.blocks)
    return GammaMor(f.dom, f.cod, blocks)


def minus(f: GammaMor, i: int) -> Optional[GammaMor]:
    """``f_{-i}`` (delete coordinate ``i``), or ``None`` when ``#_f(i) == 1``."""
    if f.cod < 1:
        raise ValueError("cannot delete a coordinate of [0]")
    if count_at(f, i) == 1:
        return None
    blocks = tuple(tuple(p if p < i else p - 1 for p in b if p != i) for b in f.blocks)
    return GammaMor(f.dom, f.cod - 1, blocks)


def subset_leq(f: GammaMor, g: GammaMor) -> bool:
    _check_same_hom(f, g)
    return all(set(a) <= set(b) for a, b in zip(f.blocks, g.blocks))


def _check_same_hom(f: GammaMor, g: GammaMor):
    if (f.dom, f.cod) != (g.dom, g.cod):
        raise ValueError(f"{f!r} and {g!r} live in different hom-sets")


def successors(f: GammaMor) -> list[GammaMor]:
    out = []
    for i in range(f.cod):
        h = plus(f, i)
        if h is not None:
            out.append(h)
    return out


@lru_cache(maxsize=1 << 16)
def upper_set(f: GammaMor) -> tuple[GammaMor, ...]:
    """All ``g >= f`` by breadth-first search over ``+i`` steps, sorted."""
    seen = {f}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for s in successors(h):
            if s not in seen:
                seen.add(s)
                queue.append(s)
    return tuple(sorted(seen))


def leq(f: GammaMor, g: GammaMor) -> bool:
    _check_same_hom(f, g)
    if f == g:
        return True
    if not subset_leq(f, g):
        return False
    return g in _upper_frozen(f)


@lru_cache(maxsize=1 << 16)
def _upper_frozen(f: GammaMor) -> frozenset[GammaMor]:
    return frozenset(upper_set(f))


def iter_gamma(k: int, kp: int, onto_only: bool = False):
    """Hom-set ``[k] => [kp]`` in the canonical order."""
    out = []
    # choose a support, then cut it into k+1 consecutive runs
    sizes = [kp + 1] if onto_only else range(k + 1, kp + 2)
    for size in sizes:
        for support in combinations(range(kp + 1), size):
            for cuts in combinations(range(1, size), k):
                bounds = (0,) + cuts + (size,)
                blocks = tuple(support[bounds[j]:bounds[j + 1]] for j in range(k + 1))
                out.append(GammaMor(k, kp, blocks))
    out.sort(key=GammaMor.sort_key)
    return out


@lru_cache(maxsize=None)
def enumerate_gamma(k: int, kp: int, onto_only: bool = False) -> tuple[GammaMor, ...]:
    return tuple(iter_gamma(k, kp, onto_only))


@dataclass
class PosetCache:
    """The generating relation and its reflexive-transitive closure on one hom-set."""

    dom: int
    cod: int
    elements: tuple[GammaMor, ...] = field(init=False)
    edges: dict[GammaMor, tuple[GammaMor, ...]] = field(init=False)
    closure: dict[GammaMor, frozenset[GammaMor]] = field(init=False)

    def __post_init__(self):
        self.elements = enumerate_gamma(self.dom, self.cod)
        self.edges = {f: tuple(successors(f)) for f in self.elements}
        self.closure = {f: _upper_frozen(f) for f in self.elements}

    def leq(self, f: GammaMor, g: GammaMor) -> bool:
        return g in self.closure[f]

    def is_antisymmetric(self) -> bool:
        return all(
            f == g or f not in self.closure[g]
            for f in self.elements
            for g in self.closure[f]
        )

    def maximal(self) -> list[GammaMor]:
        return [f for f in self.elements if self.closure[f] == frozenset({f})]

    def edge_list(self) -> list[tuple[GammaMor, GammaMor]]:
        return [(f, g) for f in self.elements for g in self.edges[f]]


@lru_cache(maxsize=None)
def poset(k: int, kp: int) -> PosetCache:
    return PosetCache(k, kp)


def pushed_face(f: GammaMor, i: int) -> GammaMor:
    """``(delta_i)_*(f)`` for ``f : [k] => [k'-1]`` and ``i`` in ``[k']``."""
    return push_mono(face(f.cod, i), f)


def count_or_zero(f: GammaMor, i: int) -> int:
    """``#_f(i)`` with out-of-range coordinates counted as uncovered."""
    return count_at(f, i) if 0 <= i <= f.cod else 0
