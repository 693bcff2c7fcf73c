"""Exact algebra of the simplicial category.

Objects are identified with their degree ``k`` (standing for ``[k] = {0..k}``);
a morphism is a non-decreasing map stored as its tuple of images.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True, order=True)
class DeltaMor:
    dom: int
    cod: int
    images: tuple[int, ...]

    def __post_init__(self):
        if self.dom < 0 or self.cod < 0:
            raise ValueError("degrees must be non-negative")
        if len(self.images) != self.dom + 1:
            raise ValueError(f"expected {self.dom + 1} images, got {len(self.images)}")
        prev = 0
        for v in self.images:
            if not 0 <= v <= self.cod:
                raise ValueError(f"image {v} outside [0, {self.cod}]")
            if v < prev:
                raise ValueError(f"images not monotone: {self.images}")
            prev = v

    def __call__(self, j: int) -> int:
        return self.images[j]

    def __repr__(self):
        return f"DeltaMor([{self.dom}]->[{self.cod}] {list(self.images)})"

    def to_json(self) -> dict:
        return {"dom": self.dom, "cod": self.cod, "images": list(self.images)}

    @classmethod
    def from_json(cls, doc: dict) -> "DeltaMor":
        return cls(int(doc["dom"]), int(doc["cod"]), tuple(int(v) for v in doc["images"]))

    def preimage(self, j: int) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images) if v == j)

    @property
    def image_set(self) -> frozenset[int]:
        return frozenset(self.images)


def mor(images, cod: int | None = None) -> DeltaMor:
    """Shorthand constructor; the codomain defaults to ``max(images)``."""
    images = tuple(images)
    if cod is None:
        cod = max(images)
    return DeltaMor(len(images) - 1, cod, images)


@lru_cache(maxsize=None)
def identity(k: int) -> DeltaMor:
    return DeltaMor(k, k, tuple(range(k + 1)))


@lru_cache(maxsize=None)
def face(k: int, i: int) -> DeltaMor:
    """The coface ``[k] -> [k+1]`` skipping ``i``."""
    if not 0 <= i <= k + 1:
        raise ValueError(f"face index {i} out of range for degree {k}")
    return DeltaMor(k, k + 1, tuple(j if j < i else j + 1 for j in range(k + 1)))


@lru_cache(maxsize=None)
def degeneracy(k: int, i: int) -> DeltaMor:
    """The codegeneracy ``[k] -> [k-1]`` hitting ``i`` twice."""
    if k < 1 or not 0 <= i <= k - 1:
        raise ValueError(f"degeneracy index {i} out of range for degree {k}")
    return DeltaMor(k, k - 1, tuple(j if j <= i else j - 1 for j in range(k + 1)))


def compose(g: DeltaMor, f: DeltaMor) -> DeltaMor:
    """``g o f``."""
    if f.cod != g.dom:
        raise ValueError(f"cannot compose: cod(f)={f.cod} != dom(g)={g.dom}")
    gi = g.images
    return DeltaMor(f.dom, g.cod, tuple(gi[v] for v in f.images))


def is_epi(f: DeltaMor) -> bool:
    return f.images[0] == 0 and f.images[-1] == f.cod and all(
        b - a <= 1 for a, b in zip(f.images, f.images[1:])
    )


def is_mono(f: DeltaMor) -> bool:
    return all(a < b for a, b in zip(f.images, f.images[1:]))


def is_identity(f: DeltaMor) -> bool:
    return f.dom == f.cod and f.images == tuple(range(f.dom + 1))


@lru_cache(maxsize=1 << 16)
def epi_mono_factor(f: DeltaMor) -> tuple[DeltaMor, DeltaMor]:
    """Return ``(epi, mono)`` with ``f == compose(mono, epi)``."""
    values = sorted(set(f.images))
    rank = {v: r for r, v in enumerate(values)}
    r = len(values) - 1
    epi = DeltaMor(f.dom, r, tuple(rank[v] for v in f.images))
    mono = DeltaMor(r, f.cod, tuple(values))
    return epi, mono


def section_of_epi(s: DeltaMor) -> DeltaMor:
    """The min-preimage section of an epimorphism."""
    if not is_epi(s):
        raise ValueError(f"{s!r} is not an epimorphism")
    firsts = []
    for i, v in enumerate(s.images):
        if len(firsts) == v:
            firsts.append(i)
    return DeltaMor(s.cod, s.dom, tuple(firsts))


def mono_from_image(image, cod: int) -> DeltaMor:
    image = tuple(sorted(image))
    return DeltaMor(len(image) - 1, cod, image)


def epi_from_cuts(dom: int, cuts) -> DeltaMor:
    """Epi ``[dom] ->> [len(cuts)]`` stepping up right before each cut position."""
    cuts = set(cuts)
    images, v = [], 0
    for j in range(dom + 1):
        if j in cuts:
            v += 1
        images.append(v)
    return DeltaMor(dom, v, tuple(images))


def iter_morphisms(k: int, kp: int, kind: str = "all") -> Iterator[DeltaMor]:
    """Lexicographic iteration over ``Hom([k], [kp])`` restricted by ``kind``."""
    if kind == "all":
        for imgs in combinations_with_replacement(range(kp + 1), k + 1):
            yield DeltaMor(k, kp, imgs)
    elif kind == "mono":
        for imgs in combinations(range(kp + 1), k + 1):
            yield DeltaMor(k, kp, imgs)
    elif kind == "epi":
        # an epi is fixed by the kp positions (among 1..k) where it steps up
        for cuts in combinations(range(1, k + 1), kp):
            yield epi_from_cuts(k, cuts)
    else:
        raise ValueError(f"unknown kind {kind!r}")


@lru_cache(maxsize=None)
def enumerate_morphisms(k: int, kp: int, kind: str = "all") -> tuple[DeltaMor, ...]:
    return tuple(iter_morphisms(k, kp, kind))


def generator_decomposition(f: DeltaMor) -> list[tuple[str, int, int]]:
    """Standard factorization ``f = d_{i_1} ... d_{i_s} s_{j_1} ... s_{j_t}``.

    Returned in order of application (rightmost first) as ``(kind, degree, index)``
    triples, where ``degree`` is the source degree of each generator.
    """
    epi, mono = epi_mono_factor(f)
    steps = []
    # degeneracies: collapse repeated values from the right
    images = list(epi.images)
    deg = epi.dom
    for j in range(len(images) - 2, -1, -1):
        if images[j] == images[j + 1]:
            steps.append(("s", deg, j))
            deg -= 1
    # faces: insert the missing values in increasing order
    missing = sorted(set(range(mono.cod + 1)) - set(mono.images))
    deg = mono.dom
    for i in missing:
        steps.append(("d", deg, i))
        deg += 1
    return steps


def compose_generators(steps, start: int) -> DeltaMor:
    out = identity(start)
    for kind, deg, idx in steps:
        gen = face(deg, idx) if kind == "d" else degeneracy(deg, idx)
        out = compose(gen, out)
    return out
