"""Admissible families around a non-degenerate simplex and the sets built from them.

All sets are explicit finite subsets of the (discrete) sets of simplices
``A_k`` of a :class:`~simpsep.sset.FiniteSSet`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .delta import (
    DeltaMor,
    compose,
    enumerate_morphisms,
    is_epi,
)
from .gamma import GammaMor, onto_to_epi, red_sup
from .sset import FiniteSSet, Simplex, is_degenerate


def factors_through(sigma: DeltaMor, tau: DeltaMor) -> bool:
    """Whether ``sigma == rho o tau`` for some ``rho`` (necessarily an epi)."""
    if sigma.dom != tau.dom:
        raise ValueError("sigma and tau must share their domain")
    s, t = sigma.images, tau.images
    return all(s[i] == s[i + 1] for i in range(len(t) - 1) if t[i] == t[i + 1])


def kernel_refines(sigma: DeltaMor, tau: DeltaMor) -> bool:
    """``tau(i) == tau(j)  =>  sigma(i) == sigma(j)`` over all pairs."""
    n = sigma.dom + 1
    return all(
        sigma.images[i] == sigma.images[j]
        for i in range(n)
        for j in range(n)
        if tau.images[i] == tau.images[j]
    )


@dataclass(eq=False)
class AdmissibleFamily:
    S: FiniteSSet
    x: Simplex
    N: int
    table: dict[DeltaMor, frozenset[Simplex]]
    kind: str = "custom"
    _extended: dict = field(default_factory=dict, repr=False)
    _u_epi: dict = field(default_factory=dict, repr=False)
    _u_gamma: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.x.degree

    def epis(self) -> tuple[DeltaMor, ...]:
        return enumerate_morphisms(self.N, self.n, "epi")

    def to_json(self) -> dict:
        return {
            "x": self.x.cell,
            "n": self.n,
            "N": self.N,
            "kind": self.kind,
            "table": [
                {"sigma": list(s.images), "U": [z.to_json() for z in sorted(self.table[s])]}
                for s in self.epis()
            ],
        }


def _check_base(S: FiniteSSet, x: Simplex, N: int):
    if is_degenerate(x):
        raise ValueError(f"{x!r} is degenerate")
    if x.cell not in S.degree_of:
        raise ValueError(f"unknown cell {x.cell!r}")
    if N < x.degree:
        raise ValueError(f"N={N} is below the degree {x.degree} of {x!r}")


def build_singleton(S: FiniteSSet, x: Simplex, N: int) -> AdmissibleFamily:
    """``U_sigma = {sigma^*(x)}`` for every epi ``sigma : [N] ->> [n]``."""
    _check_base(S, x, N)
    table = {s: frozenset({S.apply(s, x)}) for s in enumerate_morphisms(N, x.degree, "epi")}
    return AdmissibleFamily(S, x, N, table, kind="singleton")


def build_complement(S: FiniteSSet, x: Simplex, N: int) -> AdmissibleFamily:
    """``U_sigma`` = everything in ``A_N`` outside the images of non-factoring epis."""
    _check_base(S, x, N)
    A_N = S.simplices_of_degree(N)
    table = {}
    for sigma in enumerate_morphisms(N, x.degree, "epi"):
        bad: set[Simplex] = set()
        for m in range(N + 1):
            for tau in enumerate_morphisms(N, m, "epi"):
                if not factors_through(sigma, tau):
                    bad.update(S.apply(tau, w) for w in S.simplices_of_degree(m))
        table[sigma] = frozenset(z for z in A_N if z not in bad)
    return AdmissibleFamily(S, x, N, table, kind="complement")


def admissibility_violations(F: AdmissibleFamily) -> list[str]:
    """Both axioms checked by enumeration; an empty list means the family is admissible."""
    S, x, N = F.S, F.x, F.N
    out = []
    for sigma in F.epis():
        U = F.table[sigma]
        if S.apply(sigma, x) not in U:
            out.append(f"sigma={list(sigma.images)}: sigma^*(x) missing from U_sigma")
        for m in range(N + 1):
            A_m = S.simplices_of_degree(m)
            for tau in enumerate_morphisms(N, m, "epi"):
                meets = any(S.apply(tau, w) in U for w in A_m)
                factor = any(compose(rho, tau) == sigma for rho in enumerate_morphisms(m, F.n, "epi"))
                if meets != factor:
                    out.append(f"sigma={list(sigma.images)} tau={list(tau.images)}: meets={meets} factors={factor}")
    return out


def extend(F: AdmissibleFamily, sigma: DeltaMor) -> frozenset[Simplex]:
    """``U_sigma`` for ``sigma : [k] ->> [n]`` with ``k <= N``."""
    k = sigma.dom
    if k > F.N:
        raise ValueError(f"degree {k} exceeds N={F.N}")
    if sigma.cod != F.n or not is_epi(sigma):
        raise ValueError(f"{sigma!r} is not an epi onto [{F.n}]")
    hit = F._extended.get(sigma)
    if hit is not None:
        return hit
    if k == F.N:
        out = F.table[sigma]
    else:
        taus = enumerate_morphisms(F.N, k, "epi")
        out = frozenset(
            z
            for z in F.S.simplices_of_degree(k)
            if all(F.S.apply(tau, z) in F.table[compose(sigma, tau)] for tau in taus)
        )
    F._extended[sigma] = out
    return out


def index_monos(F: AdmissibleFamily, sigma: DeltaMor) -> list[DeltaMor]:
    """``I_sigma``: monos ``delta : [k'] -> [k]`` with ``k' <= N`` and ``sigma o delta`` epi."""
    k = sigma.dom
    out = []
    for kp in range(F.n, min(k, F.N) + 1):
        for delta in enumerate_morphisms(kp, k, "mono"):
            if is_epi(compose(sigma, delta)):
                out.append(delta)
    return out


def _require_cover(F: AdmissibleFamily, sigma: DeltaMor):
    if sigma.dom > F.N and F.N < F.n + 1:
        raise ValueError(
            f"U(sigma) at degree {sigma.dom} > N={F.N} needs N >= n+1={F.n + 1}"
        )


def u_contains(F: AdmissibleFamily, sigma: DeltaMor, z: Simplex) -> bool:
    """``z in U(sigma)``, with early exit on the first failing mono."""
    _require_cover(F, sigma)
    S = F.S
    for delta in _index_cached(F, sigma):
        if S.apply(delta, z) not in extend(F, compose(sigma, delta)):
            return False
    return True


def _index_cached(F: AdmissibleFamily, sigma: DeltaMor) -> list[DeltaMor]:
    key = ("I", sigma)
    hit = F._u_epi.get(key)
    if hit is None:
        hit = F._u_epi[key] = index_monos(F, sigma)
    return hit


def u_of_epi(F: AdmissibleFamily, sigma: DeltaMor) -> frozenset[Simplex]:
    """The set ``U(sigma)`` inside ``A_k`` for ``sigma : [k] ->> [n]``."""
    if sigma.cod != F.n or not is_epi(sigma):
        raise ValueError(f"{sigma!r} is not an epi onto [{F.n}]")
    hit = F._u_epi.get(sigma)
    if hit is None:
        hit = F._u_epi[sigma] = frozenset(
            z for z in F.S.simplices_of_degree(sigma.dom) if u_contains(F, sigma, z)
        )
    return hit


def u_of_gamma(F: AdmissibleFamily, f: GammaMor) -> frozenset[Simplex]:
    """``U(f) = (sup(f)^*)^{-1} U(red f)`` inside ``A_{cod f}``."""
    if f.dom != F.n:
        raise ValueError(f"{f!r} does not start at [{F.n}]")
    hit = F._u_gamma.get(f)
    if hit is None:
        red, sup = red_sup(f)
        target = u_of_epi(F, onto_to_epi(red))
        hit = F._u_gamma[f] = frozenset(
            z for z in F.S.simplices_of_degree(f.cod) if F.S.apply(sup, z) in target
        )
    return hit


def images_of(S: FiniteSSet, tau: DeltaMor) -> frozenset[Simplex]:
    """``tau^*(A_m)`` for ``tau : [k] ->> [m]``."""
    return frozenset(S.apply(tau, w) for w in S.simplices_of_degree(tau.cod))


def simplex_ids(zs: Iterable[Simplex]) -> list[dict]:
    return [z.to_json() for z in sorted(zs)]
