"""Exhaustive and sampled verification of the combinatorial statements.

Every check returns a :class:`CheckReport`; an empty violation list means the
statement held on every case visited.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb

from . import admissible as adm
from .delta import compose, enumerate_morphisms, iter_morphisms, is_epi
from .gamma import (
    count_or_zero,
    enumerate_gamma,
    epi_to_onto,
    leq,
    minus,
    onto_to_epi,
    plus,
    poset,
    pushed_face,
    subset_leq,
    upper_set,
)
from .geometry import make_admissible, point
from .realization import NbhdSystem, check_compat_degen, check_compat_face
from .sset import FiniteSSet

KEEP = 5  # violations kept verbatim per report


@dataclass
class CheckReport:
    name: str
    cases: int = 0
    violations: list = field(default_factory=list)
    nviolations: int = 0

    def fail(self, detail):
        self.nviolations += 1
        if len(self.violations) < KEEP:
            self.violations.append(detail)

    def absorb(self, other: "CheckReport"):
        self.cases += other.cases
        self.nviolations += other.nviolations
        for v in other.violations:
            if len(self.violations) < KEEP:
                self.violations.append(f"{other.name}: {v}")

    @property
    def ok(self) -> bool:
        return self.nviolations == 0

    def __str__(self):
        status = "ok" if self.ok else f"{self.nviolations} violations"
        line = f"{self.name}: {self.cases} cases, {status}"
        if self.violations:
            line += f"; first: {self.violations[0]}"
        return line


def _homs(kmax: int, kpmax: int):
    for k in range(kmax + 1):
        for kp in range(k, kpmax + 1):
            yield k, kp


# ---------------------------------------------------------------------------
# Delta / Gamma' duality and the order


def check_duality(kmax: int = 2, kpmax: int = 5) -> CheckReport:
    rep = CheckReport("duality")
    for k, kp in _homs(kmax, kpmax):
        epis = enumerate_morphisms(kp, k, "epi")
        brute = [s for s in enumerate_morphisms(kp, k, "all") if set(s.images) == set(range(k + 1))]
        onto = enumerate_gamma(k, kp, onto_only=True)
        rep.cases += 1
        if not len(epis) == len(brute) == len(onto) == comb(kp, k):
            rep.fail(f"[{k}]=>[{kp}]: epi {len(epis)}, brute {len(brute)}, onto {len(onto)}, binomial {comb(kp, k)}")
        for s in epis:
            rep.cases += 1
            if onto_to_epi(epi_to_onto(s)) != s:
                rep.fail(f"epi {list(s.images)} does not round-trip")
        for f in onto:
            rep.cases += 1
            if epi_to_onto(onto_to_epi(f)) != f:
                rep.fail(f"onto {f!r} does not round-trip")
    return rep


def check_order(kmax: int = 2, kpmax: int = 5) -> CheckReport:
    """Antisymmetry, ``leq => subset_leq``, and maximal elements are the onto ones."""
    rep = CheckReport("order")
    for k, kp in _homs(kmax, kpmax):
        P = poset(k, kp)
        rep.cases += 1
        if not P.is_antisymmetric():
            rep.fail(f"[{k}]=>[{kp}] is not antisymmetric")
        onto = set(enumerate_gamma(k, kp, onto_only=True))
        if set(P.maximal()) != onto:
            rep.fail(f"[{k}]=>[{kp}]: maximal elements differ from onto morphisms")
        for f in P.elements:
            for g in upper_set(f):
                rep.cases += 1
                if not subset_leq(f, g):
                    rep.fail(f"{f!r} <= {g!r} but not blockwise")
    return rep


def remark_witnesses(k: int = 0, kp: int = 4) -> list:
    """Pairs with ``f`` blockwise inside ``g`` but not ``f <= g``."""
    homs = enumerate_gamma(k, kp)
    return [(f, g) for f in homs for g in homs if subset_leq(f, g) and not leq(f, g)]


# ---------------------------------------------------------------------------
# the -i / +i calculus


def is_contiguous(f) -> bool:
    """Every block is an interval of consecutive coordinates."""
    return all(b[-1] - b[0] + 1 == len(b) for b in f.blocks)


def _scope(f, i, scope: str) -> bool:
    if scope == "all":
        return True
    if scope == "uncovered":
        return count_or_zero(f, i) == 0
    if scope == "contiguous":
        return is_contiguous(f)
    raise ValueError(f"unknown scope {scope!r}")


SCOPES = ("all", "uncovered", "contiguous")


def check_admitted1(kmax: int = 2, kpmax: int = 5, scope: str = "all") -> CheckReport:
    """``f <= g`` and ``f_{-i}`` defined  ==>  ``f_{-i} <= g_{-i}``.

    ``scope`` restricts ``(f, i)``: ``uncovered`` keeps ``#_f(i) == 0``,
    ``contiguous`` keeps morphisms whose blocks are intervals.
    """
    rep = CheckReport("admitted1" + ("" if scope == "all" else f"[{scope}]"))
    for k, kp in _homs(kmax, kpmax):
        if kp < 1:
            continue
        for f in enumerate_gamma(k, kp):
            for i in range(kp + 1):
                fm = minus(f, i)
                if fm is None or not _scope(f, i, scope):
                    continue
                for g in upper_set(f):
                    rep.cases += 1
                    gm = minus(g, i)
                    if gm is None or not leq(fm, gm):
                        rep.fail(f"f={f!r} g={g!r} i={i}")
    return rep


def _admitted2_target(f, g, i):
    ci, cprev = count_or_zero(g, i), count_or_zero(g, i - 1)
    h = pushed_face(g, i)
    if ci == 0 and cprev == 0:
        return [h]
    if ci > 0 and cprev == 0:
        return [plus(h, i)]
    if ci == 0 and cprev > 0:
        return [plus(h, i - 1)]
    return [plus(h, i - 1), plus(h, i)]


def check_admitted2(kmax: int = 2, kpmax: int = 5, scope: str = "all") -> CheckReport:
    """Lifting ``f_{-i} <= g`` back along ``delta_i``, case by case (``scope`` as above)."""
    rep = CheckReport("admitted2" + ("" if scope == "all" else f"[{scope}]"))
    for k, kp in _homs(kmax, kpmax):
        if kp < 1 or kp - 1 < k:
            continue
        for f in enumerate_gamma(k, kp):
            for i in range(kp + 1):
                fm = minus(f, i)
                if fm is None or not _scope(f, i, scope):
                    continue
                for g in upper_set(fm):
                    rep.cases += 1
                    targets = _admitted2_target(f, g, i)
                    if any(t is None for t in targets):
                        rep.fail(f"f={f!r} g={g!r} i={i}: a +step is undefined")
                    elif not any(leq(f, t) for t in targets):
                        rep.fail(f"f={f!r} g={g!r} i={i}: targets {targets}")
    return rep


def check_admitted3(kmax: int = 2, kpmax: int = 5) -> CheckReport:
    """``#_f(i) > 0`` and ``g >= (delta_i)_*(f)^{+i}``  ==>  ``g_{-i} >= f``."""
    rep = CheckReport("admitted3")
    for k, kp in _homs(kmax, kpmax):
        if kp < 1 or kp - 1 < k:
            continue
        for f in enumerate_gamma(k, kp - 1):
            for i in range(kp):
                if count_or_zero(f, i) == 0:
                    continue
                base = plus(pushed_face(f, i), i)
                if base is None:
                    rep.fail(f"f={f!r} i={i}: +i undefined")
                    continue
                for g in upper_set(base):
                    rep.cases += 1
                    gm = minus(g, i)
                    if gm is None or not leq(f, gm):
                        rep.fail(f"f={f!r} g={g!r} i={i}")
    return rep


def check_face_section(kmax: int = 2, kpmax: int = 5) -> CheckReport:
    """``(delta_i)_*(f_{-i}) == f`` whenever ``#_f(i) == 0``."""
    rep = CheckReport("face-section")
    for k, kp in _homs(kmax, kpmax):
        if kp < 1:
            continue
        for f in enumerate_gamma(k, kp):
            for i in range(kp + 1):
                if count_or_zero(f, i) == 0:
                    rep.cases += 1
                    if pushed_face(minus(f, i), i) != f:
                        rep.fail(f"f={f!r} i={i}")
    return rep


# ---------------------------------------------------------------------------
# degeneracies in a simplicial set


def check_degenlemma(S: FiniteSSet, slack: int = 3, N_max: int | None = None) -> CheckReport:
    """(i) ``sigma^* x in tau^*(A_m)``, (ii) ``sigma = rho o tau``, (iii) kernel refinement agree.

    ``N`` runs from ``n`` to ``n + slack``, or to ``N_max`` when given.
    """
    rep = CheckReport(f"degenlemma[{S.name}]")
    for x in S.nondegenerate():
        n = x.degree
        top = n + slack if N_max is None else max(n, N_max)
        for N in range(n, top + 1):
            for sigma in enumerate_morphisms(N, n, "epi"):
                sx = S.apply(sigma, x)
                for m in range(N + 1):
                    for tau in enumerate_morphisms(N, m, "epi"):
                        rep.cases += 1
                        i = any(S.apply(tau, w) == sx for w in S.simplices_of_degree(m))
                        ii = any(compose(rho, tau) == sigma for rho in enumerate_morphisms(m, n, "epi"))
                        iii = adm.kernel_refines(sigma, tau)
                        if not i == ii == iii:
                            rep.fail(f"x={x!r} sigma={list(sigma.images)} tau={list(tau.images)}: {i},{ii},{iii}")
    return rep


def check_simpset(S: FiniteSSet, slack: int = 3) -> CheckReport:
    """Degeneracies of distinct cells never meet; distinct epis give distinct degeneracies."""
    rep = CheckReport(f"simpset[{S.name}]")
    cells = S.nondegenerate()
    for x in cells:
        for y in cells:
            n, m = x.degree, y.degree
            lo = max(n, m)
            for N in range(lo, lo + slack + 1):
                for sigma in enumerate_morphisms(N, n, "epi"):
                    sx = S.apply(sigma, x)
                    for tau in enumerate_morphisms(N, m, "epi"):
                        if x == y and sigma == tau:
                            continue
                        rep.cases += 1
                        if sx == S.apply(tau, y):
                            rep.fail(f"x={x!r} y={y!r} sigma={list(sigma.images)} tau={list(tau.images)}")
    return rep


# ---------------------------------------------------------------------------
# admissible families and the sets U(sigma)


def check_firstproperties(F: adm.AdmissibleFamily) -> CheckReport:
    """Admissibility of ``F`` and the three properties of the extension to degrees ``<= N``."""
    S, x, n, N = F.S, F.x, F.n, F.N
    rep = CheckReport(f"firstproperties[{S.name},{x!r},N={N},{F.kind}]")
    for v in adm.admissibility_violations(F):
        rep.fail(v)
    rep.cases += len(F.epis())
    for k in range(n, N + 1):
        for sigma in enumerate_morphisms(k, n, "epi"):
            U = adm.extend(F, sigma)
            rep.cases += 1
            if S.apply(sigma, x) not in U:
                rep.fail(f"(i) sigma={list(sigma.images)}")
            for kp in range(k, N + 1):
                for sp in enumerate_morphisms(kp, k, "epi"):
                    rep.cases += 1
                    target = adm.extend(F, compose(sigma, sp))
                    if any(S.apply(sp, z) not in target for z in U):
                        rep.fail(f"(ii) sigma={list(sigma.images)} sigma'={list(sp.images)}")
            for kp in range(n, k + 1):
                for tau in enumerate_morphisms(k, kp, "epi"):
                    rep.cases += 1
                    meets = any(S.apply(tau, w) in U for w in S.simplices_of_degree(kp))
                    factor = any(compose(rho, tau) == sigma for rho in enumerate_morphisms(kp, n, "epi"))
                    if meets != factor:
                        rep.fail(f"(iii) sigma={list(sigma.images)} tau={list(tau.images)}")
    return rep


def check_uproperties(F: adm.AdmissibleFamily, extra: int = 2) -> CheckReport:
    """Statements (a)-(e) about ``U(sigma)`` for every epi from ``[k]``, ``k <= N + extra``."""
    S, x, n, N = F.S, F.x, F.n, F.N
    rep = CheckReport(f"uproperties[{S.name},{x!r},N={N},{F.kind}]")
    top = N + extra
    for k in range(n, top + 1):
        for sigma in enumerate_morphisms(k, n, "epi"):
            U = adm.u_of_epi(F, sigma)
            rep.cases += 1
            if S.apply(sigma, x) not in U:
                rep.fail(f"(a) sigma={list(sigma.images)}")
            if k <= N:
                rep.cases += 1
                if not U <= adm.extend(F, sigma):
                    rep.fail(f"(b) sigma={list(sigma.images)}")
            for i in range(n, k + 1):
                for d in iter_morphisms(i, k, "mono"):
                    sd = compose(sigma, d)
                    if not is_epi(sd):
                        continue
                    rep.cases += 1
                    target = adm.u_of_epi(F, sd)
                    if any(S.apply(d, z) not in target for z in U):
                        rep.fail(f"(c) sigma={list(sigma.images)} delta={list(d.images)}")
            for kp in range(k, top + 1):
                for tau in enumerate_morphisms(kp, k, "epi"):
                    rep.cases += 1
                    target = adm.u_of_epi(F, compose(sigma, tau))
                    if any(S.apply(tau, z) not in target for z in U):
                        rep.fail(f"(d) sigma={list(sigma.images)} tau={list(tau.images)}")
            for kp in range(n, k + 1):
                for tau in enumerate_morphisms(k, kp, "epi"):
                    rep.cases += 1
                    meets = bool(adm.images_of(S, tau) & U)
                    factor = any(compose(rho, tau) == sigma for rho in enumerate_morphisms(kp, n, "epi"))
                    if meets != factor:
                        rep.fail(f"(e) sigma={list(sigma.images)} tau={list(tau.images)}")
    return rep


def check_family_statements(S: FiniteSSet, N: int, kinds=("singleton", "complement"), extra: int = 2) -> CheckReport:
    """Both property checks for every non-degenerate cell of degree ``< N``."""
    rep = CheckReport(f"uproperties[{S.name},N={N}]")
    builders = {"singleton": adm.build_singleton, "complement": adm.build_complement}
    for x in S.nondegenerate():
        if x.degree + 1 > N:
            continue
        for kind in kinds:
            F = builders[kind](S, x, N)
            rep.absorb(check_firstproperties(F))
            rep.absorb(check_uproperties(F, extra))
    return rep


def check_distinct_cells(S: FiniteSSet, extra: int = 2) -> CheckReport:
    """Singleton families of distinct cells: ``U_sigma``, ``V_tau`` and ``U(sigma)``, ``V(tau)`` disjoint."""
    rep = CheckReport(f"distinct-cells[{S.name}]")
    cells = S.nondegenerate()
    for x in cells:
        for y in cells:
            if x == y:
                continue
            n, m = x.degree, y.degree
            N = max(n + m, n + 1, m + 1)
            F, G = adm.build_singleton(S, x, N), adm.build_singleton(S, y, N)
            for s, t in product(F.epis(), G.epis()):
                rep.cases += 1
                if F.table[s] & G.table[t]:
                    rep.fail(f"x={x!r} y={y!r}: U_sigma meets V_tau at N={N}")
            for k in range(max(n, m), n + m + extra + 1):
                for s in enumerate_morphisms(k, n, "epi"):
                    Us = adm.u_of_epi(F, s)
                    for t in enumerate_morphisms(k, m, "epi"):
                        rep.cases += 1
                        if Us & adm.u_of_epi(G, t):
                            rep.fail(f"x={x!r} y={y!r} k={k}: U(sigma) meets V(tau)")
    return rep


def check_same_cell(S: FiniteSSet, kmax: int | None = None) -> CheckReport:
    """With ``N = (n+1)^2``: distinct onto ``f != g`` have disjoint ``U(f)``, ``U(g)``."""
    rep = CheckReport(f"same-cell[{S.name}]")
    for x in S.nondegenerate():
        n = x.degree
        N = (n + 1) ** 2
        F = adm.build_singleton(S, x, N)
        top = N if kmax is None else kmax
        for k in range(n, top + 1):
            sets = [adm.u_of_epi(F, s) for s in enumerate_morphisms(k, n, "epi")]
            for a in range(len(sets)):
                for b in range(a + 1, len(sets)):
                    rep.cases += 1
                    if sets[a] & sets[b]:
                        rep.fail(f"x={x!r} k={k}: two distinct onto morphisms share a simplex")
    return rep


# ---------------------------------------------------------------------------
# compatibility of the neighborhoods


def default_point(n: int):
    """An interior point with pairwise distinct coordinates, ``(1, 2, ..., n+1) / total``."""
    total = (n + 1) * (n + 2) // 2
    return point(*(Fraction(i + 1, total) for i in range(n + 1)))


def compat_runs(S: FiniteSSet, x, eps, kmax: int = 4, samples: int = 200, seed: int = 0,
                N: int | None = None, closed_faces: bool = True):
    """All face and degeneracy compatibility reports for one base cell."""
    n = x.degree
    F = adm.build_singleton(S, x, N if N is not None else n + 1)
    nb = NbhdSystem(F, make_admissible(default_point(n)), Fraction(eps))
    rng = random.Random(seed)
    reports = []
    for k in range(1, kmax + 1):
        for i in range(k + 1):
            reports.append(check_compat_face(nb, k, i, samples, rng))
            if closed_faces:
                reports.append(check_compat_face(nb, k, i, samples, rng, closed=True))
    for k in range(0, kmax + 1):
        for i in range(k + 1):
            reports.append(check_compat_degen(nb, k, i, samples, rng))
    return reports
