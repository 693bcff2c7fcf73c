"""Separation of two points of a thin realization, with a checkable certificate.

Given two points ``(x, alpha)`` and ``(y, beta)`` of ``|A|`` (non-degenerate
cells, interior coordinates) we build singleton admissible families ``U`` and
``V``, interval families ``I`` and ``J``, and search a dyadic ``eta`` such
that for every ``k <= 2(n+2)(m+2)`` and every pair ``f : [n] => [k]``,
``g : [m] => [k]``::

    (U(f) x closure W(f, eta))  and  (V(g) x closure T(g, eta))  are disjoint.

Two reductions keep this finite and small.

* With singleton families (and ``N >= n+1``) one has ``U(sigma) = {sigma^* x}``.
  Then for ``z = tau^*(c)`` in normal form, ``z in U(f)`` iff the support of
  ``f`` meets exactly a set ``T`` of ``tau``-fibers for which the face of
  ``c`` spanned by ``T`` normalizes to ``(e, x)``, and ``f`` labels every
  coordinate of fiber ``phi`` by ``e(rank of phi in T)``.
* The closed systems of ``f`` and ``g`` only see sums of coordinates grouped
  by their type ``(f-label, g-label)``, so their joint feasibility depends
  only on the set of types that occur (the *signature* of the pair).

So for every degree we enumerate, per simplex ``z`` and per choice of fiber
sets, the reachable signatures, and decide one linear system per signature.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Optional

from .admissible import AdmissibleFamily, build_singleton, u_of_epi
from .delta import enumerate_morphisms, mono_from_image
from .gamma import GammaMor, from_labels
from .geometry import (
    BaryPoint,
    IntervalFamily,
    make_admissible,
    make_disjoint_pair,
    w_constraints,
)
from .ratlp import disjoint
from .rational import fmt, parse_rational
from .realization import NbhdSystem, point_normal_form
from .sset import FiniteSSet, SSetError, Simplex, load_json, nondeg

DISTINCT, SAME = "distinct-cells", "same-cell"
DEFAULT_DEPTH = 20
DEFAULT_SPREAD = Fraction(2)
VERSION = 1

# position kinds inside a fiber: in both supports, only f's, only g's, neither
BOTH, ONLY_F, ONLY_G, NEITHER = "B", "F", "G", "O"
KINDS = (BOTH, ONLY_F, ONLY_G, NEITHER)


class SeparationError(RuntimeError):
    """The inputs cannot be separated by this pipeline (or the search ran out)."""


def kmax_bound(n: int, m: int) -> int:
    return 2 * (n + 2) * (m + 2)


def hom_count(n: int, k: int) -> int:
    """``#Hom([n], [k])``: a support of size ``r+1`` cut into ``n+1`` runs."""
    return sum(comb(k + 1, r + 1) * comb(r, n) for r in range(n, k + 1))


def surjections(s: int, t: int) -> int:
    """Maps from an ``s``-set onto a ``t``-set."""
    return sum((-1) ** j * comb(t, j) * (t - j) ** s for j in range(t + 1))


# ---------------------------------------------------------------------------
# the fiber description of {f : z in U(f)}


def fiber_sizes(z: Simplex) -> tuple[int, ...]:
    imgs = z.epi.images
    return tuple(imgs.count(v) for v in range(z.epi.cod + 1))


@lru_cache(maxsize=1 << 16)
def valid_fiber_sets(S: FiniteSSet, x: Simplex, z: Simplex) -> list[tuple[tuple[int, ...], dict[int, int]]]:
    """Fiber sets ``T`` of ``z`` with ``z in U(f)`` possible, and the fiber -> label map.

    Cached; callers must not mutate the result.
    """
    p = z.epi.cod
    out = []
    c = nondeg(z.cell, p)
    for size in range(x.degree + 1, p + 2):
        for T in combinations(range(p + 1), size):
            w = S.apply(mono_from_image(T, p), c)
            if w.cell == x.cell and w.epi.cod == x.degree:
                out.append((T, {phi: w.epi.images[r] for r, phi in enumerate(T)}))
    return out


def fiber_count(sizes, T) -> int:
    """Number of supports meeting exactly the fibers in ``T``."""
    out = 1
    for phi in T:
        out *= 2 ** sizes[phi] - 1
    return out


@dataclass(frozen=True)
class PairClass:
    """All triples ``(z, f, g)`` with a common signature at one degree."""

    signature: frozenset
    f: GammaMor
    g: GammaMor


def _kind_options(size: int, in_f: bool, in_g: bool):
    for r in range(1, min(size, 4) + 1):
        for P in combinations(KINDS, r):
            hits_f = BOTH in P or ONLY_F in P
            hits_g = BOTH in P or ONLY_G in P
            if hits_f == in_f and hits_g == in_g:
                yield P, surjections(size, r)


def _type(kind: str, lf: Optional[int], lg: Optional[int]):
    return (
        lf if kind in (BOTH, ONLY_F) else None,
        lg if kind in (BOTH, ONLY_G) else None,
    )


def pair_classes_at(S, x: Simplex, y: Simplex, z: Simplex, n: int, m: int) -> dict:
    """Signature -> [representative (f, g), number of (f, g) pairs with z in U(f) and V(g)]."""
    sizes = fiber_sizes(z)
    out: dict[frozenset, list] = {}
    for Tf, lab_f in valid_fiber_sets(S, x, z):
        for Tg, lab_g in valid_fiber_sets(S, y, z):
            per_fiber = []
            for phi, s in enumerate(sizes):
                opts = list(_kind_options(s, phi in lab_f, phi in lab_g))
                per_fiber.append([(P, cnt, phi) for P, cnt in opts])
            for choice in product(*per_fiber):
                seq = []
                total = 1
                for P, cnt, phi in choice:
                    total *= cnt
                    seq += [_type(kind, lab_f.get(phi), lab_g.get(phi)) for kind in P]
                sig = frozenset(seq)
                hit = out.get(sig)
                if hit is None:
                    out[sig] = [_representative(seq, n, m), total]
                else:
                    hit[1] += total
    return out


def _representative(seq, n: int, m: int) -> tuple[GammaMor, GammaMor]:
    seen = []
    for t in seq:
        if t not in seen:
            seen.append(t)
    return from_labels([a for a, _ in seen], n), from_labels([b for _, b in seen], m)


def signature_of(f: GammaMor, g: GammaMor) -> frozenset:
    return frozenset(zip(f.labels(), g.labels()))


def sig_to_json(sig) -> list:
    key = lambda t: tuple(-1 if v is None else v for v in t)
    return [[a, b] for a, b in sorted(sig, key=key)]


def sig_from_json(doc) -> frozenset:
    return frozenset((a, b) for a, b in doc)


@dataclass
class DegreeEvidence:
    k: int
    hom_pairs: int
    simplices: int
    set_disjoint_simplices: int
    triples: int
    classes: dict = field(default_factory=dict)  # signature -> [f, g, count]


def degree_evidence(S: FiniteSSet, x: Simplex, y: Simplex, k: int) -> DegreeEvidence:
    n, m = x.degree, y.degree
    ev = DegreeEvidence(k, hom_count(n, k) * hom_count(m, k), 0, 0, 0)
    for z in S.simplices_of_degree(k):
        ev.simplices += 1
        classes = pair_classes_at(S, x, y, z, n, m)
        if not classes:
            ev.set_disjoint_simplices += 1
            continue
        for sig, (rep, cnt) in classes.items():
            ev.triples += cnt
            hit = ev.classes.get(sig)
            if hit is None:
                ev.classes[sig] = [rep[0], rep[1], cnt]
            else:
                hit[2] += cnt
    return ev


def brute_force_classes(F: AdmissibleFamily, G: AdmissibleFamily, k: int) -> dict:
    """Signature -> number of triples, straight from the definitions (small ``k`` only)."""
    from .admissible import u_of_gamma
    from .gamma import enumerate_gamma

    out: dict[frozenset, int] = {}
    for f in enumerate_gamma(F.n, k):
        Uf = u_of_gamma(F, f)
        if not Uf:
            continue
        for g in enumerate_gamma(G.n, k):
            common = Uf & u_of_gamma(G, g)
            if common:
                sig = signature_of(f, g)
                out[sig] = out.get(sig, 0) + len(common)
    return out


# ---------------------------------------------------------------------------
# the singleton property backing the fiber description


_SINGLETON_MEMO: dict = {}


def singleton_u_holds(F: AdmissibleFamily, kmax: int) -> Optional[str]:
    """``None`` if ``U(sigma) == {sigma^* x}`` for every epi from ``[r]``, ``r <= kmax``.

    Memoized per ``(complex, x, N, kmax)``; :func:`clear_memo` forces a recount.
    """
    if F.kind != "singleton":
        return f"family kind {F.kind!r} is not singleton"
    key = (F.S, F.x, F.N, kmax)
    if key not in _SINGLETON_MEMO:
        _SINGLETON_MEMO[key] = _singleton_problem(F, kmax)
    return _SINGLETON_MEMO[key]


def _singleton_problem(F: AdmissibleFamily, kmax: int) -> Optional[str]:
    for r in range(F.n, kmax + 1):
        for sigma in enumerate_morphisms(r, F.n, "epi"):
            if u_of_epi(F, sigma) != frozenset({F.S.apply(sigma, F.x)}):
                return f"U(sigma) differs from {{sigma^*x}} at sigma={list(sigma.images)}"
    return None


def clear_memo():
    _SINGLETON_MEMO.clear()
    valid_fiber_sets.cache_clear()


# ---------------------------------------------------------------------------
# the pipeline


@dataclass
class Setup:
    S: FiniteSSet
    p1: tuple[Simplex, BaryPoint]
    p2: tuple[Simplex, BaryPoint]
    branch: str
    swapped: bool
    N: int
    F: AdmissibleFamily
    G: AdmissibleFamily
    I: IntervalFamily
    J: IntervalFamily
    pair: Optional[tuple[int, int]]

    @property
    def kmax(self) -> int:
        return kmax_bound(self.p1[0].degree, self.p2[0].degree)


def prepare(S: FiniteSSet, p1, p2, spread=DEFAULT_SPREAD) -> Setup:
    x, alpha = point_normal_form(S, *p1)
    y, beta = point_normal_form(S, *p2)
    if (x, alpha) == (y, beta):
        raise ValueError(f"the two points coincide in the realization: {x!r} {alpha!r}")
    if x != y:
        N = max(x.degree + y.degree, x.degree + 1, y.degree + 1)
        return Setup(
            S, (x, alpha), (y, beta), DISTINCT, False, N,
            build_singleton(S, x, N), build_singleton(S, y, N),
            make_admissible(alpha, spread), make_admissible(beta, spread), None,
        )
    n = x.degree
    diff = [a - b for a, b in zip(alpha.coords, beta.coords)]
    swapped = False
    pair = next(((k, l) for k, l in combinations(range(n + 1), 2) if diff[k] < 0 < diff[l]), None)
    if pair is None:
        swapped = True
        alpha, beta = beta, alpha
        diff = [-d for d in diff]
        pair = next((k, l) for k, l in combinations(range(n + 1), 2) if diff[k] < 0 < diff[l])
    N = (n + 1) ** 2
    F = build_singleton(S, x, N)
    I, J = make_disjoint_pair(alpha, beta, *pair)
    return Setup(S, (x, alpha), (y, beta), SAME, swapped, N, F, F, I, J, pair)


def _meets(f: GammaMor, g: GammaMor, I: IntervalFamily, J: IntervalFamily, eta: Fraction) -> bool:
    a = w_constraints(f, eta, I, closed=True)
    b = w_constraints(g, eta, J, closed=True)
    return disjoint(a, b).feasible


def class_meets(setup: Setup, f: GammaMor, g: GammaMor, eta: Fraction) -> bool:
    """Whether the closed systems of ``f`` and ``g`` still share a point at ``eta``."""
    return _meets(f, g, setup.I, setup.J, eta)


def _meets_job(args) -> bool:
    return _meets(*args)


def first_meeting(setup: Setup, classes: dict, eta: Fraction, jobs: int = 1):
    """A signature whose closed systems meet at ``eta``, or ``None``."""
    items = list(classes.items())
    if jobs <= 1 or len(items) < 2:
        return next((sig for sig, (f, g) in items if class_meets(setup, f, g, eta)), None)
    from concurrent.futures import ProcessPoolExecutor

    args = [(f, g, setup.I, setup.J, eta) for _, (f, g) in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for (sig, _), hit in zip(items, pool.map(_meets_job, args, chunksize=16)):
            if hit:
                return sig
    return None


def eta_schedule(depth: int):
    for h in range(1, depth + 1):
        yield Fraction(1, 2 ** h)


@dataclass
class SeparationCertificate:
    setup: Setup
    eta: Fraction
    depth: int
    evidence: list[DegreeEvidence]
    contains: tuple[bool, bool]

    def to_json(self) -> dict:
        st = self.setup
        x, alpha = st.p1
        y, beta = st.p2
        evidence = []
        for ev in self.evidence:
            # one set-level record per degree: every (f, g) outside the listed
            # signatures has U(f) and V(g) disjoint
            evidence.append({
                "k": ev.k, "f": None, "g": None, "kind": "set-disjoint",
                "pairs": ev.hom_pairs, "simplices": ev.simplices,
                "empty_simplices": ev.set_disjoint_simplices, "triples": ev.triples,
            })
            for sig in sorted(ev.classes, key=lambda s: json.dumps(sig_to_json(s))):
                f, g, cnt = ev.classes[sig]
                evidence.append({
                    "k": ev.k, "f": f.to_json(), "g": g.to_json(), "kind": "lp-infeasible",
                    "signature": sig_to_json(sig), "triples": cnt,
                })
        return {
            "version": VERSION,
            "points": [
                {"cell": x.cell, "coords": alpha.to_json()},
                {"cell": y.cell, "coords": beta.to_json()},
            ],
            "branch": st.branch,
            "swapped": st.swapped,
            "pair": list(st.pair) if st.pair else None,
            "N": st.N,
            "eta": fmt(self.eta),
            "depth": self.depth,
            "kmax": st.kmax,
            "beyond_kmax": "covered by the induction in the separation theorem, not computed",
            "families": [st.F.to_json(), st.G.to_json()],
            "intervals": [st.I.to_json(), st.J.to_json()],
            "containment": list(self.contains),
            "evidence": evidence,
            "complex": {"name": st.S.name, **st.S.to_json()},
        }


def contains_own_point(F: AdmissibleFamily, I: IntervalFamily, eta, pt) -> bool:
    x, alpha = pt
    return NbhdSystem(F, I, eta).member(x.degree, x, alpha)


def find_eta(S: FiniteSSet, p1, p2, depth: int = DEFAULT_DEPTH, log=None, jobs: int = 1) -> SeparationCertificate:
    setup = prepare(S, p1, p2)
    for fam in (setup.F, setup.G):
        problem = singleton_u_holds(fam, setup.kmax)
        if problem:
            raise SeparationError(problem)
    x, y = setup.p1[0], setup.p2[0]
    evidence = []
    for k in range(setup.kmax + 1):
        ev = degree_evidence(S, x, y, k)
        evidence.append(ev)
        if log:
            log(f"k={k}: {ev.simplices} simplices, {ev.triples} triples, {len(ev.classes)} classes")
    classes = {}
    for ev in evidence:
        for sig, (f, g, _) in ev.classes.items():
            classes.setdefault(sig, (f, g))
    for eta in eta_schedule(depth):
        bad = first_meeting(setup, classes, eta, jobs)
        if log:
            log(f"eta={fmt(eta)}: " + ("all classes disjoint" if bad is None else "a class still meets"))
        if bad is None:
            contains = (
                contains_own_point(setup.F, setup.I, eta, setup.p1),
                contains_own_point(setup.G, setup.J, eta, setup.p2),
            )
            return SeparationCertificate(setup, eta, depth, evidence, contains)
    raise SeparationError(f"no eta down to 2^-{depth} separates the closed systems")


# ---------------------------------------------------------------------------
# verification


def _points_from(doc):
    pts = []
    for p in doc["points"]:
        coords = BaryPoint.from_json(p["coords"])
        pts.append((nondeg(p["cell"], len(coords) - 1), coords))
    return pts


def verify_certificate(S: Optional[FiniteSSet], doc: dict) -> tuple[bool, str]:
    """Recompute everything the certificate claims; ``(ok, first failure or summary)``.

    With ``S`` omitted the complex embedded in the certificate is used.
    """
    try:
        embedded = load_json(doc["complex"]) if "complex" in doc else None
        if S is None:
            if embedded is None:
                return False, "no complex given and none embedded"
            S = embedded
        elif embedded is not None and embedded != S:
            return False, "certificate was issued for a different complex"
        return _verify(S, doc)
    except (KeyError, TypeError, ValueError, SSetError) as exc:
        return False, f"malformed certificate: {exc}"


def _verify(S: FiniteSSet, doc: dict) -> tuple[bool, str]:
    if doc.get("version") != VERSION:
        return False, f"unsupported version {doc.get('version')!r}"
    p1, p2 = _points_from(doc)
    setup = prepare(S, p1, p2)
    if setup.p1 != tuple(p1) or setup.p2 != tuple(p2):
        return False, "points are not stored in normal form"
    if setup.swapped:
        return False, "stored points would be swapped again"
    expect = {
        "branch": setup.branch,
        "N": setup.N,
        "kmax": setup.kmax,
        "pair": list(setup.pair) if setup.pair else None,
        "families": [setup.F.to_json(), setup.G.to_json()],
        "intervals": [setup.I.to_json(), setup.J.to_json()],
    }
    for key, value in expect.items():
        if doc.get(key) != value:
            return False, f"field {key!r} does not reproduce"
    eta = parse_rational(doc["eta"])
    if not 0 < eta < 1:
        return False, f"eta={doc['eta']} outside ]0, 1["
    for fam in (setup.F, setup.G):
        problem = singleton_u_holds(fam, setup.kmax)
        if problem:
            return False, problem

    claimed: dict[tuple[int, frozenset], dict] = {}
    set_level: dict[int, dict] = {}
    for e in doc["evidence"]:
        if e["kind"] == "set-disjoint":
            set_level[e["k"]] = e
        elif e["kind"] == "lp-infeasible":
            claimed[(e["k"], sig_from_json(e["signature"]))] = e
        else:
            return False, f"unknown evidence kind {e['kind']!r}"

    x, y = setup.p1[0], setup.p2[0]
    checked = 0
    for k in range(setup.kmax + 1):
        ev = degree_evidence(S, x, y, k)
        sl = set_level.get(k)
        if sl is None:
            return False, f"k={k}: set-level record missing"
        if (sl["pairs"], sl["simplices"], sl["empty_simplices"], sl["triples"]) != (
            ev.hom_pairs, ev.simplices, ev.set_disjoint_simplices, ev.triples
        ):
            return False, f"k={k}: set-level counts do not reproduce"
        for sig, (_, _, cnt) in ev.classes.items():
            e = claimed.pop((k, sig), None)
            if e is None:
                return False, f"k={k}: signature {sig_to_json(sig)} not covered"
            if e["triples"] != cnt:
                return False, f"k={k}: triple count for {sig_to_json(sig)} does not reproduce"
            f, g = GammaMor.from_json(e["f"]), GammaMor.from_json(e["g"])
            if signature_of(f, g) != sig or f.dom != x.degree or g.dom != y.degree:
                return False, f"k={k}: representative does not realize its signature"
            if class_meets(setup, f, g, eta):
                return False, f"k={k}: closed systems meet for signature {sig_to_json(sig)} at eta={fmt(eta)}"
            checked += 1
    if claimed:
        (k, sig), _ = next(iter(claimed.items()))
        return False, f"k={k}: spurious record {sig_to_json(sig)}"
    contains = (
        contains_own_point(setup.F, setup.I, eta, setup.p1),
        contains_own_point(setup.G, setup.J, eta, setup.p2),
    )
    if not all(contains) or doc.get("containment") != list(contains):
        return False, "a point is not inside its own neighborhood"
    return True, f"verified: kmax={setup.kmax}, {checked} class records, eta={fmt(eta)}"


# ---------------------------------------------------------------------------
# probing U'_{k,eta} at high degree without enumerating Hom([n], [k])


def _nonempty_sums(values) -> int:
    """Bitset of the sums of non-empty sub-multisets of ``values``."""
    anyset, nonempty = 1, 0
    for v in values:
        nonempty |= (nonempty << v) | (anyset << v)
        anyset |= anyset << v
    return nonempty


def _convolve(a: int, b: int) -> int:
    out, shift = 0, 0
    while a:
        if a & 1:
            out |= b << shift
        a >>= 1
        shift += 1
    return out


def _ceil(q: Fraction) -> int:
    return -((-q.numerator) // q.denominator)


def _bits_in(bits: int, lo: int, hi: int):
    lo = max(lo, 0)
    if hi < lo:
        return
    window = (bits >> lo) & ((1 << (hi - lo + 1)) - 1)
    v = lo
    while window:
        if window & 1:
            yield v
        window >>= 1
        v += 1


def closed_member(S: FiniteSSet, x: Simplex, I: IntervalFamily, eta: Fraction,
                  z: Simplex, weights: tuple[int, ...]) -> bool:
    """``(z, weights / sum(weights))`` in ``U'_{k,eta}`` for the singleton family at ``x``.

    Exact: block sums of every admissible support are integer subset sums.
    """
    D = sum(weights)
    n = x.degree
    fibers = [[] for _ in range(z.epi.cod + 1)]
    for pos, phi in enumerate(z.epi.images):
        fibers[phi].append(weights[pos])
    need = _ceil((1 - eta) * D)
    bounds = {
        (i, j): (a.numerator, a.denominator, b.numerator, b.denominator)
        for (i, j), a, b in I.bounds
    }
    for _, lab in valid_fiber_sets(S, x, z):
        blocks = []
        for i in range(n + 1):
            bits = 1
            for phi, label in lab.items():
                if label == i:
                    bits = _convolve(bits, _nonempty_sums(fibers[phi]))
            blocks.append(bits)
        if _search(blocks, bounds, need, [], n):
            return True
    return False


def _search(blocks, bounds, need, chosen, n) -> bool:
    j = len(chosen)
    lo, hi = 0, blocks[j].bit_length()
    for i, s in enumerate(chosen):
        ap, aq, bp, bq = bounds[(i, j)]
        lo = max(lo, -((-ap * s) // aq))
        hi = min(hi, (bp * s) // bq)
    if j == n:
        lo = max(lo, need - sum(chosen), 0)
        return hi >= lo and (blocks[j] >> lo) & ((1 << (hi - lo + 1)) - 1) != 0
    return any(_search(blocks, bounds, need, chosen + [s], n) for s in _bits_in(blocks[j], lo, hi))


def _random_weights(k: int, D: int, rng) -> tuple[int, ...]:
    from .sampling import random_composition

    return tuple(random_composition(k, D, rng))


def _targeted_weights(S, x: Simplex, alpha: BaryPoint, z: Simplex, D: int, rng) -> Optional[tuple[int, ...]]:
    """Weights whose block masses sit near ``alpha`` for a random admissible support."""
    options = valid_fiber_sets(S, x, z)
    if not options:
        return None
    _, lab = rng.choice(options)
    k = z.degree
    w = [0] * (k + 1)
    spill = rng.randint(0, D // 16)
    for i, a in enumerate(alpha.coords):
        mass = int(a * (D - spill)) + rng.randint(-2, 2)
        positions = [p for p, phi in enumerate(z.epi.images) if lab.get(phi) == i]
        for _ in range(max(mass, 0)):
            w[rng.choice(positions)] += 1
    while sum(w) < D:
        w[rng.randrange(k + 1)] += 1
    while sum(w) > D:
        p = rng.randrange(k + 1)
        if w[p]:
            w[p] -= 1
    return tuple(w)


@dataclass
class ProbeReport:
    k: int
    probes: int = 0
    in_first: int = 0
    in_second: int = 0
    common: list = field(default_factory=list)


def probe_certificate(S: FiniteSSet, doc: dict, probes: int, rng) -> list[ProbeReport]:
    """Random probes of ``U'_{k,eta}`` and ``V'_{k,eta}`` at every ``k <= kmax``."""
    (x, alpha), (y, beta) = _points_from(doc)
    setup = prepare(S, (x, alpha), (y, beta))
    eta = parse_rational(doc["eta"])
    out = []
    for k in range(setup.kmax + 1):
        rep = ProbeReport(k)
        zs = S.simplices_of_degree(k)
        D = 12 * (k + 1)
        for t in range(probes):
            z = rng.choice(zs)
            mode = t % 4
            w = None
            if mode == 1:
                w = _targeted_weights(S, x, alpha, z, D, rng)
            elif mode == 2:
                w = _targeted_weights(S, y, beta, z, D, rng)
            if w is None:
                w = _random_weights(k, D, rng)
            rep.probes += 1
            a = closed_member(S, x, setup.I, eta, z, w)
            b = closed_member(S, y, setup.J, eta, z, w)
            rep.in_first += a
            rep.in_second += b
            if a and b:
                rep.common.append((z, w))
        out.append(rep)
    return out
