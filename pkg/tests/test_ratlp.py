import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from simpsep.geometry import EQ, LE, LT, LinSystem, row
from simpsep.ratlp import disjoint, feasible
from simpsep.sampling import random_rational_vector, random_system


def system(nvars, *rows):
    return LinSystem(nvars, tuple(row(c, rel, b) for c, rel, b in rows))


def test_strict_versus_weak():
    assert not feasible(system(1, ([1], LT, 0), ([-1], LT, 0)))
    res = feasible(system(1, ([1], LE, 0), ([-1], LE, 0)))
    assert res and res.witness == (0,)
    assert not feasible(system(1, ([1], LT, 0), ([-1], LE, 0)))


def test_equalities():
    res = feasible(system(2, ([1, 1], EQ, 1), ([1, -1], EQ, 0)))
    assert res.witness == (Fraction(1, 2), Fraction(1, 2))
    assert not feasible(system(2, ([1, 1], EQ, 1), ([2, 2], EQ, 3)))
    assert not feasible(system(1, ([0], EQ, 1)))


def test_empty_and_trivial_rows():
    assert feasible(LinSystem(3))
    assert not feasible(system(2, ([0, 0], LT, 0)))
    assert feasible(system(2, ([0, 0], LE, 0)))


def test_unbounded_directions():
    res = feasible(system(2, ([1, 0], LT, -5), ([0, -1], LT, -7)))
    assert res and res.witness[0] < -5 and res.witness[1] > 7


def test_disjoint_open_squares():
    a = system(2, ([1, 0], LT, 1), ([-1, 0], LT, 0), ([0, 1], LT, 1), ([0, -1], LT, 0))
    b = system(2, ([-1, 0], LT, -1), ([1, 0], LT, 2), ([0, 1], LT, 1), ([0, -1], LT, 0))
    assert not disjoint(a, b)
    b_closed = system(2, ([-1, 0], LE, -1), ([1, 0], LE, 2))
    a_closed = system(2, ([1, 0], LE, 1), ([-1, 0], LE, 0))
    assert disjoint(a_closed, b_closed).witness[0] == 1


def one_var_oracle(rows):
    lo, lo_strict, hi, hi_strict = None, False, None, False
    for c, rel, b in rows:
        c, b = Fraction(c), Fraction(b)
        strict = rel == LT
        if c == 0:
            if (strict and not 0 < b) or (not strict and not 0 <= b):
                return False
            continue
        v = b / c
        if c > 0:
            if hi is None or v < hi or (v == hi and strict):
                hi, hi_strict = v, strict
        else:
            if lo is None or v > lo or (v == lo and strict):
                lo, lo_strict = v, strict
    if lo is None or hi is None:
        return True
    return lo < hi or (lo == hi and not lo_strict and not hi_strict)


one_var_rows = st.lists(
    st.tuples(st.integers(-3, 3), st.sampled_from([LT, LE]), st.integers(-4, 4)), max_size=6
)


@given(one_var_rows)
def test_one_variable_oracle(rows):
    res = feasible(system(1, *[([c], rel, b) for c, rel, b in rows]))
    assert res.feasible == one_var_oracle(rows)


@given(st.integers(1, 5), st.integers(0, 12), st.integers(0, 2 ** 32))
def test_planted_point_is_found(nvars, nrows, seed):
    rng = random.Random(seed)
    x0 = random_rational_vector(nvars, rng)
    rows = []
    for _ in range(nrows):
        c = [rng.randint(-3, 3) for _ in range(nvars)]
        val = sum(Fraction(a) * v for a, v in zip(c, x0))
        rel = rng.choice((LT, LE, EQ))
        rows.append((c, rel, val + (1 if rel == LT else 0)))
    res = feasible(system(nvars, *rows))
    assert res.feasible
    assert system(nvars, *rows).holds(res.witness)


@pytest.mark.parametrize("seed", range(40))
def test_random_infeasible_verdicts_survive_probes(seed):
    rng = random.Random(seed)
    sys = random_system(rng, rng.randint(1, 4), rng.randint(2, 10))
    res = feasible(sys)
    if res:
        assert sys.holds(res.witness)
        return
    for _ in range(300):
        assert not sys.holds(random_rational_vector(sys.nvars, rng))


def test_variable_order_does_not_change_verdict():
    rng = random.Random(7)
    for _ in range(30):
        sys = random_system(rng, 3, 7)
        verdicts = {feasible(sys, order).feasible for order in ((0, 1, 2), (2, 1, 0), (1, 0, 2))}
        assert len(verdicts) == 1


def reference_feasible(sys):
    """Textbook Fourier-Motzkin with no pruning beyond constant rows."""
    rows = []
    for r in sys.rows:
        rows.append((list(r.coeffs), r.rel == LT, r.rhs))
        if r.rel == EQ:
            rows[-1] = (list(r.coeffs), False, r.rhs)
            rows.append(([-c for c in r.coeffs], False, -r.rhs))
    for var in range(sys.nvars):
        up = [r for r in rows if r[0][var] > 0]
        lo = [r for r in rows if r[0][var] < 0]
        rows = [r for r in rows if r[0][var] == 0]
        for cu, su, bu in up:
            for cl, sl, bl in lo:
                a, b = cu[var], -cl[var]
                rows.append(([b * x + a * y for x, y in zip(cu, cl)], su or sl, b * bu + a * bl))
    return all(b > 0 if s else b >= 0 for _, s, b in rows)


@pytest.mark.parametrize("seed", range(300))
def test_agrees_with_reference_elimination(seed):
    rng = random.Random(10_000 + seed)
    sys = random_system(rng, rng.randint(1, 4), rng.randint(1, 7))
    assert feasible(sys).feasible == reference_feasible(sys)
