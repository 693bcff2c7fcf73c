from fractions import Fraction

import random

import pytest
from hypothesis import given, strategies as st

from simpsep.delta import compose, enumerate_morphisms, face, mor
from simpsep.gamma import enumerate_gamma, gmor
from simpsep.geometry import (
    BaryPoint,
    IntervalFamily,
    lambda_ratios,
    make_admissible,
    make_disjoint_pair,
    point,
    pushforward,
    vertex,
    w_constraints,
    w_member,
    w_member_fast,
)
from simpsep.rational import fmt, parse_rational
from simpsep.sampling import random_point

weights = st.lists(st.integers(0, 9), min_size=1, max_size=5).filter(lambda w: sum(w) > 0)
interior = st.lists(st.integers(1, 9), min_size=2, max_size=4)


def as_point(w):
    return BaryPoint(tuple(Fraction(v, sum(w)) for v in w))


def test_rationals_are_strings_not_floats():
    assert parse_rational("3/6") == Fraction(1, 2)
    assert parse_rational("-2") == -2
    assert fmt(Fraction(4, 2)) == "2"
    for bad in ("0.5", "1/0", "1e3", 0.5, "", "a/b"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_point_validation():
    with pytest.raises(ValueError):
        point("1/2", "1/3")
    with pytest.raises(ValueError):
        point("3/2", "-1/2")
    assert BaryPoint.from_json(["1/3", "2/3"]) == point("1/3", "2/3")


def test_pushforward_examples():
    assert pushforward(face(0, 0), point(1)) == vertex(1, 1)
    d = mor([0, 0, 1])
    assert pushforward(d, point("1/6", "1/3", "1/2")) == point("1/2", "1/2")


@given(weights)
def test_pushforward_is_functorial(w):
    t = as_point(w)
    k = len(w) - 1
    for f in enumerate_morphisms(k, k + 1)[:6]:
        for g in enumerate_morphisms(k + 1, k)[:6]:
            assert pushforward(compose(g, f), t) == pushforward(g, pushforward(f, t))


def test_lambda_ratios():
    lam = lambda_ratios(point("1/6", "1/3", "1/2"))
    assert lam == {(0, 1): 2, (0, 2): 3, (1, 2): Fraction(3, 2)}
    with pytest.raises(ValueError):
        lambda_ratios(point(0, 1))


def test_interval_family_validation():
    with pytest.raises(ValueError):
        IntervalFamily(1, ())
    with pytest.raises(ValueError):
        IntervalFamily(1, (((0, 1), Fraction(2), Fraction(1)),))
    with pytest.raises(ValueError):
        IntervalFamily(1, (((0, 1), Fraction(0), Fraction(1)),))


@given(interior)
def test_admissible_intervals_contain_ratios(w):
    alpha = as_point(w)
    I = make_admissible(alpha)
    for (i, j), v in lambda_ratios(alpha).items():
        assert I.contains(i, j, v)


@given(interior, interior)
def test_disjoint_pair(wa, wb):
    if len(wa) != len(wb):
        return
    a, b = as_point(wa), as_point(wb)
    diff = [x - y for x, y in zip(a.coords, b.coords)]
    pair = next(((k, l) for k in range(len(wa)) for l in range(k + 1, len(wa)) if diff[k] < 0 < diff[l]), None)
    if pair is None:
        return
    I, J = make_disjoint_pair(a, b, *pair)
    (a1, b1), (a2, b2) = I.interval(*pair), J.interval(*pair)
    assert b2 < a1 or b1 < a2
    assert all(I.contains(i, j, v) for (i, j), v in lambda_ratios(a).items())
    assert all(J.contains(i, j, v) for (i, j), v in lambda_ratios(b).items())


def test_identity_region_contains_alpha():
    alpha = point("1/6", "1/3", "1/2")
    I = make_admissible(alpha)
    f = enumerate_gamma(2, 2, onto_only=True)[0]
    assert w_member(f, Fraction(1, 2), I, False, alpha)
    assert not w_member(f, Fraction(1, 2), I, False, vertex(2, 0))


def test_eps_bounds():
    I = make_admissible(point("1/2", "1/2"))
    with pytest.raises(ValueError):
        w_constraints(gmor([[0], [1]], 1), 1, I)
    with pytest.raises(ValueError):
        w_constraints(gmor([[0], [1]], 1), 0, I)


@pytest.mark.parametrize("kp", [1, 2, 3])
def test_fast_membership_matches_rows(kp):
    rng = random.Random(kp)
    I = make_admissible(point("1/3", "2/3"))
    eps = Fraction(1, 3)
    for f in enumerate_gamma(1, kp):
        for _ in range(40):
            t = random_point(kp, rng)
            for closed in (False, True):
                assert w_member_fast(f, eps, I, closed, t) == w_member(f, eps, I, closed, t)


@pytest.mark.parametrize("kp", [1, 2, 3])
def test_open_inside_closed_and_monotone_in_eps(kp):
    rng = random.Random(10 + kp)
    I = make_admissible(point("1/4", "3/4"))
    small, big = Fraction(1, 4), Fraction(1, 2)
    for f in enumerate_gamma(1, kp):
        for _ in range(40):
            t = random_point(kp, rng)
            if w_member_fast(f, small, I, False, t):
                assert w_member_fast(f, big, I, False, t)
            if w_member_fast(f, big, I, False, t):
                assert w_member_fast(f, big, I, True, t)

