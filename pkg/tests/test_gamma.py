import pytest
from hypothesis import given, strategies as st

from simpsep.delta import degeneracy, face, identity, is_epi
from simpsep.gamma import (
    GammaMor,
    count_at,
    enumerate_gamma,
    epi_to_onto,
    eval_on,
    gmor,
    is_onto,
    leq,
    minus,
    onto_to_epi,
    plus,
    poset,
    push_mono,
    red_sup,
    subset_leq,
    upper_set,
)

HOM_COUNTS = {
    (0, 0): 1, (0, 1): 3, (0, 2): 7, (0, 3): 15, (0, 4): 31, (0, 5): 63,
    (1, 1): 1, (1, 2): 5, (1, 3): 17, (1, 4): 49, (1, 5): 129,
    (2, 2): 1, (2, 3): 7, (2, 4): 31, (2, 5): 111,
}


@st.composite
def gammas(draw, kmax=2, kpmax=5):
    k = draw(st.integers(0, kmax))
    kp = draw(st.integers(k, kpmax))
    return draw(st.sampled_from(enumerate_gamma(k, kp)))


def test_eval():
    f = gmor([[0], [1, 2]], 2)
    assert eval_on(f, {0, 1}) == {0, 1, 2}
    assert eval_on(f, set()) == frozenset()
    assert eval_on(gmor([[0, 1], [3]], 3), {1}) == {3}


def test_blocks_must_be_strictly_ordered():
    with pytest.raises(ValueError):
        gmor([[0, 2], [1]], 2)
    with pytest.raises(ValueError):
        gmor([[0], []], 2)


@pytest.mark.parametrize("k,kp", sorted(HOM_COUNTS))
def test_hom_counts(k, kp):
    assert len(enumerate_gamma(k, kp)) == HOM_COUNTS[(k, kp)]


def test_onto():
    assert is_onto(gmor([[0], [1, 2]], 2))
    assert not is_onto(gmor([[0], [2]], 2))
    assert len(enumerate_gamma(1, 2, onto_only=True)) == 2


def test_duality_examples():
    assert epi_to_onto(degeneracy(1, 0)).blocks == ((0, 1),)
    assert onto_to_epi(gmor([[0], [1, 2]], 2)).images == (0, 1, 1)


@given(gammas())
def test_duality_round_trip(f):
    if is_onto(f):
        s = onto_to_epi(f)
        assert is_epi(s) and epi_to_onto(s) == f


def test_push_mono_examples():
    assert push_mono(face(1, 1), gmor([[0], [1]], 1)) == gmor([[0], [2]], 2)
    f = gmor([[0, 1], [2]], 2)
    assert push_mono(identity(2), f) == f
    assert push_mono(face(2, 0), f) == gmor([[1, 2], [3]], 3)


@given(gammas())
def test_red_sup_decomposes(f):
    red, sup = red_sup(f)
    assert is_onto(red)
    assert push_mono(sup, red) == f


def test_red_sup_examples():
    red, sup = red_sup(gmor([[0], [2]], 2))
    assert red == gmor([[0], [1]], 1) and sup.images == (0, 2)
    red, sup = red_sup(gmor([[1, 3]], 4))
    assert red == gmor([[0, 1]], 1) and sup.images == (1, 3)


def test_count_plus_minus_examples():
    f = gmor([[0], [2, 3]], 3)
    assert count_at(f, 3) == 2 and count_at(f, 1) == 0
    assert count_at(gmor([[0, 1, 2]], 2), 1) == 3
    assert plus(gmor([[1], [3]], 3), 0) == gmor([[0, 1], [3]], 3)
    assert plus(gmor([[0], [3]], 3), 0) == gmor([[0, 1], [3]], 3)
    assert plus(gmor([[0], [1]], 1), 0) is None
    assert minus(gmor([[0], [2]], 2), 1) == gmor([[0], [1]], 1)
    assert minus(gmor([[0, 1], [2]], 2), 0) == gmor([[0], [1]], 1)
    assert minus(gmor([[0], [1]], 1), 1) is None


def test_last_coordinate_minus():
    assert minus(gmor([[0], [1, 2]], 2), 2) == gmor([[0], [1]], 1)


def test_order_is_strictly_finer_than_inclusion():
    f, g = gmor([[0, 4]], 4), gmor([[0, 2, 4]], 4)
    assert subset_leq(f, g)
    assert not leq(f, g)


def test_upper_sets():
    f = gmor([[0]], 1)
    assert set(upper_set(f)) == {f, gmor([[0, 1]], 1)}
    onto = gmor([[0], [1, 2]], 2)
    assert upper_set(onto) == (onto,)


@given(gammas())
def test_upper_set_matches_filter(f):
    brute = {g for g in enumerate_gamma(f.dom, f.cod) if leq(f, g)}
    assert set(upper_set(f)) == brute
    assert all(subset_leq(f, g) for g in brute)


@pytest.mark.parametrize("k,kp", [(0, 3), (1, 4), (2, 4)])
def test_poset_is_an_order_with_onto_maxima(k, kp):
    P = poset(k, kp)
    assert P.is_antisymmetric()
    assert set(P.maximal()) == set(enumerate_gamma(k, kp, onto_only=True))


@given(gammas())
def test_json_round_trip(f):
    assert GammaMor.from_json(f.to_json()) == f
