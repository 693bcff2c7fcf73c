from math import comb

import pytest
from hypothesis import given, strategies as st

from simpsep.delta import (
    DeltaMor,
    compose,
    compose_generators,
    degeneracy,
    enumerate_morphisms,
    epi_mono_factor,
    face,
    generator_decomposition,
    identity,
    is_epi,
    is_mono,
    mor,
    section_of_epi,
)


@st.composite
def morphisms(draw, max_deg=5):
    k = draw(st.integers(0, max_deg))
    kp = draw(st.integers(0, max_deg))
    imgs = sorted(draw(st.lists(st.integers(0, kp), min_size=k + 1, max_size=k + 1)))
    return DeltaMor(k, kp, tuple(imgs))


def test_faces_and_degeneracies():
    assert face(1, 0).images == (1, 2)
    assert face(1, 2).images == (0, 1)
    assert degeneracy(2, 0).images == (0, 0, 1)
    assert degeneracy(1, 0).images == (0, 0)


def test_validation():
    with pytest.raises(ValueError):
        DeltaMor(1, 1, (1, 0))
    with pytest.raises(ValueError):
        DeltaMor(1, 1, (0, 2))
    with pytest.raises(ValueError):
        face(1, 3)


@pytest.mark.parametrize("k,kp", [(k, kp) for k in range(5) for kp in range(5)])
def test_hom_counts(k, kp):
    assert len(enumerate_morphisms(k, kp, "all")) == comb(k + kp + 1, k + 1)
    assert len(enumerate_morphisms(k, kp, "mono")) == comb(kp + 1, k + 1)
    assert len(enumerate_morphisms(k, kp, "epi")) == (comb(k, kp) if kp <= k else 0)


def test_enumeration_is_lexicographic():
    homs = enumerate_morphisms(2, 3)
    assert [f.images for f in homs] == sorted(f.images for f in homs)


def test_simplicial_identities():
    for k in range(4):
        for i in range(k + 2):
            for j in range(i + 1, k + 3):
                # d_j d_i = d_i d_{j-1} on the cosimplicial side
                assert compose(face(k + 1, j), face(k, i)) == compose(face(k + 1, i), face(k, j - 1))
        for j in range(k + 1):
            assert compose(degeneracy(k + 1, j), face(k, j)) == identity(k)
            assert compose(degeneracy(k + 1, j), face(k, j + 1)) == identity(k)


@given(morphisms())
def test_epi_mono_factorization(f):
    e, m = epi_mono_factor(f)
    assert is_epi(e) and is_mono(m)
    assert compose(m, e) == f


@given(morphisms())
def test_generator_decomposition_recomposes(f):
    assert compose_generators(generator_decomposition(f), f.dom) == f


def test_section_is_min_preimage():
    s = mor([0, 0, 1, 1, 2])
    d = section_of_epi(s)
    assert d.images == (0, 2, 4)
    assert compose(s, d) == identity(2)
    with pytest.raises(ValueError):
        section_of_epi(mor([0, 2]))


@given(morphisms(4), morphisms(4), morphisms(4))
def test_composition_associative(f, g, h):
    g = DeltaMor(g.dom, g.cod, g.images) if g.dom == f.cod else None
    if g is None or h.dom != g.cod:
        return
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


def test_json_round_trip():
    f = mor([0, 1, 1, 3], cod=4)
    assert DeltaMor.from_json(f.to_json()) == f
