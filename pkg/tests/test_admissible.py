import pytest
from hypothesis import given, strategies as st

from simpsep import admissible as adm
from simpsep.checks import check_family_statements, check_firstproperties, check_uproperties
from simpsep.delta import compose, enumerate_morphisms
from simpsep.gamma import enumerate_gamma, epi_to_onto, onto_to_epi, red_sup
from simpsep.separation import singleton_u_holds
from simpsep.sset import BUILTIN, nondeg


@st.composite
def epi_pairs(draw):
    k = draw(st.integers(0, 4))
    n = draw(st.integers(0, k))
    m = draw(st.integers(0, k))
    sigma = draw(st.sampled_from(enumerate_morphisms(k, n, "epi")))
    tau = draw(st.sampled_from(enumerate_morphisms(k, m, "epi")))
    return sigma, tau


@given(epi_pairs())
def test_factoring_criteria_agree(pair):
    sigma, tau = pair
    brute = any(compose(rho, tau) == sigma for rho in enumerate_morphisms(tau.cod, sigma.cod))
    assert adm.factors_through(sigma, tau) == brute == adm.kernel_refines(sigma, tau)


@pytest.mark.parametrize("name,cell", [("delta1", "e01"), ("boundary2", "v1"), ("delta2", "e02"), ("collapsed", "e01")])
@pytest.mark.parametrize("kind", ["singleton", "complement"])
def test_families_are_admissible(name, cell, kind):
    S = BUILTIN[name]()
    x = nondeg(cell, S.degree_of[cell])
    build = adm.build_singleton if kind == "singleton" else adm.build_complement
    F = build(S, x, x.degree + 2)
    assert adm.admissibility_violations(F) == []
    assert check_firstproperties(F).ok


def test_complement_family_is_larger():
    S = BUILTIN["boundary2"]()
    x = nondeg("e01", 1)
    single, comp = adm.build_singleton(S, x, 3), adm.build_complement(S, x, 3)
    assert all(single.table[s] <= comp.table[s] for s in single.epis())
    assert any(single.table[s] < comp.table[s] for s in single.epis())


def test_degenerate_base_rejected():
    S = BUILTIN["delta1"]()
    z = S.simplices_of_degree(1)[0]
    assert z.epi.images == (0, 0)
    with pytest.raises(ValueError):
        adm.build_singleton(S, z, 2)
    with pytest.raises(ValueError):
        adm.build_singleton(S, nondeg("e01", 1), 0)


def test_cover_condition_enforced_beyond_N():
    S = BUILTIN["delta1"]()
    F = adm.build_singleton(S, nondeg("e01", 1), 1)
    sigma = enumerate_morphisms(3, 1, "epi")[0]
    with pytest.raises(ValueError, match="N >= n\\+1"):
        adm.u_of_epi(F, sigma)


@pytest.mark.parametrize("name", ["delta1", "boundary2", "delta2", "collapsed"])
def test_singleton_sets_are_singletons(name):
    S = BUILTIN[name]()
    for x in S.nondegenerate():
        F = adm.build_singleton(S, x, x.degree + 1)
        assert singleton_u_holds(F, x.degree + 4) is None


def test_u_of_onto_matches_epi():
    S = BUILTIN["boundary2"]()
    F = adm.build_singleton(S, nondeg("e12", 1), 2)
    for k in range(1, 4):
        for sigma in enumerate_morphisms(k, 1, "epi"):
            assert adm.u_of_gamma(F, epi_to_onto(sigma)) == adm.u_of_epi(F, sigma)


def test_u_of_gamma_is_a_pullback_along_sup():
    S = BUILTIN["delta1"]()
    F = adm.build_singleton(S, nondeg("e01", 1), 2)
    for f in enumerate_gamma(1, 3):
        red, sup = red_sup(f)
        target = adm.u_of_epi(F, onto_to_epi(red))
        expected = {z for z in S.simplices_of_degree(3) if S.apply(sup, z) in target}
        assert adm.u_of_gamma(F, f) == expected
        assert expected


def test_u_properties_on_a_circle():
    S = BUILTIN["circle"]()
    F = adm.build_singleton(S, nondeg("e", 1), 2)
    rep = check_uproperties(F, extra=2)
    assert rep.ok, str(rep)
    assert rep.cases > 100


def test_family_statements_small():
    rep = check_family_statements(BUILTIN["delta1"](), 2)
    assert rep.ok, str(rep)
