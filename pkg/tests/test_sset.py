import json

import pytest

from simpsep.delta import compose, degeneracy, enumerate_morphisms, face, mor
from simpsep.sset import (
    BUILTIN,
    SSetError,
    Simplex,
    boundary,
    circle,
    collapsed_triangle,
    load_json,
    nondeg,
    resolve,
    standard_simplex,
)


def count_simplices_of_nerve(n, k):
    from math import comb

    return comb(n + k + 1, k + 1)


@pytest.mark.parametrize("name", sorted(BUILTIN))
def test_builtins_satisfy_identities(name):
    S = BUILTIN[name]()
    assert S.validate() == []
    assert load_json(json.dumps(S.to_json())) == S


@pytest.mark.parametrize("n,k", [(1, 0), (1, 3), (2, 2), (2, 4), (3, 3)])
def test_standard_simplex_counts(n, k):
    # k-simplices of Delta[n] are monotone maps [k] -> [n]
    assert len(standard_simplex(n).simplices_of_degree(k)) == count_simplices_of_nerve(n, k)


def test_boundary_counts():
    S = boundary(2)
    assert [len(S.nondegenerate(p)) for p in range(S.dim + 1)] == [3, 3]
    assert len(S.simplices_of_degree(2)) == 10 - 1


def test_faces_of_standard_simplex():
    S = standard_simplex(2)
    t = nondeg("t012", 2)
    assert [S.d(i, t).cell for i in range(3)] == ["e12", "e02", "e01"]
    assert S.d(1, nondeg("e01", 1)) == nondeg("v0", 0)


def test_circle_faces_are_the_vertex():
    S = circle()
    e = nondeg("e", 1)
    assert S.d(0, e) == S.d(1, e) == nondeg("v", 0)
    assert len(S.simplices_of_degree(2)) == 3


def test_collapsed_face_is_degenerate():
    S = collapsed_triangle()
    assert S.d(0, nondeg("t012", 2)) == Simplex(mor([0, 0]), "v1")


@pytest.mark.parametrize("name", ["delta2", "boundary2", "circle", "collapsed"])
def test_face_of_degeneracy(name):
    S = BUILTIN[name]()
    for k in range(3):
        for z in S.simplices_of_degree(k):
            for j in range(k + 1):
                sz = S.apply(degeneracy(k + 1, j), z)
                assert S.apply(face(k, j), sz) == z
                assert S.apply(face(k, j + 1), sz) == z


@pytest.mark.parametrize("name", ["delta2", "boundary2", "collapsed"])
def test_functoriality(name):
    S = BUILTIN[name]()
    for a in range(3):
        for b in range(3):
            for c in range(3):
                for f in enumerate_morphisms(a, b):
                    for g in enumerate_morphisms(b, c):
                        for z in S.simplices_of_degree(c):
                            assert S.apply(compose(g, f), z) == S.apply(f, S.apply(g, z))


def test_broken_identity_is_rejected():
    doc = standard_simplex(2).to_json()
    doc["faces"]["t012"] = list(reversed(doc["faces"]["t012"]))
    with pytest.raises(SSetError, match="simplicial identity"):
        load_json(doc)


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("cells"),
    lambda d: d["faces"].__setitem__("e01", [{"epi": {"dom": 0, "cod": 0, "images": [0]}, "cell": "nope"}] * 2),
    lambda d: d["faces"].__setitem__("e01", []),
    lambda d: d["cells"].__setitem__("5", ["x"]),
])
def test_schema_violations(mutate):
    doc = standard_simplex(1).to_json()
    mutate(doc)
    with pytest.raises(SSetError):
        load_json(doc)


def test_resolve(tmp_path):
    assert resolve("boundary2") == boundary(2)
    path = tmp_path / "s.json"
    path.write_text(json.dumps(circle().to_json()))
    assert resolve(str(path)) == circle()
    with pytest.raises(FileNotFoundError):
        resolve(str(tmp_path / "missing.json"))
