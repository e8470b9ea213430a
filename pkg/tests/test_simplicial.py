import random
import warnings

import pytest

from oracles import faces_from_facets, facets_of, faces_of_ideal, minimal_nonfaces
from srlink.algebra import MonomialIdeal
from srlink.simplicial import (
    FacetReductionWarning,
    SimplicialComplex,
    complex_of,
    mask_of,
    stanley_reisner,
    vertices_of,
)


def _faces(cx):
    return frozenset(frozenset(vertices_of(m)) for m in cx.faces)


def test_masks():
    assert mask_of([1, 3]) == 0b101
    assert vertices_of(0b101) == [1, 3]


def test_square(square):
    assert square.dim == 1
    assert square.is_pure
    assert stanley_reisner(square).strings() == ["x1*x3", "x2*x4"]
    assert square.f_vector() == [1, 4, 4]


def test_link_deletion_cone(square):
    lk = square.link(1)
    assert lk.facets == [(2,), (4,)]
    assert not lk.ground & 1
    dl = square.deletion(1)
    assert dl.facets == [(2, 3), (3, 4)]
    cone = dl.cone(1)
    assert cone.facets == [(1, 2, 3), (1, 3, 4)]
    with pytest.raises(ValueError):
        square.cone(1)
    with pytest.raises(IndexError):
        square.link(9)


def test_void_and_empty():
    void = SimplicialComplex.void(3)
    with pytest.raises(ValueError):
        void.dim
    empty = SimplicialComplex.empty(3)
    assert empty.dim == -1
    assert stanley_reisner(empty).strings() == ["x1", "x2", "x3"]
    # the unit ideal has the void complex
    assert complex_of(MonomialIdeal.parse(3, ["1"])).is_void


def test_simplex():
    s = SimplicialComplex.simplex([1, 2, 3])
    assert s.dim == 2 and s.is_simplex
    assert stanley_reisner(s).strings() == []


def test_json_round_trip(rp2):
    again = SimplicialComplex.from_dict(rp2.to_dict())
    assert again == rp2


def test_non_maximal_facets_warn():
    with pytest.warns(FacetReductionWarning):
        SimplicialComplex.from_dict({"n": 3, "facets": [[1, 2], [1]]})
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        SimplicialComplex.from_dict({"n": 3, "facets": [[1, 2], [3]]})


def test_malformed_json():
    with pytest.raises(ValueError):
        SimplicialComplex.from_dict({"facets": [[1]]})
    with pytest.raises(ValueError):
        SimplicialComplex.from_dict({"n": 2, "facets": [[1, 3]]})


def test_faces_match_oracle(rp2):
    want = faces_from_facets([set(F) for F in rp2.facets])
    assert _faces(rp2) == want


def test_minimal_nonfaces_match_oracle(ex45):
    faces = _faces(ex45)
    want = [sorted(F) for F in minimal_nonfaces(6, faces)]
    got = sorted(sorted(vertices_of(m)) for m in ex45.minimal_nonfaces())
    assert sorted(want) == got


def test_complex_of_matches_oracle():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 6)
        gens = [set(rng.sample(range(1, n + 1), rng.randint(1, n))) for _ in range(rng.randint(1, 5))]
        I = MonomialIdeal.from_sets(n, gens)
        cx = complex_of(I)
        want = faces_of_ideal(n, gens)
        assert _faces(cx) == want
        assert sorted(cx.facets) == sorted(tuple(sorted(F)) for F in facets_of(want))


def test_relabel(square):
    r = square.relabel([2, 3, 4, 1])
    assert r == square
