import pytest

from oracles import all_complexes, is_cm_reisner, reduced_betti_snf, smith_diagonal
from srlink.algebra import MonomialIdeal
from srlink.homology import (
    chain_ranks,
    cm_failure,
    is_cm_quotient,
    is_cohen_macaulay,
    rank_gf2,
    rank_rational,
    reduced_betti,
    strip_variables,
)
from srlink.simplicial import SimplicialComplex


def _cx(n, faces):
    return SimplicialComplex(n, [sorted(F) for F in faces])


def test_smith_oracle_sanity():
    assert smith_diagonal([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert smith_diagonal([[0, 0], [0, 0]]) == []


def test_ranks():
    assert rank_rational([{0: 1, 1: 1}, {0: 2, 1: 2}, {1: 3}]) == 2
    assert rank_gf2([0b11, 0b11, 0b01]) == 2


def test_sphere_and_projective_plane(rp2):
    circle = SimplicialComplex(3, [[1, 2], [2, 3], [1, 3]])
    assert [reduced_betti(circle, "Q", i) for i in (-1, 0, 1)] == [0, 0, 1]
    assert [reduced_betti(rp2, "Q", i) for i in range(-1, 3)] == [0, 0, 0, 0]
    assert [reduced_betti(rp2, "GF2", i) for i in range(-1, 3)] == [0, 0, 1, 1]


def test_empty_complex_has_reduced_homology_in_degree_minus_one():
    e = SimplicialComplex.empty(2)
    assert reduced_betti(e, "Q", -1) == 1


def test_field_dependence(rp2):
    assert is_cohen_macaulay(rp2, "Q")
    assert not is_cohen_macaulay(rp2, "GF2")


def test_cm_failure_reason():
    two_points = SimplicialComplex(2, [[1], [2]])
    assert is_cohen_macaulay(two_points)
    bowtie = SimplicialComplex(5, [[1, 2, 3], [3, 4, 5]])
    assert "reduced homology" in cm_failure(bowtie)
    assert cm_failure(SimplicialComplex(3, [[1, 2], [3]])) == "not pure"
    with pytest.raises(ValueError):
        cm_failure(SimplicialComplex.void(2))


def test_strip_variables():
    lin, cx = strip_variables(MonomialIdeal.parse(4, ["x1", "x2*x3"]))
    assert lin == 1
    assert not cx.ground & 1
    assert is_cm_quotient(MonomialIdeal.parse(4, ["x1", "x2*x3"]))
    with pytest.raises(ValueError):
        strip_variables(MonomialIdeal.parse(2, ["x1^2"]))


def test_betti_vs_smith_oracle_small():
    # a quick subset of the exhaustive check run by the acceptance suite
    for faces in sorted(all_complexes(4, 8), key=lambda c: sorted(map(sorted, c)))[:150]:
        cx = _cx(4, faces)
        for prime, fld in ((0, "Q"), (2, "GF2")):
            for i in range(-1, 3):
                assert reduced_betti(cx, fld, i) == reduced_betti_snf(faces, i, prime)


def test_reisner_vs_oracle():
    for faces in all_complexes(4, 9):
        cx = _cx(4, faces)
        assert is_cohen_macaulay(cx, "Q") == is_cm_reisner(faces)


def test_rank_cache_is_field_specific(rp2):
    assert chain_ranks(rp2, "Q") is not chain_ranks(rp2, "GF2")
