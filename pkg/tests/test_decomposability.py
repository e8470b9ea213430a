import pytest

from srlink.decomposability import is_vertex_decomposable, is_weakly_vertex_decomposable, shedding_vertices
from srlink.graphs import circulant, independence_complex
from srlink.homology import is_cohen_macaulay
from srlink.simplicial import SimplicialComplex


def test_square_is_vd(square):
    t = is_vertex_decomposable(square)
    assert t.verdict
    assert t.vertex is not None
    assert is_weakly_vertex_decomposable(square).verdict


def test_simplex_and_point_are_vd():
    assert is_vertex_decomposable(SimplicialComplex.simplex([1, 2, 3])).verdict
    assert is_vertex_decomposable(SimplicialComplex.empty(2)).verdict


def test_non_pure_is_not_vd():
    t = is_vertex_decomposable(SimplicialComplex(3, [[1, 2], [3]]))
    assert not t.verdict and t.reason == "not pure"


def test_void_raises():
    with pytest.raises(ValueError):
        is_vertex_decomposable(SimplicialComplex.void(2))


def test_rp2_is_cm_not_wvd(rp2):
    assert is_cohen_macaulay(rp2)
    assert not is_weakly_vertex_decomposable(rp2).verdict
    assert not is_vertex_decomposable(rp2).verdict


def test_ex45(ex45):
    assert not is_weakly_vertex_decomposable(ex45).verdict
    assert not is_vertex_decomposable(ex45).verdict


def test_vd_implies_wvd_implies_cm():
    # a few complexes on five vertices
    samples = [
        [[1, 2, 3], [2, 3, 4], [3, 4, 5]],
        [[1, 2], [2, 3], [3, 4], [4, 5], [1, 5]],
        [[1, 2], [3, 4]],
        [[1, 2, 3], [1, 4, 5]],
        [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]],
    ]
    for facets in samples:
        cx = SimplicialComplex(5, facets)
        vd = is_vertex_decomposable(cx).verdict
        wvd = is_weakly_vertex_decomposable(cx).verdict
        if vd:
            assert wvd
        if wvd:
            assert is_cohen_macaulay(cx)


def test_shedding_vertices(square):
    assert shedding_vertices(square) == [1, 2, 3, 4]


def test_trace_lines(square):
    lines = is_vertex_decomposable(square).lines()
    assert lines[0].startswith("vd: true")


def test_c16_not_wvd():
    cx = independence_complex(circulant(16, [1, 4, 8]))
    t = is_weakly_vertex_decomposable(cx)
    assert not t.verdict
    assert len(t.failures) == 16
