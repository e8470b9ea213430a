from srlink.algebra import MonomialIdeal
from srlink.liaison.symmetry import (
    ideal_automorphisms,
    is_ideal_automorphism,
    permute_exponents,
    permute_ideal,
    transport_map,
)


def test_permute():
    assert permute_exponents((1, 0, 2), [2, 3, 1]) == (2, 1, 0)
    I = MonomialIdeal.parse(3, ["x1*x2"])
    assert permute_ideal(I, [2, 3, 1]).strings() == ["x2*x3"]


def test_square_automorphisms():
    I = MonomialIdeal.parse(4, ["x1*x3", "x2*x4"])
    auts = ideal_automorphisms(I)
    assert len(auts) == 8
    assert all(is_ideal_automorphism(I, p) for p in auts)
    assert not is_ideal_automorphism(I, [1, 3, 2, 4])
    assert not is_ideal_automorphism(I, [1, 1, 2, 3])


def test_rp2_is_vertex_transitive(rp2_ideal):
    maps = transport_map(rp2_ideal)
    assert sorted(maps) == [1, 2, 3, 4, 5, 6]
    for v, p in maps.items():
        assert p[0] == v
        assert is_ideal_automorphism(rp2_ideal, p)
    # the ten-triangle projective plane has 60 symmetries
    assert len(ideal_automorphisms(rp2_ideal)) == 60
