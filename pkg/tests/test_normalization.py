from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srlink.liaison.normalization import apply_rescaling, free_term, rescaling, term_graph, triangular_witness


def _e(n, *vs):
    e = [0] * n
    for v in vs:
        e[v - 1] += 1
    return tuple(e)


def test_triangular_path():
    ys = [_e(4, 1, 2), _e(4, 2, 3), _e(4, 3, 4)]
    w = triangular_witness(ys)
    assert w is not None
    scale = rescaling(ys, [2, 3, 5], w)
    assert apply_rescaling(ys, [2, 3, 5], scale) == [1, 1, 1]


def test_cycle_has_no_triangular_order():
    ys = [_e(3, 1, 2), _e(3, 2, 3), _e(3, 1, 3)]
    assert triangular_witness(ys) is None
    with pytest.raises(ValueError):
        rescaling(ys, [1, 2, 3])


def test_free_term_of_five_cycle():
    # the cycle 2-3-5-6-4-2 on the quadrics met in the degree-2 analysis
    ys = [_e(6, 2, 3), _e(6, 2, 4), _e(6, 3, 5), _e(6, 4, 6), _e(6, 5, 6)]
    k = free_term(ys)
    assert term_graph([ys[k]]) == [(3, 5)]
    rest = ys[:k] + ys[k + 1 :]
    assert triangular_witness(rest) is not None


def test_free_term_rejects_non_cycles():
    with pytest.raises(ValueError):
        free_term([_e(4, 1, 2), _e(4, 2, 3)])
    with pytest.raises(ValueError):
        term_graph([_e(3, 1, 1)])


coeffs = st.fractions(min_value=-5, max_value=5).filter(bool)


@settings(max_examples=60, deadline=None)
@given(st.permutations(range(1, 7)), st.integers(1, 5), st.lists(coeffs, min_size=5, max_size=5))
def test_rescaling_normalizes_any_path(order, length, cs):
    # the terms of a path are always triangular and rescale to all ones
    ys = [_e(6, order[i], order[i + 1]) for i in range(length)]
    scale = rescaling(ys, cs[:length])
    assert apply_rescaling(ys, cs[:length], scale) == [Fraction(1)] * length
