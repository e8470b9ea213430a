import pytest

from srlink import datasets
from srlink.liaison.bdl import BDLWitness, verify_bdl
from srlink.liaison.biliaison import BiliaisonWitness, check_linked, linked_witnesses, verify_biliaison

N = ["x1*x2-x1*x4", "x3*x4-x3*x2", "x1+x3"]


def test_example_data():
    w = BiliaisonWitness.from_dict(datasets.load("ex55"))
    v = verify_biliaison(w)
    assert v.valid and v.equality
    assert v.L_monomial is False
    assert v.shift == 0
    assert v.direct is None
    L = sorted(str(g) for g in v.L.generators)
    assert "x1+x3" in L


def test_replacing_x_breaks_equality():
    w = BiliaisonWitness.parse(4, ["x1", "x4", "x3"], ["x1", "x2", "x3"], N, "x2", "x3")
    v = verify_biliaison(w)
    assert v.equality is False
    assert not v.valid


def test_identity_biliaison():
    w = BiliaisonWitness.parse(3, ["x1", "x2"], ["x1", "x2"], ["x2"], "x1", "x1")
    v = verify_biliaison(w)
    assert v.valid
    assert v.shift == 0
    assert v.L_monomial is True
    assert v.direct == {"r": "1", "equal": True}


def test_preconditions_are_reported_not_raised():
    # a = x3 is not in J and heights do not step up from N
    w = BiliaisonWitness.parse(3, ["x1", "x2"], ["x1", "x2"], ["x1*x2"], "x3", "x3")
    v = verify_biliaison(w)
    assert not v.valid
    assert v.preconditions["a in J"] is False
    assert v.equality is None
    assert "not checked" in "\n".join(v.lines())


def test_zero_divisor_a():
    w = BiliaisonWitness.parse(3, ["x1", "x3"], ["x1", "x3"], ["x1*x2"], "x1", "x1")
    v = verify_biliaison(w)
    assert v.preconditions["a nonzerodivisor on S/N"] is False


def test_shift_counts_degrees():
    w = BiliaisonWitness.parse(3, ["x1", "x2"], ["x1", "x2"], ["x2"], "x1", "x1*x3")
    assert w.shift == 1
    v = verify_biliaison(w)
    assert v.direct is not None and v.direct["r"] == "x3"


def test_linked_witnesses():
    w = BiliaisonWitness.from_dict(datasets.load("ex55"))
    links = linked_witnesses(w)
    assert set(links) == {"L from I", "L from J"}
    verdicts = check_linked(w)
    # N is not monomial, so unmixedness and CM of A = N cannot be certified
    assert all(v.overall == "incomplete" and not v.failed() for v in verdicts.values())


def test_both_ideals_link_from_common_ideal():
    for name in ("ex55-bdl-I", "ex55-bdl-J"):
        assert verify_bdl(BDLWitness.from_dict(datasets.load(name))).valid


def test_missing_field():
    with pytest.raises(ValueError):
        BiliaisonWitness.from_dict({"n": 3, "I": ["x1"]})
