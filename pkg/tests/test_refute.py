import json

import pytest

from oracles import faces_of_ideal, is_cm_reisner, min_vertex_cover, missing_family
from srlink.algebra import MonomialIdeal
from srlink.liaison.certificate import RefutationCertificate, multipliers, replay, squarefree_quadrics
from srlink.liaison.refute import (
    GENERAL,
    SQUAREFREE,
    coverage_problems,
    missing_generator_family,
    refute_deg1,
    refute_deg2,
)


def _sets(I):
    return [frozenset(i + 1 for i, a in enumerate(g) if a) for g in I.generators]


def test_input_validation():
    with pytest.raises(ValueError):
        refute_deg1(MonomialIdeal.parse(3, ["x1*x2"]))
    with pytest.raises(ValueError):
        refute_deg1(MonomialIdeal.parse(3, ["x1^2*x2"]))
    with pytest.raises(ValueError):
        refute_deg2(MonomialIdeal.parse(3, ["x1*x2*x3"]), mode="bogus")


@pytest.mark.parametrize("k", [1, 2])
def test_missing_family_matches_oracle(ex45_ideal, k):
    gens = [sorted(s) for s in _sets(ex45_ideal)]
    fam = missing_generator_family(ex45_ideal, k)
    got = {frozenset(_sets(A)) for A in fam}
    assert got == missing_family(6, gens, k)
    assert len(fam) == len(got)


def test_missing_family_heights_and_cm_by_oracle(ex45_ideal):
    gens = [sorted(s) for s in _sets(ex45_ideal)]
    for k, want in ((1, 5), (2, 60)):
        fam = missing_family(6, gens, k)
        h2 = [A for A in fam if min_vertex_cover(6, A) == 2]
        assert len(h2) == want
        assert not any(is_cm_reisner(faces_of_ideal(6, A)) for A in h2)


def test_multiplier_cap_on_rp2(rp2_ideal):
    # at most two variables x_j put x_j * z into the ideal for any squarefree quadric z
    caps = []
    for z in squarefree_quadrics(6):
        caps.append(len(multipliers(rp2_ideal, [z])))
    assert max(caps) == 2


def test_deg1_general_rp2(rp2_deg1):
    r = rp2_deg1
    assert r.refuted
    assert r.counts["admissible quadrics per support"] == {1: 15}
    assert r.counts["forced ideal heights"] == [3, 3]
    assert replay(r.certificate).ok


def test_deg2_general_rp2(rp2_deg2):
    r = rp2_deg2
    assert r.refuted
    assert r.counts["sums per w by term count"] == {"x1": {2: 10, 3: 10, 4: 5, 5: 1}}
    assert r.counts["allowable w per single term"] == {0: 6, 2: 15}
    assert all(h >= 3 for h in r.counts["GF(2) min heights"].values())


def test_squarefree_modes(ex45_ideal):
    d1 = refute_deg1(ex45_ideal, mode=SQUAREFREE)
    d2 = refute_deg2(ex45_ideal, mode=SQUAREFREE)
    assert d1.refuted and d2.refuted
    assert d2.counts["three-term profile"] == {"nonempty": 60, "max": 1}
    assert d1.certificate.mode == SQUAREFREE
    assert "squarefree" in d1.certificate.claim
    for r in (d1, d2):
        assert replay(r.certificate).ok


def test_squarefree_mode_on_rp2_is_also_refuted(rp2_ideal):
    assert refute_deg2(rp2_ideal, mode=SQUAREFREE).refuted


def test_not_refuted_reports_open_cases():
    # the vertex construction at x1 gives a genuine link, so this case stays open
    C = MonomialIdeal.parse(5, ["x1*x2*x4", "x1*x2*x5", "x1*x4*x5", "x2*x3*x5"])
    r = refute_deg1(C, mode=SQUAREFREE)
    assert not r.refuted
    assert r.certificate.unresolved[0] == r.candidates[0]["id"]
    assert replay(r.certificate).ok


def test_general_mode_leaves_the_genuine_link_open():
    C = MonomialIdeal.parse(5, ["x1*x2*x4", "x1*x2*x5", "x1*x4*x5", "x2*x3*x5"])
    r = refute_deg1(C, mode=GENERAL)
    assert not r.refuted
    assert "deg1/x1" in r.certificate.unresolved


def test_non_unmixed_cubic_is_refuted():
    # x1*x4*(x2, x3) is not unmixed, so it cannot be a basic double G-link
    C = MonomialIdeal.parse(4, ["x1*x2*x4", "x1*x3*x4"])
    assert refute_deg1(C, mode=SQUAREFREE).refuted


def test_certificate_json_round_trip_and_tampering(ex45_ideal):
    r = refute_deg2(ex45_ideal, mode=SQUAREFREE)
    text = r.certificate.dumps()
    cert = RefutationCertificate.from_dict(json.loads(text))
    assert replay(cert).ok
    # flip one recorded outcome
    d = json.loads(text)
    for case in d["cases"]:
        if case["checks"]:
            chk = case["checks"][0]
            chk["expect"] = {"tampered": True}
            break
    assert not replay(RefutationCertificate.from_dict(d)).ok
    # drop a case
    d = json.loads(text)
    d["cases"].pop()
    bad = RefutationCertificate.from_dict(d)
    assert any("case count" in p for p in coverage_problems(bad))
    # claim a false refutation with a different ideal
    d = json.loads(text)
    d["ideal"] = d["ideal"][:-1]
    assert coverage_problems(RefutationCertificate.from_dict(d))
    d = json.loads(text)
    d["schema_version"] = 99
    with pytest.raises(ValueError):
        RefutationCertificate.from_dict(d)


def test_deterministic(ex45_ideal):
    a = refute_deg1(ex45_ideal, mode=SQUAREFREE).certificate.dumps()
    b = refute_deg1(ex45_ideal, mode=SQUAREFREE).certificate.dumps()
    assert a == b


def test_general_deg1_without_symmetry_matches_mode_constant(rp2_deg1):
    assert rp2_deg1.certificate.mode == GENERAL
