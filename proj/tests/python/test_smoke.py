import json

import pytest

import slrep


CHAIN3 = (["0", "a", "b"], [0, 1, 2, 1, 1, 2, 2, 2, 2])


def test_semilattice_basics():
    S = slrep.FiniteSemilattice(*CHAIN3)
    assert S.size == 3
    assert S.join(1, 2) == 2
    assert S.leq(0, 2)
    assert S.least() == 0
    assert S.greatest() == 2
    assert S.is_lattice()


def test_distributivity():
    S = slrep.FiniteSemilattice(*CHAIN3)
    assert slrep.is_distributive(S)
    m3 = slrep.FiniteSemilattice(
        ["0", "x", "y", "z", "1"],
        [0, 1, 2, 3, 4, 1, 1, 4, 4, 4, 2, 4, 2, 4, 4,
         3, 4, 4, 3, 4, 4, 4, 4, 4, 4],
    )
    assert not slrep.is_distributive(m3)
    assert slrep.distributivity_defect(m3) is not None


def test_birkhoff():
    S = slrep.FiniteSemilattice(*CHAIN3)
    res = slrep.birkhoff(S)
    assert res["join_irreducibles"] == [1, 2]
    assert res["poset"].size == 2


def test_boolean_embedding_and_extension():
    S = slrep.FiniteSemilattice(*CHAIN3)
    boolean, index_set, jmap = slrep.embed_boolean(S)
    assert index_set == [0, 1]
    assert jmap == [0, 1, 3]
    B = slrep.boolean_semilattice(2)
    g = slrep.extend_hom(B, [0, 1], [0, 1], S)
    assert g == [0, 1, 0, 1]


def test_tower_round_trip():
    S = slrep.FiniteSemilattice(*CHAIN3)
    doc = slrep.synth_boolean_tower(S, 3, "zero-one")
    parsed = json.loads(doc)
    assert len(parsed["system"]["stages"]) == 3
    report = slrep.verify_cone(doc, 3)
    assert report["certified"]
    assert report["stabilization_offset"] == 1


def test_monoid_quotient():
    M = slrep.FiniteCommutativeMonoid(
        ["0", "1", "big"], [0, 1, 2, 1, 2, 2, 2, 2, 2], 0
    )
    quotient, projection = slrep.nabla(M)
    assert projection == [0, 1, 1]
    assert slrep.property_report(M)["riesz"]
    res = slrep.idc(M)
    assert res["theta_is_isomorphism"]


def test_strong_interpolation():
    u, v, w, z = slrep.strong_rip_witness(3, [2, 5], [1, 0], [1, 2], [4, 9])
    assert u == [1, 2]
    assert v == [1, 3]
    assert w == [0, 0]
    assert z == [1, 0]


def test_temperate():
    D = slrep.SetLattice(3, [0b000, 0b001, 0b011, 0b111], ["x", "y", "z"])
    assert slrep.ratio(["1/2", "3", "0"], ["1/3", "1", "2"]) == ["3/2", "3", "0"]
    assert slrep.is_positive(["1/2", "3", "0"], D)
    assert slrep.propto_witness(["1/2", "3", "0"], ["1/3", "1", "2"], D) == 4
    assert slrep.iota(["1/2", "3", "0"], D) == 0b011
    ok, defect = slrep.verify_lift_dlat(D)
    assert ok, defect


def test_bergman_tower():
    S = slrep.FiniteSemilattice(*CHAIN3)
    levels, maps, squares_ok = slrep.synth_tower(S, 4, True)
    assert levels == [[1, 1], [2, 1], [3, 1], [4, 1]]
    assert maps == [[[1, 0], [1, 1]]] * 3
    assert squares_ok


def test_dot_and_documents():
    S = slrep.FiniteSemilattice(*CHAIN3)
    assert "digraph" in slrep.semilattice_dot(S)
    doc = json.dumps(
        {"kind": "semilattice", "elements": ["0", "a"], "join": [[0, 1], [1, 1]]}
    )
    canonical = slrep.load_document(doc)
    assert slrep.load_document(canonical) == canonical


def test_invalid_input_raises():
    with pytest.raises(Exception):
        slrep.FiniteSemilattice(["a", "b"], [0, 1, 0, 1])
