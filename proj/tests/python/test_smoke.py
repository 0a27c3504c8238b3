from fractions import Fraction

import pytest

import oddcycles as oc


def test_parse_emit_round_trip():
    g, source_ids = oc.parse("0 1\n1 2\n2 0\n")
    assert (g.n, g.m) == (3, 3)
    assert source_ids == [0, 1, 2]
    again, _ = oc.parse(oc.emit(g))
    assert again.edges() == g.edges()


def test_average_degree_is_exact():
    assert oc.average_degree(oc.complete(4)) == Fraction(3)
    assert oc.average_degree(oc.cycle_graph(5)) == Fraction(2)


def test_invariants():
    w = oc.bipartite_check(oc.cycle_graph(5))
    assert not w["bipartite"]
    assert len(w["odd_cycle"]) == 5
    assert oc.girth(oc.complete(4)) == 3
    assert oc.odd_girth(oc.complete_bipartite(3, 3)) is None
    assert not oc.is_two_connected(oc.cut_vertex_odd_family(3, 5))["two_connected"]


def test_extract_and_verify_on_k7():
    g = oc.complete(7)
    res = oc.extract(g, k=2)
    assert res["t_achieved"] >= 2
    lengths = [c["length"] for c in res["cycles"]]
    assert all(l % 2 == 1 for l in lengths)
    assert lengths == sorted(lengths)
    report = oc.verify(g, res)
    assert report["pass"], report["failures"]


def test_extract_refuses_bipartite_input():
    with pytest.raises(oc.Error, match="bipartite"):
        oc.extract(oc.complete_bipartite(4, 4), k=2)


def test_oracle_residues():
    spectrum = oc.enumerate_cycles(oc.complete(6))
    assert not spectrum.truncated
    assert oc.residue_coverage(spectrum, 5) == {0, 1, 3, 4}
    assert oc.check_all_residues(spectrum, 5)["missing"] == {2}


def test_blowup_properties():
    b = oc.blowup(oc.cycle_graph(7), 3)
    assert b.n == 21
    assert oc.odd_girth(b) == 7
    assert oc.chromatic_number(b) == 3


def test_gnp_determinism():
    a = oc.gnp(50, 0.5, seed=7)
    b = oc.gnp(50, 0.5, seed=7)
    assert a.edges() == b.edges()


def test_run_residues():
    assert oc.run_residues(5, 5, 5) == {0, 1, 2, 3, 4}
    assert oc.run_residues(3, 4, 4) == {1, 3}
