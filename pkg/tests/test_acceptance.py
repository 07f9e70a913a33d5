"""Acceptance suite: fixture equality plus randomized property checks.

Every test enforces its pinned tolerance and prints one [PASS]/[FAIL] line
(run ``pytest tests/test_acceptance.py -v -s`` to see them).
"""
import dataclasses
import re

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from polarnet import fixtures
from polarnet.analysis import Polarity, net_polarity, polar_select, polarity_score
from polarnet.cli import main
from polarnet.core import ChannelTriple, NetMode, SemanticNet
from polarnet.dsl import ParseError, format_net, parse_net
from polarnet.io import from_json, to_json
from polarnet.matrix import adjacency_tensor, from_matrices, membership_matrix

from strategies import nets, scaled_copy, triples

TOL = 1e-9

heavy = settings(max_examples=1000, deadline=None,
                 suppress_health_check=[HealthCheck.too_slow])


def _run(name, body):
    try:
        body()
    except BaseException:
        print(f"[FAIL] {name}")
        raise
    print(f"[PASS] {name}")


def t(a, b, c):
    return ChannelTriple.of(a, b, c)


def test_criterion_1_s1_matrices(fixtures_dir, capsys):
    def body():
        code = main(["matrices", str(fixtures_dir / "s1.pnet")])
        out = capsys.readouterr().out
        assert code == 0
        net = parse_net((fixtures_dir / "s1.pnet").read_text(encoding="utf-8"))
        mm = membership_matrix(net)
        assert mm.labels == ("night", "cold", "hazy", "raining")
        assert mm.rows == (t(3, 0, 0), t(3, 0, 0), t(3, 0, 0), t(0, 0, 1.0))
        tensor = adjacency_tensor(net)
        nonzero = {(k, i, j): tensor.slices[k][i][j].magnitude
                   for k in range(3) for i in range(4) for j in range(4)
                   if not tensor.slices[k][i][j].is_zero}
        assert nonzero == {(0, 0, 1): 2.4, (1, 0, 2): 1.4, (2, 0, 3): 1.0}
        # the printed table places 2.4 at row night, column cold of A_ij1
        slice1 = out.split("\n\n")[1].splitlines()
        header = slice1[0].split()
        night = next(line.split() for line in slice1[1:]
                     if line.split()[0] == "night")
        assert header[0] == "A_ij1" and night[header.index("cold")] == "2.4"

    _run("criterion 1: S1 membership matrix and tensor nonzeros exact", body)


def test_criterion_2_s2_matrices_and_validation(fixtures_dir):
    def body():
        net = parse_net((fixtures_dir / "s2.pnet").read_text(encoding="utf-8"))
        mm = membership_matrix(net)
        assert mm.labels == ("protons", "positive", "neutrons", "neutral",
                             "electrons", "negative", "atom")
        assert mm.rows == (t(3, 0, 0), t(3, 0, 0), t(0, 2, 0), t(0, 2, 0),
                           t(0, 0, 1), t(0, 0, 1), t(0, 2, 0))
        tensor = adjacency_tensor(net)
        index = {label: i for i, label in enumerate(tensor.labels)}
        expected = {
            (index["protons"], index["positive"]),
            (index["neutrons"], index["neutral"]),
            (index["electrons"], index["negative"]),
            (index["atom"], index["protons"]),
            (index["atom"], index["neutrons"]),
            (index["atom"], index["electrons"]),
        }
        nonzero = {(i, j)
                   for i in range(7) for j in range(7)
                   if not tensor.slices[1][i][j].is_zero}
        assert nonzero == expected
        assert all(tensor.slices[1][i][j].magnitude == 2.0
                   for i, j in nonzero)
        for k in (0, 2):
            assert all(tensor.slices[k][i][j].is_zero
                       for i in range(7) for j in range(7))
        assert net.mode is NetMode.PNSN
        assert net.validate() == []

    _run("criterion 2: S2 membership rows, six slice-2 nonzeros, PNSN-clean", body)


def test_criterion_3_s3_matrices_and_mode_validation(fixtures_dir):
    def body():
        net = parse_net((fixtures_dir / "s3.pnet").read_text(encoding="utf-8"))
        mm = membership_matrix(net)
        assert mm.labels == ("Bob", "healthy", "plump", "anaemic")
        assert mm.rows == (t(3, 0, 0), t(3, 0, 0), t(3, 0, 0), t(0, 0, 1.0))
        tensor = adjacency_tensor(net)
        assert tensor.slices[0][0][1].magnitude == 2.7
        assert tensor.slices[1][0][2].magnitude == 1.4
        assert tensor.slices[2][0][3].magnitude == 0.3
        as_pnsn = dataclasses.replace(net, mode=NetMode.PNSN)
        assert as_pnsn.validate() != []
        assert net.mode is NetMode.PFNSN and net.validate() == []

    _run("criterion 3: S3 matrices exact; non-crisp under PNSN, clean under PFNSN",
         body)


def test_criterion_4_polar_selection(fixtures_dir, capsys):
    def body():
        # independent oracle: plain arithmetic over the fixture degrees
        scale = (3.0, 2.0, 1.0)
        branches = {
            "healthy": ((2.7, 0.0, 0.0), (3.0, 0.0, 0.0)),
            "plump": ((0.0, 1.4, 0.0), (3.0, 0.0, 0.0)),
            "anaemic": ((0.0, 0.0, 0.3), (0.0, 0.0, 1.0)),
        }
        oracle = {}
        for label, (weight, membership) in branches.items():
            combined = [(w / m + v / m) / 2.0
                        for w, v, m in zip(weight, membership, scale)]
            oracle[label] = combined[0] - combined[2]
        assert oracle["healthy"] == pytest.approx(0.95, abs=TOL)
        assert oracle["plump"] == pytest.approx(0.5, abs=TOL)
        assert oracle["anaemic"] == pytest.approx(-0.65, abs=TOL)

        code = main(["select", str(fixtures_dir / "s3.pnet"),
                     "--vertex", "Bob", "--prefer", "positive"])
        out = capsys.readouterr().out
        assert code == 0
        rows = [re.match(r"\d+\. (\S+) score=(\S+)", line).groups()
                for line in out.splitlines()]
        assert [r[0] for r in rows] == ["healthy", "plump", "anaemic"]
        assert [float(r[1]) for r in rows] == \
            pytest.approx([0.95, 0.5, -0.65], abs=TOL)

    _run("criterion 4: Bob's neighbors rank healthy, plump, anaemic "
         "at 0.95, 0.5, -0.65", body)


def test_criterion_5_classification_truth_table():
    def body():
        for fixture in (fixtures.s1(), fixtures.s2(), fixtures.s3()):
            flags = fixture.classify()
            assert not flags.has_indeterminate_vertex
            assert not flags.has_indeterminate_edge
            assert not flags.is_point_graph
            assert not flags.is_edge_graph
            assert not flags.is_strongly_neutrosophic

        point = SemanticNet(NetMode.FNSN, "point")
        point.add_vertex("a", (0, 0, 0), indeterminate=True)
        point.add_vertex("b", (0, 0, 0))
        point.add_edge(0, 1, (1, 0, 0))
        flags = point.classify()
        assert flags.is_point_graph and not flags.is_edge_graph
        assert not flags.is_strongly_neutrosophic

        edge = SemanticNet(NetMode.FNSN, "edge")
        edge.add_vertex("a", (0, 0, 0))
        edge.add_vertex("b", (0, 0, 0))
        edge.add_edge(0, 1, (0, 1, 0), indeterminate=True)
        flags = edge.classify()
        assert flags.is_edge_graph and not flags.is_point_graph
        assert not flags.is_strongly_neutrosophic

        both = SemanticNet(NetMode.FNSN, "both")
        both.add_vertex("a", (0, 0, 0), indeterminate=True)
        both.add_vertex("b", (0, 0, 0))
        both.add_edge(0, 1, (0, 1, 0), indeterminate=True)
        assert both.classify().is_strongly_neutrosophic

    _run("criterion 5: classification truth table (fixtures and synthetic nets)",
         body)


@heavy
@given(nets())
def _dsl_roundtrip(net):
    assert parse_net(format_net(net)) == net


@heavy
@given(nets())
def _json_roundtrip(net):
    assert from_json(to_json(net)) == net


@heavy
@given(nets(allow_undirected=False, allow_zero_weight_edges=False))
def _matrices_roundtrip(net):
    rebuilt = from_matrices(net.mode, net.name, net.scale,
                            membership_matrix(net), adjacency_tensor(net))
    assert [v.label for v in rebuilt.vertices] == [v.label for v in net.vertices]
    assert [v.membership for v in rebuilt.vertices] == \
        [v.membership for v in net.vertices]
    assert {(e.src, e.dst): e.weight for e in rebuilt.edges} == \
        {(e.src, e.dst): e.weight for e in net.edges}


@heavy
@given(nets(min_vertices=1), st.integers(-3, 6), st.sampled_from(list(Polarity)))
def _ranking_scale_invariance(net, exponent, preference):
    scaled = scaled_copy(net, 2.0 ** exponent)
    for v in net.vertices:
        assert [r.vertex_id for r in polar_select(net, v.id, preference).ranked] \
            == [r.vertex_id for r in polar_select(scaled, v.id, preference).ranked]


@heavy
@given(triples((3.0, 2.0, 1.0), crisp=False))
def _score_bounds(triple):
    from polarnet.analysis import normalize
    score = polarity_score(normalize(triple, (3.0, 2.0, 1.0)))
    assert -1.0 <= score <= 1.0


@heavy
@given(st.text(max_size=200))
def _parser_totality(source):
    try:
        result = parse_net(source)
    except ParseError:
        return
    assert isinstance(result, SemanticNet)


@pytest.mark.parametrize("name,prop", [
    ("DSL round-trip equality", _dsl_roundtrip),
    ("JSON round-trip equality", _json_roundtrip),
    ("matrices round-trip (structure/weights)", _matrices_roundtrip),
    ("ranking invariance under common positive scaling", _ranking_scale_invariance),
    ("polarity score within [-1, 1]", _score_bounds),
    ("parser totality under fuzzed input", _parser_totality),
])
def test_criterion_6_property_suites(name, prop):
    _run(f"criterion 6: {name} (1000 cases)", prop)


def test_criterion_7_s2_net_polarity():
    def body():
        # independent oracle: 7 vertices and 6 edges normalized and averaged
        scale = (3.0, 2.0, 1.0)
        rows = [(3, 0, 0), (3, 0, 0), (0, 2, 0), (0, 2, 0),
                (0, 0, 1), (0, 0, 1), (0, 2, 0)] + [(0, 2.0, 0)] * 6
        normalized = [[v / m for v, m in zip(row, scale)] for row in rows]
        expected = [sum(col) / len(rows) for col in zip(*normalized)]
        assert expected == pytest.approx([2 / 13, 9 / 13, 2 / 13], abs=TOL)

        summary, label = net_polarity(fixtures.s2())
        assert (summary.p, summary.u, summary.n) == \
            pytest.approx(expected, abs=TOL)
        assert polarity_score(summary) == pytest.approx(0.0, abs=TOL)
        assert label is Polarity.NEUTRAL

    _run("criterion 7: S2 polarity summary scores 0 and labels neutral", body)
