"""
Tests for reflections, basic data, real roots and the infiniteness rules.
"""

import json

import pytest
from hypothesis import assume, given, strategies as st

from src.cartan import GCM, Blocked, finite_cartan, cartan_braiding, cartan_row
from src.config import DEFAULT_BOUNDS
from src.diagram import DynkinDiagram, format_diagram, galois, permute
from src.errors import PreconditionViolation
from src.groupoid import (
    BasicDatum,
    BlockedAt,
    BoundExceeded,
    Outcome,
    explore,
    finiteness,
    has_infinite_order,
    reflect,
    s_map,
    s_matrix,
    six_point_diagrams,
    six_point_rule,
    six_point_table,
    standard_verdict,
    to_dot,
    to_json,
    transport_roots,
    Verdict,
    weyl_real_roots,
)
from src.harness import expected_lines
from src.scalar import MINUS_ONE, ONE, make

Q5 = make(1, 5)
Z = make(1, 3)

labels = st.builds(make, st.integers(0, 23), st.sampled_from([2, 3, 4, 5, 6, 8, 12]))


def a2(q):
    return DynkinDiagram((q, q), (q.inverse(),))


def affine_a1(q):
    return DynkinDiagram((q, q), (q ** -2,))


class TestReflection:
    """ρ_i on diagrams and s_i on degrees."""

    def test_cartan_type_is_fixed(self):
        d = a2(Q5)
        assert reflect(d, 0) == d
        assert reflect(d, 1) == d

    def test_six_point_chain(self, q1):
        d0, d1 = six_point_diagrams()[:2]
        assert reflect(q1, 0) == d1
        assert reflect(d1, 0) == d0

    def test_blocked(self):
        d = DynkinDiagram((ONE, Q5), (Q5,))
        assert isinstance(reflect(d, 0), Blocked)

    @given(st.lists(labels, min_size=6, max_size=6), st.integers(0, 2))
    def test_involution(self, values, i):
        d = DynkinDiagram(tuple(values[:3]), tuple(values[3:]))
        image = reflect(d, i)
        assume(isinstance(image, DynkinDiagram))
        assert reflect(image, i) == d

    @given(st.lists(labels, min_size=6, max_size=6), st.integers(0, 2))
    def test_cartan_row_preserved(self, values, i):
        d = DynkinDiagram(tuple(values[:3]), tuple(values[3:]))
        image = reflect(d, i)
        assume(isinstance(image, DynkinDiagram))
        assert cartan_row(image, i) == cartan_row(d, i)

    def test_s_map(self):
        row = (2, -1, 0)
        assert s_map(row, 0, (1, 0, 0)) == (-1, 0, 0)
        assert s_map(row, 0, (0, 1, 0)) == (1, 1, 0)
        assert s_map(row, 0, (0, 0, 1)) == (0, 0, 1)

    def test_s_matrix_is_involution(self):
        m = s_matrix((2, -3, 0), 0)
        assert (m * m).is_Identity


class TestExplore:
    """Basic datum exploration."""

    def test_six_point_groupoid(self, q1):
        datum = explore(q1, with_roots=False)
        assert len(datum.nodes) == 6
        assert datum.is_complete and datum.graph_complete
        assert all(six_point_rule(node) for node in datum.nodes)
        assert datum.path_to(1) == (0,)

    def test_six_point_roots_are_unbounded(self, q1):
        datum = explore(q1)
        assert len(datum.nodes) == 6 and datum.graph_complete
        assert datum.status == BoundExceeded("max_root_height")

    def test_edges_are_involutive(self, q1):
        datum = explore(q1, with_roots=False)
        for (x, i), y in datum.edges.items():
            assert datum.edges[(y, i)] == x

    def test_a2_roots(self):
        datum = explore(a2(Q5))
        assert len(datum.nodes) == 1
        assert datum.roots[0] == {(1, 0), (0, 1), (1, 1)}

    def test_rank_one(self):
        datum = explore(DynkinDiagram((Q5,), ()))
        assert len(datum.nodes) == 1
        assert datum.roots[0] == {(1,)}

    def test_blocked(self):
        datum = explore(DynkinDiagram((ONE, Q5), (Q5,)))
        assert datum.status == BlockedAt(0, 0, "no_solution")

    def test_node_bound(self, q1):
        datum = explore(q1, DEFAULT_BOUNDS.replace(max_nodes=3), with_roots=False)
        assert datum.status == BoundExceeded("max_nodes")
        assert not datum.graph_complete

    def test_negative_transport_is_an_error(self):
        # an A2 node whose 1-edge leads to a disconnected node: s_1(α1+α2) = -α1+α2 there
        datum = BasicDatum()
        datum.add(a2(Q5), 0, None)
        datum.add(DynkinDiagram((Q5, Q5), (ONE,)), 1, (0, 0))
        datum.edges.update({(0, 0): 1, (1, 0): 0})
        with pytest.raises(PreconditionViolation, match="node 1"):
            transport_roots(datum)

    def test_exports(self):
        datum = explore(a2(Q5))
        dot = to_dot(datum)
        assert dot.startswith("graph basic_datum {")
        assert 'n0 -- n0 [label="2"];' in dot
        payload = json.loads(to_json(datum))
        assert payload["status"] == "complete"
        assert payload["nodes"] == [format_diagram(a2(Q5))]
        assert len(payload["roots"][0]) == 3


class TestFiniteness:
    """Real-root finiteness and its certificates."""

    @pytest.mark.parametrize("letter,rank,weights,count", [
        ("A", 2, (1, 1), 3),
        ("A", 3, (1, 1, 1), 6),
        ("B", 3, (2, 2, 1), 9),
    ])
    def test_finite_types(self, letter, rank, weights, count):
        d = cartan_braiding(finite_cartan(letter, rank), Q5, weights)
        verdict = finiteness(d)
        assert verdict.outcome is Outcome.FINITE_ROOTS
        assert len(verdict.roots[format_diagram(d)]) == count

    def test_affine_root_growth(self):
        verdict = finiteness(affine_a1(Q5))
        assert verdict.outcome is Outcome.INFINITE_GK
        assert verdict.certificate.kind == "RootGrowth"
        sizes = verdict.certificate.sizes
        assert sizes[-1] > sizes[0]

    def test_blocked_is_infinite(self):
        verdict = finiteness(DynkinDiagram((ONE, Q5), (Q5,)))
        assert verdict.is_infinite
        assert verdict.certificate.kind == "BlockedReflection"
        assert verdict.to_dict()["certificate"]["vertex"] == 0

    def test_six_point_roots_grow(self, q1):
        verdict = finiteness(q1)
        assert verdict.outcome is Outcome.INFINITE_GK
        assert verdict.certificate.kind == "RootGrowth"

    @pytest.mark.parametrize("zeta", [Z, Z ** 2])
    def test_six_point_twins_do_not_close(self, zeta):
        for d in six_point_diagrams(zeta):
            assert not explore(d).is_complete

    def test_infinite_order(self):
        s0, s1 = s_matrix((2, -2), 0), s_matrix((-2, 2), 1)
        assert has_infinite_order(s0 * s1)
        t0, t1 = s_matrix((2, -1), 0), s_matrix((-1, 2), 1)
        assert not has_infinite_order(t0 * t1)


class TestStandard:
    """Standard-type rules."""

    def test_weyl_real_roots_affine(self):
        c = GCM.from_rows([[2, -2], [-2, 2]])
        roots = set(weyl_real_roots(c, max_height=5, max_roots=100))
        assert roots == {(1, 0), (0, 1), (1, 2), (2, 1), (2, 3), (3, 2)}

    def test_weyl_real_roots_finite(self):
        assert len(list(weyl_real_roots(finite_cartan("B", 3), 100, 100))) == 9

    def test_affine_a1(self):
        certificate = standard_verdict(affine_a1(Q5))
        assert certificate.kind == "StandardAffine"
        assert certificate.name == "A_1^(1)"

    def test_finite_gives_nothing(self):
        assert standard_verdict(a2(Q5)) is None

    def test_line_with_twisted_affine_matrix(self):
        line = next(e.diagram for e in expected_lines() if e.diagram.vertex(0) == Z and e.diagram.vertex(1) == -(Z ** 2))
        certificate = standard_verdict(line)
        assert certificate is not None
        assert certificate.name == "A_4^(2)"

    def test_incomplete_datum_is_unknown(self, q1):
        datum = explore(q1, DEFAULT_BOUNDS.replace(max_nodes=2), with_roots=False)
        result = standard_verdict(q1, datum=datum)
        assert isinstance(result, Verdict)
        assert result.outcome is Outcome.UNKNOWN
        assert "max_nodes" in result.note

    def test_complete_nonstandard_gives_nothing(self, q1):
        assert standard_verdict(q1, datum=explore(q1, with_roots=False)) is None


class TestSixPoint:
    """Table of the six-point groupoid."""

    def test_table_size(self):
        assert len(six_point_diagrams()) == 6
        assert len(six_point_table()) <= 72

    def test_members(self, q3):
        assert six_point_rule(q3)

    @pytest.mark.parametrize("zeta", [Z, Z ** 2])
    def test_both_families(self, zeta):
        for d in six_point_diagrams(zeta):
            assert six_point_rule(d)
            assert six_point_rule(permute(d, [2, 0, 1]))

    def test_twin_is_the_galois_image(self, q1):
        assert six_point_diagrams(Z ** 2)[0] == galois(q1, 5)
        assert not six_point_rule(galois(q1, 2))

    def test_expected_lines_are_recognised_in_both_galois_forms(self):
        lines = [e.diagram for e in expected_lines() if e.label == "SixPointGroupoid"]
        assert len(lines) == 2
        for d in lines:
            assert six_point_rule(d)
            assert six_point_rule(galois(d, 5))

    def test_non_members(self):
        d = DynkinDiagram((Q5, Q5, MINUS_ONE), (Q5.inverse(), ONE, ONE))
        assert not six_point_rule(d)
        assert not six_point_rule(a2(Q5))
