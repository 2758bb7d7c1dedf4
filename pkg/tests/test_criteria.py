"""
Tests for criteria candidates, their application and the classify pipeline.
"""

import pytest
from hypothesis import given, settings, strategies as st

from src.cartan import cartan_braiding, finite_cartan
from src.criteria import (
    CriterionCandidate,
    all_candidates,
    apply_criteria,
    blocked_shortcut,
    classify,
    criteria_witness,
    criterion1,
    criterion2,
    criterion3,
    node_subdiagram_candidates,
)
from src.diagram import DynkinDiagram, dot
from src.errors import InvalidArgument
from src.groupoid import BasicDatum, BoundExceeded, Outcome
from src.scalar import ONE, make

Q5 = make(1, 5)

labels = st.builds(make, st.integers(0, 11), st.sampled_from([2, 3, 4, 5, 6, 12]))


def a3(q):
    return cartan_braiding(finite_cartan("A", 3), q, (1, 1, 1))


class TestCandidates:
    """(ω, α, β) generation."""

    @given(st.lists(labels, min_size=6, max_size=6))
    @settings(max_examples=60)
    def test_degrees_are_orthogonal_to_omega(self, values):
        d = DynkinDiagram(tuple(values[:3]), tuple(values[3:]))
        for candidate in all_candidates(d):
            assert dot(candidate.alpha, candidate.omega) == 0
            assert dot(candidate.beta, candidate.omega) == 0
            assert min(candidate.alpha + candidate.beta) >= 0

    def test_constructor_rejects_non_orthogonal(self):
        with pytest.raises(InvalidArgument):
            CriterionCandidate("1", (1, 0, 0), (1, 0, 0), (0, 1, 0))

    def test_criterion1_on_a3(self):
        found = criterion1(a3(Q5))
        assert len(found) == 4
        assert all(c.applicability[0].startswith("1<=l=1") for c in found)

    def test_criterion2_needs_large_entries(self):
        assert criterion2(a3(Q5)) == []

    def test_criterion2_with_two_trivial_edges(self):
        d = DynkinDiagram((Q5, Q5 ** 2, Q5), (Q5 ** -2, ONE, ONE))
        assert criterion2(d) == []

    def test_criterion2_with_one_trivial_edge(self):
        d = cartan_braiding(finite_cartan("B", 3), Q5, (2, 2, 1))
        found = criterion2(d)
        assert found
        assert all(c.applicability[0] == "only q~_13 = 1" for c in found)
        assert all(c.alpha == (1, 1, 1) for c in found)

    def test_criterion3_needs_two_edges_at_k(self):
        found = criterion3(a3(Q5))
        assert [c.omega for c in found] == [(1, -1, 1)]
        assert found[0].alpha == (1, 1, 0) and found[0].beta == (0, 1, 1)

    def test_generation_order(self):
        d = cartan_braiding(finite_cartan("B", 3), Q5, (2, 2, 1))
        kinds = [c.criterion for c in all_candidates(d)]
        assert kinds == sorted(kinds, key=["1", "2", "3", "3ext"].index)

    def test_rank_check(self):
        with pytest.raises(InvalidArgument):
            criterion1(DynkinDiagram((Q5, Q5), (Q5,)))

    def test_blocked_vertex_is_reported(self):
        d = DynkinDiagram((ONE, Q5, Q5), (Q5, ONE, Q5.inverse()))
        shortcut = blocked_shortcut(d, (2,))
        assert shortcut.kind == "BlockedReflection"
        assert shortcut.vertex == 0
        assert shortcut.path == (2,)
        assert shortcut.reason == "no_solution"
        assert not any("m_12" in c.applicability[0] for c in criterion1(d))
        assert blocked_shortcut(a3(Q5)) is None

    def test_node_subdiagram_candidates(self):
        found = list(node_subdiagram_candidates(3))
        assert [(c.alpha, c.beta) for c in found] == [
            ((1, 0, 0), (0, 1, 0)),
            ((1, 0, 0), (0, 0, 1)),
            ((0, 1, 0), (0, 0, 1)),
        ]


class TestApplyCriteria:
    """Rules over a basic datum."""

    def test_six_point_triangle(self, q3, hybrid_oracle):
        verdict = apply_criteria(q3, oracle=hybrid_oracle)
        assert verdict.is_infinite
        assert verdict.certificate.kind == "SixPointGroupoid"

    def test_rank_two_subdiagram(self, table_oracle):
        d = DynkinDiagram((Q5, Q5, Q5), (Q5, ONE, ONE))
        verdict = apply_criteria(d, oracle=table_oracle)
        assert verdict.certificate.kind == "RankTwoSubdiagram"
        assert verdict.certificate.pair == (0, 1)

    def test_finite_type_is_not_killed(self, hybrid_oracle):
        verdict = apply_criteria(a3(Q5), oracle=hybrid_oracle)
        assert verdict.outcome is Outcome.UNKNOWN
        assert verdict.label == "Unknown"

    def test_blocked(self, table_oracle):
        d = DynkinDiagram((ONE, Q5, Q5), (Q5, ONE, Q5.inverse()))
        verdict = apply_criteria(d, structural=False, oracle=table_oracle)
        assert verdict.certificate.kind == "BlockedReflection"

    def test_blocked_frontier_node_ends_the_search(self, hybrid_oracle):
        datum = BasicDatum()
        datum.add(a3(Q5), 0, None)
        datum.add(DynkinDiagram((ONE, Q5, Q5), (Q5, ONE, Q5.inverse())), 1, (0, 0))
        datum.edges.update({(0, 0): 1, (1, 0): 0})
        datum.status = BoundExceeded("max_nodes")
        witness = criteria_witness(datum, hybrid_oracle)
        assert witness.kind == "BlockedReflection"
        assert witness.path == (0,)
        assert witness.vertex == 0
        verdict = apply_criteria(a3(Q5), structural=False, oracle=hybrid_oracle, datum=datum)
        assert verdict.certificate == witness

    def test_rank_check(self):
        with pytest.raises(InvalidArgument):
            apply_criteria(DynkinDiagram((Q5, Q5), (Q5,)))


class TestClassify:
    """Pipeline order and outcomes."""

    @pytest.mark.parametrize("letter,rank,weights", [
        ("A", 3, (1, 1, 1)),
        ("B", 3, (2, 2, 1)),
        ("A", 4, (1, 1, 1, 1)),
    ])
    def test_finite_types(self, letter, rank, weights, hybrid_oracle):
        d = cartan_braiding(finite_cartan(letter, rank), Q5, weights)
        assert classify(d, oracle=hybrid_oracle).outcome is Outcome.FINITE_ROOTS

    def test_rank_one(self):
        assert classify(DynkinDiagram((Q5,), ())).outcome is Outcome.FINITE_ROOTS

    def test_blocked(self, hybrid_oracle):
        verdict = classify(DynkinDiagram((ONE, Q5), (Q5,)), oracle=hybrid_oracle)
        assert verdict.certificate.kind == "BlockedReflection"

    def test_affine_rank_two(self, hybrid_oracle):
        verdict = classify(DynkinDiagram((Q5, Q5), (Q5 ** -2,)), oracle=hybrid_oracle)
        assert verdict.is_infinite

    def test_six_point(self, q1, hybrid_oracle):
        assert classify(q1, oracle=hybrid_oracle).certificate.kind == "SixPointGroupoid"

    def test_rank_limits(self):
        six = DynkinDiagram(tuple([Q5] * 6), tuple([ONE] * 15))
        with pytest.raises(InvalidArgument):
            classify(six)
