"""
Tests for Cartan integers, GCM classification and Cartan consistency.
"""

import pytest

from src.cartan import (
    GCM,
    Blocked,
    BlockedReason,
    Family,
    ForcedOrder,
    GCMType,
    NoBraiding,
    affine_cartan,
    affine_type_name,
    braiding_from_labels,
    cartan_braiding,
    cartan_consistency,
    cartan_entry,
    cartan_matrix,
    compact_hyperbolic_census,
    constraint_matrix,
    determinant,
    finite_cartan,
    finite_table,
    format_gcm,
    gcm_class,
    is_cartan_type,
    is_standard,
    parse_gcm,
    twisted_affine_table,
    untwisted_affine_table,
)
from src.diagram import DynkinDiagram
from src.errors import InvalidArgument, OrderTooSmall, ParseError, PreconditionViolation
from src.groupoid import explore
from src.scalar import MINUS_ONE, ONE, make

Q5 = make(1, 5)

ROW_1 = GCM.from_rows([[2, -1, -2], [-1, 2, -1], [-1, -1, 2]])
ROW_18 = GCM.from_rows([[2, -1, -1], [-2, 2, -1], [-2, -3, 2]])
ROW_28 = GCM.from_rows([[2, -3, 0], [-1, 2, -1], [0, -2, 2]])
ROW_31 = GCM.from_rows([[2, -3, 0], [-1, 2, -1], [0, -3, 2]])


def a2(q):
    return DynkinDiagram((q, q), (q.inverse(),))


class TestCartanEntries:
    """Minimal-n search for c_ij."""

    def test_a2(self):
        assert cartan_entry(a2(Q5), 0, 1) == -1
        assert cartan_matrix(a2(Q5)) == finite_cartan("A", 2)

    def test_affine_a1(self):
        d = DynkinDiagram((Q5, Q5), (Q5 ** -2,))
        assert cartan_matrix(d) == GCM.from_rows([[2, -2], [-2, 2]])

    def test_blocked_when_vertex_is_one(self):
        d = DynkinDiagram((ONE, Q5), (Q5,))
        entry = cartan_entry(d, 0, 1)
        assert isinstance(entry, Blocked)
        assert entry.vertex == 0 and entry.reason is BlockedReason.NO_SOLUTION
        assert isinstance(cartan_matrix(d), Blocked)

    def test_vertex_one_with_trivial_edge(self):
        d = DynkinDiagram((ONE, Q5), (ONE,))
        assert cartan_entry(d, 0, 1) == 0

    def test_search_cap(self):
        d = DynkinDiagram((make(1, 97), Q5), (Q5,))
        entry = cartan_entry(d, 0, 1, search_cap=50)
        assert isinstance(entry, Blocked) and entry.reason is BlockedReason.SEARCH_CAP

    def test_minus_one_vertex(self, q1):
        assert cartan_entry(q1, 0, 1) == -1
        assert cartan_entry(q1, 0, 2) == 0

    def test_diagonal_rejected(self, q1):
        with pytest.raises(InvalidArgument):
            cartan_entry(q1, 1, 1)

    def test_cartan_type(self, q1):
        assert is_cartan_type(a2(Q5))
        assert not is_cartan_type(q1)

    def test_standard_needs_complete_datum(self):
        datum = explore(a2(Q5), with_roots=False)
        assert is_standard(datum)
        datum.graph_complete = False
        with pytest.raises(PreconditionViolation):
            is_standard(datum)


class TestGCM:
    """Representation and text format."""

    def test_validation(self):
        with pytest.raises(InvalidArgument):
            GCM.from_rows([[2, 1], [-1, 2]])
        with pytest.raises(InvalidArgument):
            GCM.from_rows([[2, 0], [-1, 2]])
        with pytest.raises(InvalidArgument):
            GCM.from_rows([[1, -1], [-1, 2]])

    def test_parse_and_format(self):
        c = parse_gcm("3; 2 -1 -2; -1 2 -1; -1 -1 2")
        assert c == ROW_1
        assert parse_gcm(format_gcm(c)) == c

    @pytest.mark.parametrize("text", ["x; 2", "2; 2 -1", "2; 2 -1; -1 a", "2; 2 -1; -1 2 0"])
    def test_parse_malformed(self, text):
        with pytest.raises(ParseError):
            parse_gcm(text)

    def test_components(self):
        c = GCM.from_rows([[2, 0, -1], [0, 2, 0], [-1, 0, 2]])
        assert c.components() == [(0, 2), (1,)]
        assert not c.is_indecomposable()

    def test_canonical_is_permutation_invariant(self):
        assert ROW_18.permuted([2, 0, 1]).canonical() == ROW_18.canonical()


class TestClassification:
    """Finite, affine and indefinite types."""

    def test_examples(self):
        assert gcm_class(finite_cartan("A", 2)).kind is GCMType.FINITE
        assert gcm_class(GCM.from_rows([[2, -2], [-2, 2]])).kind is GCMType.AFFINE
        klass = gcm_class(ROW_1)
        assert klass.kind is GCMType.INDEFINITE
        assert klass.compactly_hyperbolic

    def test_finite_table_is_finite(self):
        for name, c in finite_table(5).items():
            assert gcm_class(c).is_finite, name
            assert determinant(c) > 0, name

    def test_affine_tables_are_affine(self):
        for name, c in {**untwisted_affine_table(5), **twisted_affine_table(5)}.items():
            assert gcm_class(c).kind is GCMType.AFFINE, name
            assert determinant(c) == 0, name

    def test_hyperbolic_2x2(self):
        klass = gcm_class(GCM.from_rows([[2, -3], [-3, 2]]))
        assert klass.kind is GCMType.INDEFINITE and klass.compactly_hyperbolic

    def test_decomposable(self):
        c = GCM.from_rows([[2, 0, 0], [0, 2, -2], [0, -2, 2]])
        klass = gcm_class(c)
        assert klass.kind is GCMType.AFFINE
        assert len(klass.components) == 2

    def test_b_short_root_last(self):
        assert finite_cartan("B", 3)[2, 1] == -2
        assert finite_cartan("C", 3)[1, 2] == -2

    def test_unknown_series(self):
        with pytest.raises(InvalidArgument):
            finite_cartan("E", 5)
        with pytest.raises(InvalidArgument):
            affine_cartan("G1", 3)


class TestAffineNames:
    """Names read off the transposed matrix."""

    def test_simply_laced_and_a2l(self):
        assert affine_type_name(affine_cartan("A1", 2)) == "A_2^(1)"
        assert affine_type_name(affine_cartan("A2even", 2).transpose()) == "A_4^(2)"

    def test_transposed_reading(self):
        assert affine_type_name(affine_cartan("C1", 2)) == "D_3^(2)"
        assert affine_type_name(affine_cartan("D2", 2)) == "C_2^(1)"

    def test_not_affine(self):
        assert affine_type_name(ROW_1) is None


class TestConsistency:
    """Which Cartan-type braidings realise a GCM."""

    def test_row_1_has_no_braiding(self):
        assert isinstance(cartan_consistency(ROW_1), NoBraiding)

    def test_row_18_forces_order_4(self):
        solution = cartan_consistency(ROW_18)
        assert isinstance(solution, ForcedOrder)
        assert solution.order == 4
        assert solution.orders == (4,)
        d = braiding_from_labels(ROW_18, solution.witness)
        assert cartan_matrix(d) == ROW_18

    def test_a2_is_a_family(self):
        solution = cartan_consistency(finite_cartan("A", 2))
        assert isinstance(solution, Family)
        assert solution.generators == ((1, 1),)

    def test_row_28_family_weights(self):
        solution = cartan_consistency(ROW_28)
        assert isinstance(solution, Family)
        assert solution.generators == ((2, 6, 3),)

    def test_constraint_matrix(self):
        assert constraint_matrix(finite_cartan("A", 2)) == [[-1, 1]]

    def test_census(self):
        census = compact_hyperbolic_census(3)
        assert len(census) == 31
        outcomes = [cartan_consistency(c) for c in census]
        assert sum(isinstance(s, NoBraiding) for s in outcomes) == 10
        assert sum(isinstance(s, Family) for s in outcomes) == 11
        forced = sorted(s.order for s in outcomes if isinstance(s, ForcedOrder))
        assert forced == [3, 4, 5, 5, 7, 7, 8, 11, 17, 26]

    def test_census_contains_quoted_rows(self):
        keys = {c.entries for c in compact_hyperbolic_census(3)}
        for c in (ROW_1, ROW_18, ROW_28, ROW_31):
            assert c.canonical().entries in keys


class TestCartanBraiding:
    """Braidings q_ii = q^{d_i} of symmetrizable GCMs."""

    def test_a2(self):
        d = cartan_braiding(finite_cartan("A", 2), Q5, (1, 1))
        assert d == a2(Q5)

    def test_row_28(self):
        d = cartan_braiding(ROW_28, Q5, (2, 6, 3))
        assert d.vertices == (Q5 ** 2, Q5 ** 6, Q5 ** 3)
        assert d.edge(0, 1) == Q5 ** -6 and d.edge(1, 2) == Q5 ** -6
        assert d.edge(0, 2) == ONE
        assert cartan_matrix(d) == ROW_28

    def test_minus_one_realises_a2(self):
        d = cartan_braiding(finite_cartan("A", 2), MINUS_ONE, (1, 1))
        assert cartan_matrix(d) == finite_cartan("A", 2)

    def test_order_too_small(self):
        with pytest.raises(OrderTooSmall):
            cartan_braiding(ROW_28, MINUS_ONE, (2, 6, 3))

    def test_bad_weights(self):
        with pytest.raises(InvalidArgument):
            cartan_braiding(ROW_28, Q5, (1, 1, 1))
        with pytest.raises(InvalidArgument):
            cartan_braiding(ROW_28, ONE, (2, 6, 3))

    def test_labels_must_be_consistent(self):
        with pytest.raises(InvalidArgument):
            braiding_from_labels(ROW_18, (Q5, Q5, Q5))
