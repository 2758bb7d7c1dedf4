"""
Tests for diagrams: braiding matrices, text format, degrees and symmetries.
"""

import pytest
from hypothesis import given, strategies as st

from src.diagram import (
    BraidingMatrix,
    DynkinDiagram,
    all_permutations,
    canonical_key,
    degree_q,
    format_diagram,
    galois,
    galois_conjugates,
    is_connected,
    line_key,
    parse_diagram,
    permute,
    reverse,
    same_up_to,
    simple_root,
    standard_rep,
    subdiagram,
    to_diagram,
)
from src.errors import InvalidArgument, ParseError
from src.scalar import MINUS_ONE, ONE, make

Z = make(1, 3)

labels = st.builds(make, st.integers(0, 23), st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12, 24]))


@st.composite
def diagrams(draw, rank=None):
    rank = rank or draw(st.integers(1, 4))
    vertices = tuple(draw(labels) for _ in range(rank))
    edges = tuple(draw(labels) for _ in range(rank * (rank - 1) // 2))
    return DynkinDiagram(vertices, edges)


class TestBraidingMatrix:
    """Twist classes of braiding matrices."""

    def test_identity_braiding(self):
        m = BraidingMatrix.from_rows([[ONE, ONE], [ONE, ONE]])
        d = to_diagram(m)
        assert d.vertices == (ONE, ONE)
        assert d.edge(0, 1) == ONE

    def test_fixed_matrix_gives_six_point_triangle(self, q3):
        z, z2, m = Z, Z ** 2, MINUS_ONE
        rows = [[m, -z2, z], [ONE, z2, m], [ONE, ONE, m]]
        assert to_diagram(BraidingMatrix.from_rows(rows)) == q3

    def test_transpose_keeps_diagram(self):
        q = make(1, 5)
        m = BraidingMatrix.from_rows([[q, make(2, 7)], [make(3, 4), q]])
        assert to_diagram(m) == to_diagram(m.transpose())

    def test_standard_rep(self):
        q = make(1, 5)
        d = DynkinDiagram((q, q), (q.inverse(),))
        m = standard_rep(d)
        assert m.entries == ((q, q.inverse()), (ONE, q))
        assert standard_rep(DynkinDiagram((q,), ())).entries == ((q,),)

    @given(diagrams())
    def test_standard_rep_round_trip(self, d):
        assert to_diagram(standard_rep(d)) == d

    def test_non_square_rejected(self):
        with pytest.raises(InvalidArgument):
            BraidingMatrix.from_rows([[ONE, ONE], [ONE]])

    def test_wrong_edge_count_rejected(self):
        with pytest.raises(InvalidArgument):
            DynkinDiagram((ONE, ONE), ())


class TestDiagramStructure:
    """Subdiagrams, connectivity and edge lookup."""

    def test_subdiagram_of_chain(self, q1):
        sub = subdiagram(q1, [0, 1])
        assert sub.vertices == (MINUS_ONE, Z)
        assert sub.edge(0, 1) == -Z

    def test_subdiagram_extremes(self, q3):
        assert subdiagram(q3, range(3)) == q3
        single = subdiagram(q3, [1])
        assert single.rank == 1 and single.edges == ()
        with pytest.raises(InvalidArgument):
            subdiagram(q3, [])

    def test_connectivity(self, q1):
        q = make(1, 5)
        assert not is_connected(DynkinDiagram((q, q), (ONE,)))
        assert is_connected(q1)
        assert is_connected(DynkinDiagram((q,), ()))

    def test_edge_symmetric(self, q3):
        assert q3.edge(0, 2) == q3.edge(2, 0) == Z
        with pytest.raises(InvalidArgument):
            q3.edge(1, 1)

    def test_neighbours(self, q1):
        assert q1.neighbours(0) == [1]
        assert q1.neighbours(1) == [0, 2]


class TestDegrees:
    """Bilinear extension of the braiding."""

    def test_six_point_degree_pair(self, q3):
        assert degree_q(q3, (1, 2, 1), (1, 1, 2)) == (Z, Z ** 2, ONE)

    def test_simple_roots_recover_entries(self, q3):
        for i in range(3):
            for j in range(3):
                if i != j:
                    a, b = simple_root(3, i), simple_root(3, j)
                    assert degree_q(q3, a, b) == (q3.vertex(i), q3.edge(i, j), q3.vertex(j))

    def test_sum_of_two_simple_roots(self, q3):
        qaa, _, _ = degree_q(q3, (1, 1, 0), (1, 1, 0))
        assert qaa == q3.vertex(0) * q3.vertex(1) * q3.edge(0, 1)

    @given(diagrams(rank=3), st.lists(st.integers(0, 4), min_size=9, max_size=9))
    def test_cross_pairing_is_bilinear(self, d, coords):
        a, a2, b = tuple(coords[:3]), tuple(coords[3:6]), tuple(coords[6:])
        total = tuple(x + y for x, y in zip(a, a2))
        assert degree_q(d, total, b)[1] == degree_q(d, a, b)[1] * degree_q(d, a2, b)[1]

    def test_length_mismatch(self, q3):
        with pytest.raises(InvalidArgument):
            degree_q(q3, (1, 0), (0, 1, 0))


class TestText:
    """One-line diagram grammar."""

    def test_parse_six_point_triangle(self, q3):
        assert q3.vertices == (MINUS_ONE, Z ** 2, MINUS_ONE)
        assert q3.edges == (-(Z ** 2), Z, MINUS_ONE)

    def test_rank_one(self):
        d = parse_diagram("1; 1/2;")
        assert d.vertices == (MINUS_ONE,)
        assert format_diagram(d) == "1; 1/2;"

    def test_omitted_edge_is_one(self):
        d = parse_diagram("3; 1/2 1/2 1/2; 12:1/3")
        assert d.edge(0, 2) == ONE and d.edge(1, 2) == ONE
        assert format_diagram(d) == "3; 1/2 1/2 1/2; 12:1/3"

    def test_alternative_edge_keys(self):
        assert parse_diagram("2; z3 z3; 1,2:z3^2") == parse_diagram("2; 1/3 1/3; 21:2/3")

    @pytest.mark.parametrize("text", [
        "2; 1/3; 12:2/3",
        "2; 1/3 1/3; 11:1/2",
        "2; 1/3 1/3; 13:1/2",
        "2; 1/3 1/3; 12:1/2 21:1/2",
        "2; 1/3 1/3; 12",
        "x; 1/3",
        "2; 1/3 1/x",
        "no separators",
    ])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_diagram(text)

    @given(diagrams())
    def test_format_parses_back(self, d):
        assert parse_diagram(format_diagram(d)) == d


class TestSymmetry:
    """Permutations and Galois conjugation."""

    def test_permute(self, q3):
        p = permute(q3, [2, 0, 1])
        assert p.vertices == (q3.vertex(2), q3.vertex(0), q3.vertex(1))
        assert p.edge(0, 1) == q3.edge(2, 0)
        with pytest.raises(InvalidArgument):
            permute(q3, [0, 0, 1])

    def test_reverse_involution(self, q1):
        assert reverse(reverse(q1)) == q1
        assert line_key(q1) == line_key(reverse(q1))

    def test_galois(self, q1):
        twin = galois(q1, 5)
        assert twin.vertex(0) == q1.vertex(0)
        assert twin.vertex(1) == Z ** 2
        assert galois(q1, 2).vertex(0) != q1.vertex(0)
        assert len(galois_conjugates(q1)) == 2
        assert len(all_permutations(q1)) == 6

    @given(diagrams(rank=3), st.permutations([0, 1, 2]))
    def test_canonical_key_invariant(self, d, perm):
        assert canonical_key(permute(d, perm)) == canonical_key(d)

    def test_same_up_to(self, q1, q3):
        missing, unexpected = same_up_to([reverse(q1)], [q1, q3])
        assert missing == [canonical_key(q3)]
        assert unexpected == []
