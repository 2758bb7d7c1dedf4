"""
Tests for the rank-2 table, the membership oracle and gluing atoms.
"""

import pandas as pd
import pytest

from src.errors import ConfigurationError, InvalidArgument, ParseError
from src.ranktwo import (
    Rank2Table,
    RankTwoOracle,
    ScalarExpr,
    enumerate_closure_atoms,
    enumerate_rank2_atoms,
    load_rank2_table,
    parse_expr,
    rows_from_frame,
)
from src.scalar import MINUS_ONE, ONE, gf_domain, make, order_domain

Q5 = make(1, 5)
Z = make(1, 3)


def frame(*records):
    columns = ["id", "kind", "v1", "e", "v2", "constraints", "provenance", "list_row"]
    return pd.DataFrame([dict(zip(columns, r + ("",) * (len(columns) - len(r)))) for r in records])


class TestExpressions:
    """(-1)^ε · ζ^a · q^e expressions."""

    @pytest.mark.parametrize("text,expected", [
        ("q", ScalarExpr(0, 0, 1)),
        ("-1", ScalarExpr(1, 0, 0)),
        ("-q^-2", ScalarExpr(1, 0, -2)),
        ("-z3^2*q", ScalarExpr(1, 2, 1)),
        ("z3", ScalarExpr(0, 1, 0)),
        ("-1*q^3", ScalarExpr(1, 0, 3)),
    ])
    def test_parse(self, text, expected):
        assert parse_expr(text) == expected

    @pytest.mark.parametrize("text", ["", "q^x", "z4", "p", "q*"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_expr(text)

    def test_text_round_trip(self):
        for text in ("-z3^2*q^-2", "q", "-1", "z3", "1"):
            assert str(parse_expr(text)) == text

    def test_evaluate(self):
        assert parse_expr("q^-1").evaluate(Q5) == Q5.inverse()
        assert parse_expr("-q").evaluate(Z) == -Z
        assert parse_expr("z3^2").evaluate() == Z ** 2
        assert parse_expr("z3").evaluate(zeta=Z ** 2) == Z ** 2
        with pytest.raises(InvalidArgument):
            parse_expr("q").evaluate()

    def test_solve(self):
        assert set(parse_expr("q^2").solve(Q5)) == {make(1, 10), make(3, 5)}
        assert parse_expr("-q^-1").solve(MINUS_ONE * Q5) == [Q5.inverse()]
        assert parse_expr("z3").solve(Z) == []


class TestTable:
    """Shipped table and its validation."""

    def test_shipped_rows(self):
        table = load_rank2_table()
        ids = [row.id for row in table.rows]
        assert {"A2", "B2", "G2", "sA1", "Bstar", "f3", "f24b"} <= set(ids)
        assert len(ids) == len(set(ids)) == 26
        assert len(table.parametric_rows) == 12
        assert table.dropped == []
        assert table.sha256

    def test_finite_triples_are_oriented_both_ways(self):
        table = load_rank2_table()
        for v1, e, v2 in table.finite:
            assert (v2, e, v1) in table.finite

    def test_row_lookup(self):
        table = load_rank2_table()
        sa1 = table.row("sA1")
        assert sa1.admits(MINUS_ONE) and not sa1.admits(ONE)
        assert table.row("f3").required_order == 3
        with pytest.raises(KeyError):
            table.row("nope")

    def test_zeta_rows_use_both_cube_roots(self):
        table = load_rank2_table()
        assert table.row("Bstar").zetas() == [Z, Z ** 2]
        assert table.row("A2").zetas() == [Z]

    def test_row_solve(self):
        b2 = load_rank2_table().row("B2")
        assert b2.solve((Q5, Q5 ** -2, Q5 ** 2)) == [(Q5, Z)]
        assert b2.solve((Q5, Q5 ** -2, Q5)) == []

    def test_instances_respect_constraints(self):
        a2 = load_rank2_table().row("A2")
        qs = [q for _, q, _ in a2.instances(order_domain(3))]
        assert ONE not in qs and len(qs) == 3

    def test_in_memory_table(self):
        rows = rows_from_frame(frame(("A2", "parametric", "q", "q^-1", "q", "!1", "quoted")))
        table = Rank2Table.build(rows)
        oracle = RankTwoOracle(table=table, mode="table")
        assert oracle.match(Q5, Q5.inverse(), Q5).matched
        assert oracle.match(Q5, Q5 ** -2, Q5 ** 2).is_no_match

    @pytest.mark.parametrize("record", [
        ("x", "other", "q", "q", "q", "!1", "quoted"),
        ("x", "parametric", "q", "q", "q", "!1", "folklore"),
        ("x", "finite", "q", "q", "q", "!1", "quoted"),
        ("x", "parametric", "q", "q", "q", "=5", "quoted"),
        ("x", "parametric", "q", "q^-1", "q", "!1", "quoted", "2"),
        ("x", "finite", "-1", "-q", "q", "=3", "quoted", "11"),
    ])
    def test_invalid_records(self, record):
        with pytest.raises(ConfigurationError):
            rows_from_frame(frame(record))

    def test_list_rows(self):
        table = load_rank2_table()
        by_row = {}
        for row in table.finite_rows:
            by_row.setdefault(row.list_row, set()).add(row.id)
        assert by_row[9] == {"f12a", "f12c", "f12d"}
        assert by_row[10] == {"f9a", "f9b", "f9c"}
        assert by_row[15] == {"f20"} and by_row[16] == {"f15b"}
        assert all(row.list_row is None for row in table.parametric_rows)
        assert table.split_list_rows() == {}

    def test_list_row_spanning_two_orbits_is_reported(self):
        rows = rows_from_frame(frame(
            ("f3", "finite", "-1", "-q", "q", "=3", "quoted", "9"),
            ("f12d", "finite", "-q^2", "q", "-q^2", "=12", "quoted", "9"),
        ))
        assert Rank2Table.build(rows).split_list_rows() == {9: [["f12d"], ["f3"]]}

    def test_malformed_constraints(self):
        with pytest.raises(ParseError):
            rows_from_frame(frame(("x", "parametric", "q", "q", "q", "1,2", "quoted")))


class TestOracle:
    """Membership answers."""

    def test_super_a1(self, table_oracle):
        result = table_oracle.match(MINUS_ONE, Q5, MINUS_ONE)
        assert result.matched
        assert "sA1" in result.rows
        assert "sA1:q=1/5" in result.parameters
        assert result.source == "table"

    def test_a2_and_symmetry(self, table_oracle):
        q = make(2, 7)
        forward = table_oracle.match(q, q.inverse(), q)
        assert forward.matched and "A2" in forward.rows
        v1, e, v2 = make(1, 4), make(3, 4) ** 2, MINUS_ONE
        assert table_oracle.match(v1, e, v2) == table_oracle.match(v2, e, v1)

    def test_finite_row(self, table_oracle):
        result = table_oracle.match(MINUS_ONE, -Z, Z)
        assert result.matched and "f3" in result.rows

    def test_cube_root_rows(self, table_oracle):
        q = make(1, 4)
        for zeta in (Z, Z ** 2):
            assert table_oracle.match(q, q.inverse(), zeta).matched

    def test_no_match(self, table_oracle):
        assert table_oracle.match(Q5, Q5, Q5).is_no_match

    def test_disconnected(self, table_oracle):
        result = table_oracle.match(ONE, ONE, Q5)
        assert result.matched and result.source == "disconnected"

    def test_closure_mode(self):
        oracle = RankTwoOracle(mode="closure")
        assert oracle.match(Q5, Q5.inverse(), Q5).source == "closure"
        assert oracle.match(Q5, Q5 ** -2, Q5).is_no_match

    def test_hybrid_agrees_on_table_hits(self, hybrid_oracle):
        result = hybrid_oracle.match(MINUS_ONE, Q5, MINUS_ONE)
        assert result.matched and result.source == "table"

    def test_unknown_mode(self):
        with pytest.raises(ConfigurationError):
            RankTwoOracle(mode="guess")


class TestAtoms:
    """Gluing atoms."""

    def test_deterministic(self):
        domain = order_domain(6)
        assert enumerate_rank2_atoms(domain) == enumerate_rank2_atoms(domain)

    def test_atoms_are_connected_and_canonical(self):
        for atom in enumerate_rank2_atoms(order_domain(6)):
            v1, e, v2 = atom.triple
            assert not e.is_one()
            assert (v1, e, v2) <= (v2, e, v1)
            assert atom.reversed().triple == (v2, e, v1)

    def test_super_a1_never_at_one(self):
        atoms = enumerate_rank2_atoms(gf_domain())
        assert (MINUS_ONE, ONE, MINUS_ONE) not in {a.triple for a in atoms}
        assert any(a.source == "sA1" for a in atoms)

    def test_atoms_are_members(self, table_oracle):
        for atom in enumerate_rank2_atoms(order_domain(5)):
            assert table_oracle.match(*atom.triple).matched

    def test_closure_atoms_contain_a2(self):
        atoms = enumerate_closure_atoms(order_domain(3))
        assert (Z, Z ** 2, Z) in {a.triple for a in atoms}
        assert all(a.source == "closure" for a in atoms)

    @pytest.mark.slow
    def test_table_atoms_have_finite_closure(self):
        domain = order_domain(6)
        closure = {a.triple for a in enumerate_closure_atoms(domain)}
        allowed = set(domain)
        for atom in enumerate_rank2_atoms(domain):
            if set(atom.triple) <= allowed:
                assert atom.triple in closure, atom
