"""
Tests for exact roots of unity and parameter domains.
"""

import pytest
from hypothesis import given, strategies as st

from src.errors import InvalidArgument, ParseError
from src.scalar import (
    MINUS_ONE,
    ONE,
    UnityRoot,
    format_scalar,
    gf_domain,
    gf_orders,
    gf_size,
    is_primitive,
    make,
    order,
    order_domain,
    parse_scalar,
    primitive_roots,
    qnum_is_zero,
)

roots = st.builds(make, st.integers(-200, 200), st.integers(1, 60))


class TestUnityRoot:
    """Canonical form and group law."""

    def test_make_reduces(self):
        assert make(0, 1) == ONE
        assert make(2, 4) == MINUS_ONE
        assert make(7, 3) == make(1, 3)
        assert make(-1, 4) == make(3, 4)

    def test_constructor_rejects_non_canonical(self):
        with pytest.raises(InvalidArgument):
            UnityRoot(2, 4)
        with pytest.raises(InvalidArgument):
            UnityRoot(5, 3)
        with pytest.raises(InvalidArgument):
            make(1, 0)

    def test_products_and_powers(self):
        z = make(1, 3)
        assert z * z ** 2 == ONE
        assert make(1, 12) ** 4 == make(1, 3)
        assert make(5, 7) ** 0 == ONE
        assert -ONE == MINUS_ONE
        assert make(1, 6) / make(1, 6) == ONE

    def test_order_and_primitivity(self):
        assert order(MINUS_ONE) == 2
        assert is_primitive(make(2, 6), 3)
        assert not is_primitive(make(2, 6), 6)

    @given(roots, roots, roots)
    def test_group_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * a.inverse() == ONE
        assert (a ** order(a)).is_one()

    @given(roots, st.integers(-30, 30), st.integers(-30, 30))
    def test_power_is_additive(self, a, m, n):
        assert a ** (m + n) == a ** m * a ** n


class TestQuantumNumbers:
    """(n)_q = 1 + q + ... + q^{n-1} at roots of unity."""

    def test_examples(self):
        z = make(1, 3)
        assert qnum_is_zero(3, z)
        assert qnum_is_zero(2, MINUS_ONE)
        assert not qnum_is_zero(4, z)
        assert not qnum_is_zero(5, ONE)

    def test_rejects_index_below_one(self):
        with pytest.raises(InvalidArgument):
            qnum_is_zero(0, make(1, 3))

    @given(st.integers(1, 60), st.integers(0, 59), st.integers(1, 60))
    def test_agrees_with_complex_sum(self, n, k, den):
        q = make(k, den)
        total = sum(q.to_complex() ** j for j in range(n))
        assert qnum_is_zero(n, q) == (abs(total) < 1e-6)


class TestLiterals:
    """Scalar literal grammar."""

    @pytest.mark.parametrize("text,expected", [
        ("1", ONE),
        ("-1", MINUS_ONE),
        ("2/4", make(1, 2)),
        ("-3/5", make(3, 5) * MINUS_ONE),
        ("z3", make(1, 3)),
        ("z12^5", make(5, 12)),
        ("z3^-1", make(2, 3)),
        ("-z3^2", make(1, 6)),
    ])
    def test_parse(self, text, expected):
        assert parse_scalar(text) == expected

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "z0", "3/", "q", "1/2/3"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_scalar(text)

    def test_parse_error_reports_position(self):
        with pytest.raises(ParseError) as info:
            parse_scalar("x", position=7)
        assert info.value.position == 7

    def test_format(self):
        assert format_scalar(ONE) == "0/1"
        assert format_scalar(make(10, 15)) == "2/3"

    @given(roots)
    def test_format_parses_back(self, a):
        assert parse_scalar(format_scalar(a)) == a


class TestDomains:
    """Primitive roots and G_f."""

    def test_primitive_roots(self):
        assert primitive_roots(1) == [ONE]
        assert primitive_roots(4) == [make(1, 4), make(3, 4)]
        assert len(primitive_roots(12)) == 4

    def test_gf_orders(self):
        assert gf_orders() == [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30]

    def test_gf_size(self):
        assert gf_size() == 80
        assert len(gf_domain()) == 80
        assert len(set(gf_domain())) == 80

    def test_gf_excludes_other_orders(self):
        orders = {order(x) for x in gf_domain()}
        assert 11 not in orders and 16 not in orders and 36 not in orders

    def test_order_domain(self):
        assert order_domain(2) == [ONE, MINUS_ONE]
        assert len(order_domain(4)) == 1 + 1 + 2 + 2
