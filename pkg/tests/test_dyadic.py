import pytest
from hypothesis import given, strategies as st

from halfgrids.dyadic import (
    DEPTH_CAP,
    Dyadic,
    HALF,
    ONE,
    SdInterval,
    SdPartition,
    Side,
    UNIT,
    ZERO,
    conjugate,
    e_points,
    midpoint,
    midpoint_inverse,
    parent,
    parse_dyadic,
    parse_partition,
    point_sign,
    side,
    sign,
    spanning_intervals,
    spanning_intervals_by_pairs,
)
from halfgrids.errors import DepthExceeded, NoConjugate, NotInE, ParseError

dyadics = st.builds(
    Dyadic,
    st.integers(min_value=0, max_value=1 << 20),
    st.integers(min_value=0, max_value=20),
)


class TestDyadic:
    def test_normalization(self):
        assert Dyadic(4, 2) == Dyadic(1, 0)
        assert Dyadic(6, 3) == Dyadic(3, 2)
        assert Dyadic(0, 7) == ZERO

    def test_ordering(self):
        assert Dyadic(1, 2) < HALF < Dyadic(3, 2) < ONE
        assert not ONE < ONE
        assert ZERO <= ZERO

    def test_arithmetic(self):
        assert Dyadic(1, 2) + Dyadic(1, 2) == HALF
        assert ONE - Dyadic(3, 2) == Dyadic(1, 2)
        assert Dyadic(3, 3).mul_pow2(3) == Dyadic(3)
        assert Dyadic(3, 1).mul_pow2(-2) == Dyadic(3, 3)

    def test_depth_cap(self):
        Dyadic(1, DEPTH_CAP)
        with pytest.raises(DepthExceeded):
            Dyadic(1, DEPTH_CAP + 1)

    @given(dyadics, dyadics)
    def test_add_sub_roundtrip(self, a, b):
        assert (a + b) - b == a

    @given(dyadics, dyadics)
    def test_comparison_trichotomy(self, a, b):
        assert (a < b) + (a == b) + (b < a) == 1

    def test_parse(self):
        assert parse_dyadic("3/8") == Dyadic(3, 3)
        assert parse_dyadic("1") == ONE
        assert parse_dyadic(" 0 ") == ZERO
        with pytest.raises(ParseError):
            parse_dyadic("1/3")
        with pytest.raises(ParseError):
            parse_dyadic("x/4")
        with pytest.raises(ParseError, match="position 2"):
            parse_dyadic("1/3", pos="position 2")

    def test_str(self):
        assert str(Dyadic(3, 3)) == "3/8"
        assert str(ONE) == "1"


class TestSdInterval:
    def test_from_endpoints(self):
        assert SdInterval.from_endpoints(ZERO, HALF) == SdInterval(0, 1)
        assert SdInterval.from_endpoints(Dyadic(3, 2), ONE) == SdInterval(3, 2)
        with pytest.raises(ValueError):
            SdInterval.from_endpoints(Dyadic(1, 2), Dyadic(3, 2))  # length 1/2, lo off-grid
        with pytest.raises(ValueError):
            SdInterval.from_endpoints(ZERO, Dyadic(3, 2))  # length 3/4

    def test_validation(self):
        with pytest.raises(ValueError):
            SdInterval(2, 1)
        with pytest.raises(ValueError):
            SdInterval(-1, 1)

    def test_midpoint_inverse_roundtrip(self):
        for m in range(0, 6):
            for k in range(1 << m):
                iv = SdInterval(k, m)
                assert midpoint_inverse(midpoint(iv)) == iv

    def test_midpoint_inverse_rejects_endpoints(self):
        with pytest.raises(NotInE):
            midpoint_inverse(ZERO)
        with pytest.raises(NotInE):
            midpoint_inverse(ONE)

    def test_side_and_conjugate(self):
        assert side(UNIT) == Side.RIGHT
        assert side(SdInterval(0, 1)) == Side.LEFT
        assert side(SdInterval(1, 1)) == Side.RIGHT
        assert conjugate(SdInterval(0, 1)) == SdInterval(1, 1)
        assert conjugate(SdInterval(1, 1)) == SdInterval(0, 1)
        with pytest.raises(NoConjugate):
            conjugate(UNIT)

    def test_parent(self):
        assert parent(SdInterval(2, 2)) == SdInterval(1, 1)
        assert parent(SdInterval(3, 2)) == SdInterval(1, 1)

    def test_conjugate_involution(self):
        for m in range(1, 6):
            for k in range(1 << m):
                iv = SdInterval(k, m)
                assert conjugate(conjugate(iv)) == iv
                assert side(conjugate(iv)) != side(iv)

    def test_sign_recursion(self):
        # root +, left child inherits, right child flips
        assert sign(UNIT) == "+"
        for m in range(0, 6):
            for k in range(1 << m):
                iv = SdInterval(k, m)
                assert sign(SdInterval(2 * k, m + 1)) == sign(iv)
                assert sign(SdInterval(2 * k + 1, m + 1)) == ("-" if sign(iv) == "+" else "+")

    def test_sign_examples(self):
        assert sign(SdInterval(0, 1)) == "+"  # [0,1/2]
        assert sign(SdInterval(1, 1)) == "-"  # [1/2,1]
        assert sign(SdInterval(3, 2)) == "+"  # [3/4,1]: two flips


class TestSdPartition:
    def test_trivial(self):
        p = SdPartition((ZERO, ONE))
        assert p.n == 1
        assert p.subintervals() == (UNIT,)

    def test_rejects_non_sd(self):
        with pytest.raises(ValueError):
            SdPartition((ZERO, Dyadic(3, 2), ONE))

    def test_parse(self):
        p = parse_partition("0,1/2,3/4,1")
        assert p.n == 3
        with pytest.raises(ParseError):
            parse_partition("0,1/3,1")
        with pytest.raises(ParseError):
            parse_partition("0,1/2,1/4,1")
        with pytest.raises(ParseError):
            parse_partition("1/2,1")

    def test_spanning_basic(self):
        p = parse_partition("0,1/2,1")
        spans = spanning_intervals(p)
        assert spans == (SdInterval(0, 1), UNIT, SdInterval(1, 1))

    def test_spanning_routes_agree(self):
        from halfgrids.thompson import enumerate_trees, partition_from_tree

        for n in range(1, 7):
            for t in enumerate_trees(n):
                p = partition_from_tree(t)
                assert spanning_intervals(p) == spanning_intervals_by_pairs(p)

    def test_spanning_cardinalities(self):
        from halfgrids.thompson import enumerate_trees, partition_from_tree

        for n in range(1, 7):
            for t in enumerate_trees(n):
                spans = spanning_intervals(partition_from_tree(t))
                assert len(spans) == 2 * n - 1
                assert sum(1 for iv in spans if sign(iv) == "+") == n
                assert sum(1 for iv in spans if sign(iv) == "-") == n - 1

    def test_e_points_order_and_signs(self):
        p = parse_partition("0,1/2,1")
        pts = e_points(p)
        assert [str(sp.point) for sp in pts] == ["1/4", "1/2", "3/4"]
        assert [sp.sign for sp in pts] == ["+", "+", "-"]

    def test_point_sign_recursion_at_breakpoints(self):
        # a breakpoint splits the interval it is the midpoint of; its sign
        # matches the left half's midpoint and is opposite the right half's
        from halfgrids.thompson import enumerate_trees, partition_from_tree

        for t in enumerate_trees(4):
            p = partition_from_tree(t)
            for b in p.breakpoints[1:-1]:
                iv = midpoint_inverse(b)
                left = SdInterval(2 * iv.k, iv.m + 1)
                right = SdInterval(2 * iv.k + 1, iv.m + 1)
                assert point_sign(b) == point_sign(midpoint(left))
                assert point_sign(b) != point_sign(midpoint(right))
