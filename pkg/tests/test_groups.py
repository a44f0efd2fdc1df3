import unittest

from hypothesis import assume, given, settings, strategies as st

from cohomone.enums import KindSymbol, Marker
from cohomone.exceptions import GroupSemanticException, GroupSyntaxException, UnsupportedGroupException
from cohomone.groups import (Factor, abstractly_isomorphic, center_order, dim, factor_count, format_group,
                             lie_type, locally_isomorphic, normalize_group, parse_group, rank, realize,
                             realize_together, weyl_order, weyl_order_brute_force)
from cohomone.spheres import integer_kernel

_SIMPLE = st.one_of(
    st.integers(2, 6).map(lambda n: f'SU({n})'),
    st.integers(2, 9).map(lambda n: f'SO({n})'),
    st.integers(3, 9).map(lambda n: f'Spin({n})'),
    st.integers(1, 4).map(lambda n: f'Sp({n})'),
    st.integers(1, 5).map(lambda n: f'U({n})'),
    st.lists(st.integers(1, 3), min_size=2, max_size=3).map(lambda ps: f"SU{{{','.join(map(str, ps))}}}"),
    st.just('G2'),
    st.just('S1'),
    st.integers(2, 4).map(lambda n: f'T{n}'),
)

_EXPRESSIONS = st.builds(
    lambda prefix, factors: prefix + ('x'.join(factors) or '1'),
    st.sampled_from(['', 'Z2.', 'Z3.']),
    st.lists(_SIMPLE, max_size=4),
)


def _cuts(draw, m: int) -> list[tuple[int, int]]:
    """Consecutive intervals covering the coordinates 1..m."""
    ends = sorted(draw(st.sets(st.integers(1, m - 1), max_size=m - 1))) + [m]
    starts = [1] + [e + 1 for e in ends[:-1]]
    return list(zip(starts, ends))


@st.composite
def _placed_unitary(draw) -> str:
    m = draw(st.integers(3, 6))
    blocks = [f'SU({b - a + 1})@[{a}..{b}]' for a, b in _cuts(draw, m) if b > a and draw(st.booleans())]
    used = sum(int(b[3:b.index(')')]) - 1 for b in blocks)
    circles = []
    for _ in range(draw(st.integers(0, min(2, m - 1 - used)))):
        head = draw(st.lists(st.integers(-3, 3), min_size=m - 1, max_size=m - 1))
        weights = head + [-sum(head)]
        assume(any(weights))
        circles.append(f"S1[w({','.join(map(str, weights))})]")
    prefix = draw(st.sampled_from(['', 'Z2.', 'Z3.']))
    return f"{prefix}{'x'.join(blocks + circles) or f'SU({m})@[1..{m}]'} in SU({m})"


@st.composite
def _placed_orthogonal(draw, circles: bool = True) -> str:
    m = draw(st.integers(4, 9))
    factors, free_from, used = [], 1, 0
    if m == 7 and draw(st.booleans()):
        factors.append('G2#g2so7')
        free_from, used = 8, 2
    for a, b in _cuts(draw, m):
        if a >= free_from and b > a and draw(st.booleans()):
            factors.append(f'SO({b - a + 1})@[{a}..{b}]')
            used += (b - a + 1) // 2
    for _ in range(draw(st.integers(0, min(2, m // 2 - used))) if circles else 0):
        weights = draw(st.lists(st.integers(-3, 3), min_size=m // 2, max_size=m // 2))
        assume(any(weights))
        factors.append(f"S1[w({','.join(map(str, weights))})]")
    assume(factors)
    return f"{'x'.join(factors)} in SO({m})"


class TestGrammar(unittest.TestCase):
    def test_parse_placed_group(self):
        g = parse_group('S1[w(1,-1,0,0)]xSU(2)@[3..4] in SU(4)')

        self.assertEqual(2, len(g.factors))
        self.assertEqual('SU(4)', g.ambient.text)
        self.assertEqual(KindSymbol.torus, g.factors[0].kind)

    def test_format_is_canonical(self):
        self.assertEqual('S1[w(1,-1,0,0)]xSU(2)@[3..4] in SU(4)',
                         format_group(parse_group('SU(2)@[3..4] x S1[w(-1,1,0,0)] in SU(4)')))
        self.assertEqual('Z2.T2xSU(3)', format_group(parse_group('Z2.S1xSU(3)xS1')))

    def test_trivial_group(self):
        g = parse_group('1')

        self.assertEqual((), g.factors)
        self.assertEqual('1', format_group(g))

    def test_syntax_error_names_byte_offset(self):
        with self.assertRaises(GroupSyntaxException) as cm:
            parse_group('SU(3)xQ(2)')

        self.assertEqual(6, cm.exception.offset)
        self.assertEqual('Syntax Error', cm.exception.to_dict()['error'])

    def test_overlapping_blocks(self):
        with self.assertRaises(GroupSemanticException):
            parse_group('SU(2)@[1..2]xSU(2)@[2..3] in SU(4)')

    def test_group_too_large_for_ambient(self):
        with self.assertRaises(GroupSemanticException):
            parse_group('SU(5) in SU(4)')

    def test_invalid_parameter(self):
        with self.assertRaises(GroupSemanticException):
            parse_group('SU(1)')

    @settings(max_examples=1000, deadline=None)
    @given(_EXPRESSIONS)
    def test_round_trip(self, text):
        g = parse_group(text)
        canonical = format_group(g)

        self.assertEqual(normalize_group(g), parse_group(canonical))
        self.assertEqual(canonical, format_group(parse_group(canonical)))

    @settings(deadline=None)
    @given(st.one_of(_placed_unitary(), _placed_orthogonal()))
    def test_round_trip_placed(self, text):
        g = parse_group(text)
        canonical = format_group(g)

        self.assertEqual(normalize_group(g), parse_group(canonical))
        self.assertEqual(g.ambient, parse_group(canonical).ambient)

    @given(_EXPRESSIONS)
    def test_normalize_is_idempotent(self, text):
        g = normalize_group(parse_group(text))

        self.assertEqual(g, normalize_group(g))


class TestInvariants(unittest.TestCase):
    def test_classical_groups(self):
        for text, expected in [('SU(3)', (2, 8, 6)), ('SO(5)', (2, 10, 8)), ('Sp(2)', (2, 10, 8)),
                               ('SO(6)', (3, 15, 24)), ('G2', (2, 14, 12)), ('U(3)', (3, 9, 6)),
                               ('SU{1,2}', (2, 4, 2)), ('T3', (3, 3, 1))]:
            with self.subTest(text):
                g = parse_group(text)
                self.assertEqual(expected, (rank(g), dim(g), weyl_order(g)))

    def test_weyl_order_matches_brute_force(self):
        factors = [Factor(KindSymbol.su, (n,)) for n in (2, 3, 4)] \
            + [Factor(KindSymbol.so, (n,)) for n in (3, 4, 5, 6, 7)] \
            + [Factor(KindSymbol.sp, (n,)) for n in (1, 2, 3)] \
            + [Factor(KindSymbol.g2)]
        for f in factors:
            with self.subTest(f.symbol):
                self.assertEqual(weyl_order(parse_group(f.symbol)), weyl_order_brute_force(f))

    def test_factor_count(self):
        self.assertEqual(2, factor_count(parse_group('SO(4)')))
        self.assertEqual(2, factor_count(parse_group('U(2)')))
        self.assertEqual(4, factor_count(parse_group('SU{1,2,2}')))
        self.assertEqual(4, factor_count(parse_group('T2xSp(1)xSp(1)')))

    def test_center_order(self):
        self.assertEqual(3, center_order(parse_group('SU(3)')))
        self.assertEqual(2, center_order(parse_group('Sp(4)')))
        self.assertEqual(1, center_order(parse_group('SO(7)')))
        self.assertEqual(4, center_order(parse_group('Spin(8)')))
        self.assertEqual(Marker.infinite, center_order(parse_group('U(3)')))

        with self.assertRaises(UnsupportedGroupException):
            center_order(parse_group('SU(2)xSU(3)'))


class TestIsomorphisms(unittest.TestCase):
    def test_low_rank_identifications(self):
        self.assertTrue(locally_isomorphic(parse_group('SO(3)'), parse_group('SU(2)')))
        self.assertTrue(locally_isomorphic(parse_group('SO(5)'), parse_group('Sp(2)')))
        self.assertTrue(locally_isomorphic(parse_group('SO(6)'), parse_group('SU(4)')))
        self.assertTrue(locally_isomorphic(parse_group('SO(4)'), parse_group('Sp(1)xSp(1)')))
        self.assertFalse(locally_isomorphic(parse_group('SO(7)'), parse_group('Sp(3)')))

    def test_lie_type_counts_center(self):
        self.assertEqual(lie_type(parse_group('U(2)')), lie_type(parse_group('S1xSU(2)')))
        self.assertEqual(lie_type(parse_group('SO(2)')), lie_type(parse_group('S1')))

    def test_abstract_isomorphism(self):
        self.assertTrue(abstractly_isomorphic(parse_group('Sp(1)'), parse_group('SU(2)')))
        self.assertFalse(abstractly_isomorphic(parse_group('SO(3)'), parse_group('SU(2)')))


class TestRealization(unittest.TestCase):
    def test_blocks_starting_at_even_coordinates(self):
        for text in ('SO(4)@[2..5] in SO(7)', 'SO(6)@[2..7] in SO(7)', 'SO(3)@[1..3]xSO(2)@[4..5] in SO(7)'):
            g = parse_group(text)
            r = realize(g)
            with self.subTest(text):
                self.assertEqual(rank(g), len(r.directions))
                self.assertEqual(rank(g), 3 - len(integer_kernel(r.directions, 3)))

    def test_coordinates_are_moved_back(self):
        r = realize(parse_group('SO(4)@[2..5] in SO(7)'))

        self.assertEqual(frozenset({1, 2, 3, 4}), r.factors[0].coordinates)
        self.assertEqual([2, 3, 4, 5], sorted(r.original(c) for c in r.factors[0].coordinates))
        self.assertEqual(3, realize(parse_group('SO(3)@[1..3] in SO(7)')).original(3))

    def test_groups_realized_together_share_coordinates(self):
        k, h = realize_together(parse_group('SO(4)@[2..5] in SO(7)'), parse_group('SO(3)@[2..4] in SO(7)'))

        self.assertEqual(k.relabeling, h.relabeling)
        self.assertLessEqual(h.factors[0].coordinates, k.factors[0].coordinates)
        self.assertEqual(realize(parse_group('SO(4)@[2..5] in SO(7)')), k)

    def test_realize_together_needs_one_ambient(self):
        with self.assertRaises(GroupSemanticException):
            realize_together(parse_group('SU(2)@[1..2] in SU(3)'), parse_group('SU(2)@[1..2] in SU(4)'))

    @settings(deadline=None)
    @given(_placed_orthogonal(circles=False))
    def test_torus_of_blocks_has_full_rank(self, text):
        g = parse_group(text)
        width = g.ambient.torus_size

        self.assertEqual(rank(g), width - len(integer_kernel(realize(g).directions, width)))
