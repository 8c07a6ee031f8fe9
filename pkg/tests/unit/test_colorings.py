import random
import unittest

import pytest

from graph_covers.core.catalog import catalog_graph, make_cycle, make_dumbbell, make_flower
from graph_covers.core.multigraph import Multigraph, bridges, is_connected, split_edge
from graph_covers.exceptions import CapExceededError, UnsupportedInputError
from graph_covers.tools.colorings import (
    EdgeColoring, chromatic_index, covers_F11, find_edge_coloring, format_code, format_coloring,
    format_matching, has_perfect_code, has_perfect_matching, has_semi_perfect_matching,
    is_very_good, minimal_good_sets, perfect_matching_bruteforce,
)
from graph_covers.tools.covers import find_cover
from tests.unit.test_base import RANDOM_SEED, CoverAssertionsMixin, random_cubic_multigraph


def bridged_cubic() -> Multigraph:
    """Two copies of K4 minus an edge, each closed by a new vertex, joined by a bridge."""
    block = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (1, 4)]
    normal = block + [(u + 5, v + 5) for u, v in block] + [(4, 9)]
    return Multigraph.from_lists(10, normal=normal)


@pytest.mark.functional
class TestChromaticIndex(unittest.TestCase):
    """Tests for exact edge coloring."""

    def setUp(self):
        self.rng = random.Random(RANDOM_SEED)

    def test_known_values(self):
        """Chromatic indices of catalog graphs."""
        expected = {
            "K4": 3, "Petersen": 4, "F(3,0)": 3, "W(1,0,2,0,1)": 3, "W(0,0,3,0,0)": 3,
            "K3prime": 3, "Q3": 3, "H1": 3, "C_5": 3, "C_4": 2,
        }
        for name, value in expected.items():
            with self.subTest(name=name):
                result = chromatic_index(catalog_graph(name))
                self.assertEqual(result.value, value)
                self.assertTrue(result.coloring.verify(catalog_graph(name)))

    def test_loops_are_infinite(self):
        """A loop can never be colored."""
        for name in ("WG", "LC", "F(1,1)", "SG"):
            with self.subTest(name=name):
                result = chromatic_index(catalog_graph(name))
                self.assertTrue(result.is_infinite)
                self.assertTrue(result.exceeds(100))
                self.assertEqual(str(result), "inf")
        self.assertIsNone(find_edge_coloring(catalog_graph("WG"), 5))

    def test_bridge_forces_four_colors(self):
        """A cubic graph without semi-edges that has a bridge needs four colors."""
        g = bridged_cubic()
        self.assertEqual(bridges(g), [14])
        self.assertEqual(chromatic_index(g).value, 4)
        for i in range(300):
            g = random_cubic_multigraph(self.rng, 2 * self.rng.randint(1, 5), semis=False, loops=False)
            if bridges(g):
                with self.subTest(case=i):
                    self.assertTrue(chromatic_index(g).exceeds(3))

    def test_split_edge_keeps_index(self):
        """Replacing an edge of a cubic graph by two semi-edges keeps the chromatic index."""
        graphs = [catalog_graph("Petersen"), catalog_graph("K4"), bridged_cubic()]
        graphs += [
            random_cubic_multigraph(self.rng, 2 * self.rng.randint(1, 5), semis=False, loops=False)
            for _ in range(60)
        ]
        for i, g in enumerate(graphs):
            normal = [e for e, edge in enumerate(g.edges) if edge.is_normal]
            e = self.rng.choice(normal)
            with self.subTest(case=i, edge=e):
                self.assertEqual(chromatic_index(split_edge(g, e)).value, chromatic_index(g).value)

    def test_three_colorable_iff_covers_f30(self):
        """A cubic graph is 3-edge-colorable exactly when it covers F(3,0)."""
        f30 = make_flower(3, 0)
        for i in range(150):
            g = random_cubic_multigraph(self.rng, self.rng.randint(1, 7))
            with self.subTest(case=i):
                self.assertEqual(
                    chromatic_index(g).value == 3, find_cover(g, f30) is not None
                )

    def test_edge_coloring_verify(self):
        """Improper colorings are rejected."""
        triangle = make_cycle(3)
        self.assertTrue(EdgeColoring((0, 1, 2), 3).verify(triangle))
        self.assertFalse(EdgeColoring((0, 0, 1), 3).verify(triangle))
        self.assertFalse(EdgeColoring((0, 1), 3).verify(triangle))
        self.assertFalse(EdgeColoring((0, 1, 3), 3).verify(triangle))
        self.assertIsNone(find_edge_coloring(triangle, 2))


@pytest.mark.functional
class TestMatchings(CoverAssertionsMixin, unittest.TestCase):
    """Tests for perfect and semi-perfect matchings and the F(1,1) test."""

    def setUp(self):
        self.rng = random.Random(RANDOM_SEED)

    def test_perfect_matchings(self):
        """Known graphs with and without a perfect matching."""
        self.assertEqual(len(has_perfect_matching(catalog_graph("K4"))), 2)
        self.assertIsNone(has_perfect_matching(catalog_graph("LC")))
        self.assertEqual(has_perfect_matching(Multigraph.from_lists(2, normal=[(0, 1)])), frozenset({0}))
        self.assertIsNone(has_perfect_matching(make_cycle(5)))
        # The double edge collapses to its lowest id
        self.assertEqual(has_perfect_matching(make_dumbbell(1, 0, 2, 0, 1)), frozenset({1}))

    def test_perfect_matching_matches_bruteforce(self):
        """Blossom matching and exhaustive search agree."""
        for i in range(200):
            g = random_cubic_multigraph(self.rng, self.rng.randint(1, 8))
            with self.subTest(case=i):
                self.assertEqual(
                    has_perfect_matching(g) is None, perfect_matching_bruteforce(g) is None
                )

    def test_semi_perfect_matchings(self):
        """Semi-edges may match their vertex; loops never take part."""
        f30 = make_flower(3, 0)
        matching = has_semi_perfect_matching(f30)
        self.assertEqual(len(matching.edges), 1)
        self.assertTrue(matching.verify(f30))
        self.assertEqual(has_semi_perfect_matching(make_dumbbell(0, 1, 1, 0, 2)).edges, frozenset({1}))
        self.assertIsNone(has_semi_perfect_matching(catalog_graph("LC")))
        self.assertIsNone(has_semi_perfect_matching(make_flower(0, 1)))

    def test_covers_f11(self):
        """Known answers for the F(1,1) cover test."""
        projection = covers_F11(catalog_graph("K4"))
        self.assertCover(projection, fold=4)
        self.assertIsNone(covers_F11(make_dumbbell(2, 0, 1, 0, 2)))
        self.assertIsNone(covers_F11(catalog_graph("LC")))
        self.assertIsNotNone(covers_F11(catalog_graph("Petersen")))
        with self.assertRaises(UnsupportedInputError):
            covers_F11(make_cycle(4))

    def test_covers_f11_matches_search(self):
        """The matching test agrees with the exhaustive cover search."""
        f11 = make_flower(1, 1)
        for i in range(200):
            g = random_cubic_multigraph(self.rng, self.rng.randint(1, 8))
            with self.subTest(case=i):
                projection = covers_F11(g)
                self.assertEqual(projection is None, find_cover(g, f11) is None)
                if projection is not None:
                    self.assertCover(projection)


@pytest.mark.functional
class TestGoodSets(unittest.TestCase):
    """Tests for Tutte barriers."""

    def setUp(self):
        self.rng = random.Random(RANDOM_SEED)

    def test_loopy_claw(self):
        """The center of LC leaves three odd components."""
        sets = minimal_good_sets(catalog_graph("LC"))
        self.assertEqual(len(sets), 1)
        self.assertEqual(sets[0].sorted_vertices(), [0])
        self.assertEqual(sets[0].odd_component_count, 3)
        self.assertTrue(sets[0].very_good)

    def test_graphs_with_perfect_matching(self):
        """No good set exists when a perfect matching does."""
        self.assertEqual(minimal_good_sets(catalog_graph("K4")), [])
        self.assertEqual(minimal_good_sets(catalog_graph("SG")), [])

    def test_minimal_sets_are_very_good(self):
        """On connected cubic graphs without a perfect matching every minimal good set is very good."""
        checked = 0
        for i in range(400):
            g = random_cubic_multigraph(self.rng, 2 * self.rng.randint(1, 4), semis=False)
            if not is_connected(g) or has_perfect_matching(g) is not None:
                continue
            checked += 1
            with self.subTest(case=i):
                sets = minimal_good_sets(g)
                self.assertTrue(sets)
                for good in sets:
                    self.assertGreater(good.odd_component_count, len(good.vertices))
                    self.assertTrue(good.very_good)
                    self.assertTrue(is_very_good(g, good.vertices))
        self.assertGreater(checked, 0)

    def test_errors(self):
        """Semi-edges and large graphs are refused."""
        with self.assertRaises(UnsupportedInputError):
            minimal_good_sets(make_flower(3, 0))
        with self.assertRaises(CapExceededError) as ctx:
            minimal_good_sets(catalog_graph("Petersen"), cap=8)
        self.assertEqual(ctx.exception.cap, 8)


@pytest.mark.functional
class TestPerfectCodes(unittest.TestCase):
    """Tests for 1-perfect codes."""

    def test_known_codes(self):
        """K4 and Q3 have perfect codes; the others here do not."""
        self.assertEqual(len(has_perfect_code(catalog_graph("K4"))), 1)
        self.assertEqual(len(has_perfect_code(catalog_graph("Q3"))), 2)
        for name in ("C(8;4)", "C6prime_odot", "H1", "Petersen"):
            with self.subTest(name=name):
                self.assertIsNone(has_perfect_code(catalog_graph(name)))

    def test_code_is_independent_and_dominating(self):
        """Every outside vertex of Q3 sees exactly one code vertex."""
        g = catalog_graph("Q3")
        code = has_perfect_code(g)
        for v in g.vertices:
            neighbors = {g.edges[e].other(v) for e in g.normals_at(v)}
            expected = 0 if v in code else 1
            self.assertEqual(len(neighbors & code), expected)


@pytest.mark.functional
class TestWitnessFormats(unittest.TestCase):
    """Tests for witness line formats."""

    def test_formats(self):
        """Colorings, matchings and codes print one line per item."""
        self.assertEqual(format_coloring(EdgeColoring((0, 1), 2)), "c 0 0\nc 1 1\n")
        self.assertEqual(format_matching({3, 1}), "m 1\nm 3\n")
        self.assertEqual(format_code(frozenset({2, 0})), "p 0\np 2\n")


if __name__ == '__main__':
    unittest.main()
