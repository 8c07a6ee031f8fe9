import os
import shutil
import tempfile
import unittest

import pytest

from graph_covers.core.catalog import (
    catalog, catalog_graph, catalog_names, small_cubic_graphs, make_cycle, make_dumbbell,
    make_flower, make_open_path,
)
from graph_covers.core.isomorphism import (
    IsomorphismDeduplicator, are_isomorphic, deduplicate, vertex_orbits, wl_signature,
)
from graph_covers.core.mg_format import parse_mg, read_mg, serialize_mg, to_dot, write_mg
from graph_covers.core.multigraph import (
    Edge, EdgeKind, Multigraph, bridges, connected_components, degree, disjoint_union,
    handshake_holds, induced_subgraph, is_bipartite, is_connected, is_simple,
    max_multiplicity, max_semi_loop_load, relabel, split_edge, to_networkx,
)
from graph_covers.exceptions import ParseError, UnknownGraphError, ValidationError
from graph_covers.constants import SMALL_CUBIC_NAMES


@pytest.mark.functional
class TestMultigraph(unittest.TestCase):
    """Tests for the multigraph data model."""

    def setUp(self):
        self.wine_glass = catalog_graph("WG")
        self.semis_and_loops = make_dumbbell(2, 1, 3, 0, 1)

    def test_degree_convention(self):
        """Normal edges count once, loops twice, semi-edges once."""
        g = self.semis_and_loops
        self.assertEqual(degree(g, 0), 2 + 2 + 3)
        self.assertEqual(degree(g, 1), 3 + 1)
        self.assertEqual(degree(make_flower(1, 1), 0), 3)

    def test_handshake_holds_for_catalog(self):
        """Degree sums match the edge-kind counts for every fixed catalog graph."""
        for name in catalog_names():
            with self.subTest(name=name):
                self.assertTrue(handshake_holds(catalog_graph(name)))

    def test_invalid_edges_rejected(self):
        """Out-of-range endpoints, equal-endpoint normal edges and negative counts fail."""
        with self.assertRaises(ValidationError):
            Multigraph(2, (Edge.normal(0, 2),))
        with self.assertRaises(ValidationError):
            Multigraph(2, (Edge.normal(1, 1),))
        with self.assertRaises(ValidationError):
            Multigraph(-1)
        with self.assertRaises(ValidationError):
            Multigraph(2, (Edge(EdgeKind.LOOP, 0, 1),))
        with self.assertRaises(ValidationError):
            degree(self.wine_glass, 7)

    def test_is_simple(self):
        """Loops, semi-edges and parallel edges each make a graph non-simple."""
        self.assertTrue(is_simple(catalog_graph("K4")))
        self.assertTrue(is_simple(catalog_graph("Petersen")))
        self.assertFalse(is_simple(make_dumbbell(0, 0, 2, 0, 0)))
        self.assertFalse(is_simple(make_flower(1, 0)))
        self.assertFalse(is_simple(make_cycle(1)))

    def test_multiplicity_and_load(self):
        """Largest bundle and largest semi-plus-twice-loop count."""
        self.assertEqual(max_multiplicity(self.semis_and_loops), 3)
        self.assertEqual(max_semi_loop_load(self.semis_and_loops), 4)
        self.assertEqual(max_multiplicity(make_flower(2, 0)), 0)

    def test_components_and_connectivity(self):
        """Loops and semi-edges never connect distinct vertices."""
        g = Multigraph.from_lists(4, normal=[(0, 1)], loops=[2], semis=[3, 3])
        self.assertEqual(connected_components(g), [[0, 1], [2], [3]])
        self.assertFalse(is_connected(g))
        self.assertTrue(is_connected(self.wine_glass))
        self.assertFalse(is_connected(Multigraph(0)))

    def test_bridges(self):
        """Parallel edges are never bridges; pendant single edges are."""
        self.assertEqual(bridges(self.wine_glass), [4])
        self.assertEqual(bridges(catalog_graph("K4")), [])
        self.assertEqual(bridges(make_dumbbell(0, 1, 1, 1, 0)), [1])
        self.assertEqual(bridges(make_dumbbell(0, 0, 2, 0, 0)), [])

    def test_bipartite(self):
        """Even cycles are bipartite; loops and semi-edges never are."""
        self.assertTrue(is_bipartite(make_cycle(6)))
        self.assertTrue(is_bipartite(make_dumbbell(0, 0, 3, 0, 0)))
        self.assertFalse(is_bipartite(make_cycle(5)))
        self.assertFalse(is_bipartite(make_open_path(2)))

    def test_split_edge(self):
        """A normal edge becomes two semi-edges appended at the end."""
        k4 = catalog_graph("K4")
        split = split_edge(k4, 0)
        self.assertEqual(split.edge_count, k4.edge_count + 1)
        self.assertEqual(split.degrees, k4.degrees)
        self.assertEqual([e.kind for e in split.edges[-2:]], [EdgeKind.SEMI, EdgeKind.SEMI])
        with self.assertRaises(ValidationError):
            split_edge(make_flower(1, 1), 0)

    def test_union_relabel_induced(self):
        """Disjoint union shifts ids; relabel keeps isomorphism; induced keeps loops."""
        union = disjoint_union(make_cycle(3), make_flower(1, 1))
        self.assertEqual(union.vertex_count, 4)
        self.assertEqual(connected_components(union), [[0, 1, 2], [3]])
        petersen = catalog_graph("Petersen")
        moved = relabel(petersen, [9 - v for v in petersen.vertices])
        self.assertTrue(are_isomorphic(petersen, moved))
        with self.assertRaises(ValidationError):
            relabel(petersen, [0] * 10)
        sub, index = induced_subgraph(self.wine_glass, [0, 3])
        self.assertEqual(sub.edge_count, 2)
        self.assertEqual(index, {0: 0, 3: 1})

    def test_to_networkx_attributes(self):
        """Loop and semi-edge counts travel as node attributes."""
        graph = to_networkx(self.semis_and_loops)
        self.assertEqual(graph.nodes[0]["loops"], 1)
        self.assertEqual(graph.nodes[0]["semis"], 2)
        self.assertEqual(graph.number_of_edges(), 3)


@pytest.mark.functional
class TestCatalog(unittest.TestCase):
    """Tests for catalog lookups."""

    def test_parametric_names(self):
        """Flowers, dumbbells, cycles, open paths and chorded cycles resolve."""
        self.assertEqual(catalog("F(1,1)").graph, make_flower(1, 1))
        self.assertEqual(catalog("w(0, 1, 1, 1, 0)").name, "W(0,1,1,1,0)")
        self.assertEqual(catalog("C5").graph.vertex_count, 5)
        self.assertEqual(catalog("P~_3").graph, make_open_path(3))
        wagner = catalog_graph("C(8;4)")
        self.assertEqual(wagner.edge_count, 12)
        self.assertTrue(wagner.is_cubic())

    def test_fixed_names_and_aliases(self):
        """Fixed names are case-insensitive and aliases map onto them."""
        self.assertEqual(catalog("petersen").name, "Petersen")
        self.assertEqual(catalog("K3,3").name, "K33")
        self.assertEqual(catalog("prism").graph, catalog_graph("K3prime_odot"))
        self.assertTrue(catalog("DG").provenance.startswith("[DERIVED]"))
        self.assertTrue(catalog("K4").provenance.startswith("[STANDARD]"))

    def test_unknown_names(self):
        """Unknown names and invalid parameters raise UnknownGraphError."""
        with self.assertRaises(UnknownGraphError):
            catalog("Heawood")
        with self.assertRaises(UnknownGraphError):
            catalog("C(8;7)")
        with self.assertRaises(UnknownGraphError):
            catalog("C0")

    def test_named_graph_shapes(self):
        """The reconstructed small graphs are connected and cubic."""
        for name in ("SG", "DG", "WG", "LC", "H1", "K3prime_odot", "C6prime_odot"):
            with self.subTest(name=name):
                g = catalog_graph(name)
                self.assertTrue(g.is_cubic())
                self.assertTrue(is_connected(g))
        self.assertEqual(catalog_graph("SG").vertex_count, 4)
        self.assertEqual(catalog_graph("C6prime_odot").vertex_count, 12)

    def test_small_cubic_order(self):
        """The poset graphs come back in their fixed order."""
        self.assertEqual([g.name for g in small_cubic_graphs()], list(SMALL_CUBIC_NAMES))


@pytest.mark.functional
class TestMgFormat(unittest.TestCase):
    """Tests for .mg parsing, serialization and DOT export."""

    def setUp(self):
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.test_dir)

    def test_parse_with_comments(self):
        """Comments and blank lines are skipped; edge ids follow file order."""
        text = "# wine glass\nn 2\n\ne 0 1  # bridge\nl 1\ns 0\ns 0\n"
        g = parse_mg(text)
        self.assertEqual(g, Multigraph(2, (
            Edge.normal(0, 1), Edge.loop(1), Edge.semi(0), Edge.semi(0))))

    def test_serialize_parse_identity(self):
        """Serializing a catalog graph and parsing it back gives the same graph."""
        for name in ("WG", "F(3,0)", "W(2,0,1,0,2)", "Petersen"):
            with self.subTest(name=name):
                g = catalog_graph(name)
                self.assertEqual(parse_mg(serialize_mg(g)), g)

    def test_parse_errors_carry_line_numbers(self):
        """Malformed lines report the filename and line."""
        cases = [
            ("n 2\ne 0 0\n", 2),
            ("n 2\ne 0 5\n", 2),
            ("e 0 1\n", 1),
            ("n 2\nx 0\n", 2),
            ("n 2\nn 3\n", 2),
            ("n 2\ns a\n", 2),
            ("n 2\nl 0 1\n", 2),
        ]
        for text, line in cases:
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as ctx:
                    parse_mg(text, filename="bad.mg")
                self.assertEqual(ctx.exception.line, line)
                self.assertIn("filename: bad.mg", str(ctx.exception))
        with self.assertRaises(ParseError):
            parse_mg("# empty\n")

    def test_file_round_trip(self):
        """write_mg creates parent folders and read_mg reads the file back."""
        path = os.path.join(self.test_dir, "nested", "lc.mg")
        write_mg(path, catalog_graph("LC"))
        self.assertTrue(os.path.exists(path))
        self.assertEqual(read_mg(path), catalog_graph("LC"))

    def test_dot_export(self):
        """Loops are self-arcs and semi-edges end at invisible stubs."""
        dot = to_dot(make_flower(2, 1), name="F")
        self.assertTrue(dot.startswith("graph F {\n"))
        self.assertIn("  __s0 [shape=point, style=invis];", dot)
        self.assertIn("  0 -- __s1;", dot)
        self.assertIn("  0 -- 0;", dot)
        self.assertTrue(dot.endswith("}\n"))


@pytest.mark.functional
class TestIsomorphism(unittest.TestCase):
    """Tests for isomorphism checks and deduplication."""

    def test_edge_kinds_matter(self):
        """A loop and two semi-edges give the same degree but different graphs."""
        self.assertFalse(are_isomorphic(make_flower(2, 0), make_flower(0, 1)))
        self.assertFalse(are_isomorphic(make_dumbbell(0, 1, 1, 0, 2), make_dumbbell(0, 1, 1, 1, 0)))
        self.assertTrue(are_isomorphic(make_dumbbell(0, 1, 1, 0, 2), make_dumbbell(2, 0, 1, 1, 0)))

    def test_multiplicity_matters(self):
        """The hash separates graphs that differ only in bundle sizes."""
        a = Multigraph.from_lists(3, normal=[(0, 1), (0, 1), (1, 2)])
        b = Multigraph.from_lists(3, normal=[(0, 1), (1, 2), (1, 2), (0, 2)])
        c = Multigraph.from_lists(3, normal=[(0, 1), (1, 2), (1, 2)])
        self.assertTrue(are_isomorphic(a, c))
        self.assertEqual(wl_signature(a), wl_signature(c))
        self.assertNotEqual(wl_signature(a), wl_signature(b))

    def test_deduplicate(self):
        """One representative per class, first occurrence kept."""
        k33 = catalog_graph("K33")
        prism = catalog_graph("K3prime_odot")
        moved = relabel(k33, [5, 4, 3, 2, 1, 0])
        reps = deduplicate([k33, prism, moved, prism])
        self.assertEqual(reps, [k33, prism])
        dedup = IsomorphismDeduplicator()
        self.assertTrue(dedup.add(k33))
        self.assertFalse(dedup.add(moved))
        self.assertEqual(len(dedup), 1)

    def test_vertex_orbits(self):
        """Vertex-transitive graphs have one orbit; WG has three."""
        self.assertEqual(vertex_orbits(catalog_graph("Petersen")), [list(range(10))])
        self.assertEqual(vertex_orbits(catalog_graph("WG")), [[0], [1, 2], [3]])


if __name__ == '__main__':
    unittest.main()
