import logging
from io import StringIO
from itertools import product

import pytest

from graph_covers.cli import load_graph
from graph_covers.constants import CONFIG_DIR_NAME, LOGS_DIR_NAME
from graph_covers.core.catalog import make_flower
from graph_covers.core.isomorphism import are_isomorphic
from graph_covers.core.multigraph import handshake_holds, is_bipartite, is_connected, relabel
from graph_covers.tools.covers import CoverProjection, ProjectionKind, compose, find_cover, fold_count, verify
from graph_covers.tools.products import odot, times_k2
from main import main
from tests.unit.test_base import random_cubic_multigraph, random_multigraph

KINDS = (ProjectionKind.COVER, ProjectionKind.SEMICOVER)


def projection_exists(g, h, kind) -> bool:
    """Try every vertex map and every incidence-respecting edge map."""
    for vertex_map in product(range(h.vertex_count), repeat=g.vertex_count):
        if any(g.degree(v) != h.degree(w) for v, w in enumerate(vertex_map)):
            continue
        options = []
        for edge in g.edges:
            ends = sorted((vertex_map[edge.u], vertex_map[edge.v]))
            options.append([f for f, image in enumerate(h.edges)
                            if ends == (sorted((image.u, image.v)) if image.is_normal else [image.u, image.u])])
        for edge_map in product(*options):
            if verify(CoverProjection(g, h, vertex_map, edge_map), kind).ok:
                return True
    return False


def small_pairs(rng, count: int) -> list:
    """Small (G, H) pairs with H connected; a third of the G are double covers of H."""
    pairs = []
    while len(pairs) < count:
        h = random_multigraph(rng, max_vertices=2, max_mult=2, max_loops=1, max_semis=1)
        if not h.edge_count or h.edge_count > 3 or not is_connected(h):
            continue
        g = rng.choice((
            random_multigraph(rng, max_vertices=4, max_mult=2, max_loops=1, max_semis=1),
            times_k2(h).source,
            odot(h).source,
        ))
        if g.edge_count <= 6:
            pairs.append((g, h))
    return pairs


@pytest.mark.functional
class TestRandomGraphProperties:
    """Seeded property checks on random multigraphs."""

    def test_handshake(self, rng):
        """Degrees sum to semi-edges plus twice the normal edges and loops."""
        for _ in range(300):
            assert handshake_holds(random_multigraph(rng))

    def test_loops_and_semi_edges_break_bipartiteness(self, rng):
        """A loop or a semi-edge rules out a bipartition."""
        for _ in range(300):
            g = random_multigraph(rng)
            if g.has_loops or g.has_semis:
                assert not is_bipartite(g)

    def test_relabelled_graph_is_a_one_fold_cover(self, rng):
        """A vertex permutation gives an isomorphic graph that covers the original once."""
        for _ in range(60):
            g = random_multigraph(rng, max_vertices=6)
            if not is_connected(g):
                continue
            perm = list(g.vertices)
            rng.shuffle(perm)
            h = relabel(g, perm)
            assert are_isomorphic(g, h)
            projection = find_cover(h, g)
            assert projection is not None
            assert fold_count(projection) == 1


@pytest.mark.functional
class TestCoverInvariants:
    """find_cover against exhaustive search, and the relations between covers and semi-covers."""

    def test_find_cover_agrees_with_exhaustive_search(self, rng):
        """A projection is found exactly when one exists, and it verifies."""
        found_any = False
        for g, h in small_pairs(rng, 150):
            for kind in KINDS:
                projection = find_cover(g, h, kind)
                assert (projection is not None) == projection_exists(g, h, kind)
                if projection is not None:
                    assert verify(projection, kind).ok
                    found_any = True
        assert found_any

    def test_cover_implies_semicover(self, rng):
        """Every covering projection is a semi-covering one."""
        for g, h in small_pairs(rng, 150):
            projection = find_cover(g, h)
            if projection is not None:
                assert verify(projection, ProjectionKind.SEMICOVER).ok
                assert find_cover(g, h, ProjectionKind.SEMICOVER) is not None

    def test_semicover_is_cover_without_semi_edges(self, rng):
        """Without semi-edges in G the two notions coincide."""
        for g, h in small_pairs(rng, 150):
            if not g.has_semis:
                assert (find_cover(g, h) is None) == (find_cover(g, h, ProjectionKind.SEMICOVER) is None)

    def test_semicovers_compose(self, rng):
        """G -> F(3,0) -> F(1,1) composes into a semi-cover, also after a double cover of G."""
        f30, f11 = make_flower(3, 0), make_flower(1, 1)
        second = find_cover(f30, f11, ProjectionKind.SEMICOVER)
        assert second is not None
        checked = 0
        for _ in range(40):
            g = random_cubic_multigraph(rng, rng.randint(1, 4), semis=True, loops=False)
            if not is_connected(g):
                continue
            first = find_cover(g, f30, ProjectionKind.SEMICOVER)
            if first is None:
                continue
            composed = compose(first, second)
            assert verify(composed, ProjectionKind.SEMICOVER).ok
            assert verify(compose(odot(g), composed), ProjectionKind.SEMICOVER).ok
            checked += 1
        assert checked >= 5

@pytest.mark.integration
class TestGraphFiles:
    """Graph files written to disk and read back through the command line loader."""

    def test_file_argument_matches_graph(self, mg_file, rng):
        """A .mg path loads the exact edge list that was written."""
        for i in range(20):
            g = random_multigraph(rng)
            loaded = load_graph(mg_file(f"random_{i}", g), StringIO())
            assert loaded.name == f"random_{i}"
            assert loaded.graph.vertex_count == g.vertex_count
            assert loaded.graph.edges == g.edges


@pytest.mark.integration
class TestEntryPoint:
    """The root entry point sets up config and logging before running a command."""

    @pytest.fixture(autouse=True)
    def reset_logger(self):
        yield
        logger = logging.getLogger('graph_covers')
        for handler in list(logger.handlers):
            logger.removeHandler(handler)
            handler.close()

    def test_main_creates_config_and_log(self, tmp_home, capsys):
        """First run creates the config folder and a log file."""
        assert main(["cat", "F(1,1)"]) == 0
        assert capsys.readouterr().out == "n 1\ns 0\nl 0\n"
        logs = tmp_home / CONFIG_DIR_NAME / LOGS_DIR_NAME
        assert list(logs.glob("graph_covers_*.log"))

    def test_main_reports_negative_answers(self, tmp_home, capsys):
        """A negative answer exits with 1."""
        assert main(["check", "K4", "W(0,0,3,0,0)"]) == 1
        assert "no covering projection" in capsys.readouterr().out


if __name__ == '__main__':
    pytest.main([__file__])
