import json
import shutil
import tempfile
import unittest
from io import StringIO
from pathlib import Path

import pytest

from graph_covers.cli import load_graph, run
from graph_covers.core.catalog import catalog_graph
from graph_covers.core.mg_format import write_mg
from graph_covers.exceptions import UnknownGraphError


@pytest.mark.integration
class TestCommandLine(unittest.TestCase):
    """Tests for the ``cover`` command line front end."""

    def setUp(self):
        """Set up each test."""
        self.test_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up after each test."""
        shutil.rmtree(self.test_dir)

    def invoke(self, *argv, stdin=""):
        out, err = StringIO(), StringIO()
        code = run(list(argv), stdin=StringIO(stdin), stdout=out, stderr=err,
                   default_budget=16, good_set_cap=20)
        return code, out.getvalue(), err.getvalue()

    def test_check_petersen(self):
        """The Petersen graph covers F(1,1) but not F(3,0)."""
        code, out, _ = self.invoke("check", "Petersen", "F(1,1)")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("10-fold covering projection Petersen -> F(1,1)\nv 0 0\n"))

        code, out, _ = self.invoke("check", "Petersen", "F(3,0)")
        self.assertEqual(code, 1)
        self.assertEqual(out, "no covering projection (exhaustive)\n")

    def test_cat_piped_into_check(self):
        """Catalog output read back from stdin."""
        _, text, _ = self.invoke("cat", "K4")
        self.assertTrue(text.startswith("n 4\n"))
        code, out, _ = self.invoke("check", "-", "W(1,0,2,0,1)", stdin=text)
        self.assertEqual(code, 0)
        self.assertIn("2-fold covering projection stdin -> W(1,0,2,0,1)", out)

    def test_semicheck(self):
        """F(3,0) semi-covers F(1,1)."""
        code, out, _ = self.invoke("semicheck", "F(3,0)", "F(1,1)")
        self.assertEqual(code, 0)
        self.assertIn("semi-covering projection", out)

    def test_verify_certificate(self):
        """A printed certificate verifies; a broken one reports violations."""
        _, out, _ = self.invoke("check", "C_6", "C_3")
        good = Path(self.test_dir) / "good.cert"
        good.write_text(out.split("\n", 1)[1])
        code, out, _ = self.invoke("verify", "C_6", "C_3", str(good))
        self.assertEqual((code, out), (0, "ok\n"))

        bad = Path(self.test_dir) / "bad.cert"
        bad.write_text("v 0 0\nv 1 0\nv 2 0\ne 0 0\ne 1 1\ne 2 2\n")
        code, out, _ = self.invoke("verify", "C_3", "C_3", str(bad))
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith("violation: "))

    def test_graph_files(self):
        """Graph arguments may be .mg files."""
        path = Path(self.test_dir) / "cube.mg"
        write_mg(path, catalog_graph("Q3"))
        code, out, _ = self.invoke("check", str(path), "K4")
        self.assertEqual(code, 0)
        self.assertIn("-> K4", out)
        self.assertEqual(load_graph(str(path), StringIO()).name, "cube")

    def test_products_and_factories(self):
        """Constructions print .mg text or certificates."""
        code, out, _ = self.invoke("product", "F(3,0)", "--times")
        self.assertEqual((code, out), (0, "n 2\ne 0 1\ne 0 1\ne 0 1\n"))
        code, out, _ = self.invoke("pfold", "F(1,1)", "-p", "4")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("n 4\n"))
        code, out, _ = self.invoke("factory", "LC", "--nopm", "--certificate")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("v 0 0\n"))

    def test_analytic_commands(self):
        """Chromatic index, matchings, codes and good sets."""
        code, out, _ = self.invoke("chi", "K4")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("chromatic index 3\nc 0 "))
        self.assertEqual(self.invoke("chi", "WG")[1], "chromatic index inf\n")
        self.assertEqual(self.invoke("matching", "W(0,1,1,0,2)", "--semi")[:2], (0, "m 1\n"))
        self.assertEqual(self.invoke("matching", "LC")[:2], (1, "no perfect matching\n"))
        self.assertTrue(self.invoke("matching", "K4", "--f11")[1].startswith("4-fold cover of F(1,1)\n"))
        self.assertEqual(self.invoke("code", "C(8;4)")[:2], (1, "no perfect code\n"))
        self.assertEqual(self.invoke("goodsets", "LC")[:2], (0, "x 0 odd=3 very-good\n"))
        self.assertEqual(self.invoke("goodsets", "K4")[:2], (1, "no good sets\n"))
        self.assertEqual(self.invoke("goodsets", "Petersen", "--cap", "8")[0], 2)

    def test_stronger(self):
        """Exit code 0 for a stronger verdict and 1 otherwise."""
        code, out, _ = self.invoke("stronger", "F(3,0)", "F(1,1)")
        self.assertEqual(code, 0)
        self.assertEqual(out, "stronger-by-semicover: A semi-covers B\n")
        code, out, _ = self.invoke("stronger", "K4", "C(8;4)")
        self.assertEqual(code, 1)
        self.assertTrue(out.startswith("not-stronger-by-divisibility: "))

    def test_poset_over_directory(self):
        """A directory of .mg files gives a DOT or JSON report."""
        for name in ("a_f11", "b_f30", "c_k4"):
            source = {"a_f11": "F(1,1)", "b_f30": "F(3,0)", "c_k4": "K4"}[name]
            write_mg(Path(self.test_dir) / f"{name}.mg", catalog_graph(source))
        code, out, _ = self.invoke("poset", self.test_dir)
        self.assertEqual(code, 0)
        self.assertIn('n0 [label="a_f11"];', out)
        self.assertIn("n2 -> n0 [color=green];", out)
        self.assertIn("n1 -> n0 [color=purple];", out)

        code, out, _ = self.invoke("--json", "poset", self.test_dir)
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["purple"], [["b_f30", "a_f11"]])

    def test_json_output(self):
        """--json emits a structured payload."""
        code, out, _ = self.invoke("--json", "check", "K4", "F(1,1)")
        self.assertEqual(code, 0)
        data = json.loads(out)
        self.assertTrue(data["found"])
        self.assertEqual(data["fold"], 4)

    def test_export_dot(self):
        """Semi-edges end at invisible stub nodes."""
        code, out, _ = self.invoke("export", "F(1,1)", "--dot")
        self.assertEqual(code, 0)
        self.assertIn("__s0 [shape=point, style=invis];", out)

    def test_usage_errors(self):
        """Bad input exits with 2 and a message on stderr."""
        code, _, err = self.invoke("check", "nowhere.mg", "K4")
        self.assertEqual(code, 2)
        self.assertTrue(err.startswith("error: "))
        self.assertEqual(self.invoke("cat", "NoSuchGraph")[0], 2)
        self.assertEqual(self.invoke("pfold", "F(1,1)", "-p", "3")[0], 2)
        self.assertEqual(self.invoke("poset")[0], 2)
        self.assertEqual(self.invoke("poset", "--figure5", self.test_dir)[0], 2)
        self.assertEqual(self.invoke()[0], 2)
        self.assertEqual(self.invoke("product", "K4")[0], 2)
        with self.assertRaises(UnknownGraphError):
            load_graph("NoSuchGraph", StringIO())

    def test_version(self):
        """--version prints the build string."""
        code, out, _ = self.invoke("--version")
        self.assertEqual(code, 0)
        self.assertTrue(out.startswith("graph_covers "))


if __name__ == '__main__':
    unittest.main()
