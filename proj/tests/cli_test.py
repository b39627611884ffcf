"""Black-box checks of the mdl command line."""
import json
import pathlib
import subprocess
import sys
import unittest

import jsonschema
import networkx as nx

MDL = sys.argv.pop(1)
SCHEMAS = pathlib.Path(__file__).resolve().parent.parent / "docs" / "schemas"


def run(*args, stdin=None):
    return subprocess.run([MDL, *args], input=stdin, capture_output=True, text=True, timeout=600)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def as_nx(g6):
    return nx.from_graph6_bytes(g6.encode())


class Schemas(unittest.TestCase):
    def check(self, name, *args, code=0):
        r = run(*args, "--format", "json", "--no-timing")
        self.assertEqual(r.returncode, code, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema(name))
        return doc

    def test_spectrum(self):
        doc = self.check("spectrum", "spectrum", "--max-n", "5", "--cap", "3/2")
        self.assertEqual(doc["count"], len(doc["entries"]))
        self.assertIn("6/5", doc["densities"])

    def test_enumerate(self):
        doc = self.check("enumerate", "enumerate", "--max-n", "5", "--connectivity", "connected")
        self.assertEqual(doc["count"], 1 + 1 + 2 + 6 + 21)

    def test_densest_minor(self):
        doc = self.check("densest_minor", "densest-minor", "--named", "friendship:3")
        self.assertEqual(doc["density"], "9/7")

    def test_reports(self):
        self.check("verification_report", "verify", "low-spectrum", "--max-n", "6")
        self.check("verification_report", "verify", "rank4", "--max-n", "6")
        self.check("verification_report", "verify", "blocks")
        self.check("verification_report", "verify", "multi", "--max-n", "3", "--max-m", "4", "--random-sets", "20")
        doc = self.check("verification_report", "verify", "low-spectrum", "--max-n", "6", "--drop", "5/4", code=1)
        self.assertFalse(doc["pass"])
        self.assertEqual(len(doc["counterexamples"]), 1)
        diamond = nx.Graph([(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
        self.assertTrue(nx.is_isomorphic(as_nx(doc["counterexamples"][0]), diamond))


class ExitCodes(unittest.TestCase):
    def test_matrix(self):
        self.assertEqual(run("density", "--g6", "C~").returncode, 0)
        self.assertEqual(run("verify", "low-spectrum", "--max-n", "5", "--drop", "1").returncode, 1)
        self.assertEqual(run("density", "--g6", "C").returncode, 2)
        self.assertEqual(run("density", "--edges", "0-x").returncode, 2)
        self.assertEqual(run("density", "--bogus").returncode, 2)
        self.assertEqual(run("density").returncode, 2)
        self.assertEqual(run("density", "--named", "nosuch:3").returncode, 2)
        self.assertEqual(run("densest-minor", "--named", "complete:12").returncode, 2)
        self.assertEqual(run("spectrum", "--max-n", "12").returncode, 2)
        self.assertEqual(run("density", "--format", "yaml", "--g6", "C~").returncode, 2)

    def test_stdin(self):
        r = run("density", "--g6", "-", stdin="C~\n")
        self.assertEqual(r.returncode, 0, r.stderr)


class Determinism(unittest.TestCase):
    def test_repeated_runs_identical(self):
        for args in (["spectrum", "--max-n", "6", "--format", "json"],
                     ["verify", "rank4", "--max-n", "6", "--format", "json", "--no-timing"],
                     ["enumerate", "--max-n", "5", "--format", "csv"]):
            a = run(*args)
            b = run(*args)
            self.assertEqual(a.returncode, 0, a.stderr)
            self.assertEqual(a.stdout, b.stdout)


class Graph6(unittest.TestCase):
    def test_enumerate_against_networkx(self):
        doc = json.loads(run("enumerate", "--max-n", "6", "--format", "json").stdout)
        graphs = [as_nx(g["graph6"]) for g in doc["graphs"]]
        self.assertEqual(len(graphs), 1 + 2 + 4 + 11 + 34 + 156)
        for g, rec in zip(graphs, doc["graphs"]):
            self.assertEqual((g.number_of_nodes(), g.number_of_edges()), (rec["n"], rec["m"]))
        for n in range(1, 7):
            same = [g for g in graphs if g.number_of_nodes() == n]
            for i, g in enumerate(same):
                for h in same[i + 1:]:
                    if g.number_of_edges() == h.number_of_edges():
                        self.assertFalse(nx.is_isomorphic(g, h))

    def test_outputs_reparse(self):
        doc = json.loads(run("spectrum", "--max-n", "7", "--cap", "3/2", "--format", "json").stdout)
        for e in doc["entries"]:
            g = as_nx(e["graph6"])
            self.assertEqual((g.number_of_nodes(), g.number_of_edges()), (e["n"], e["m"]))
            self.assertTrue(nx.is_connected(g))
            enc = run("encode", "--g6", e["graph6"]).stdout.strip()
            self.assertTrue(nx.is_isomorphic(as_nx(enc.split()[-1]), g))

    def test_networkx_encoding_accepted(self):
        g = nx.petersen_graph()
        g6 = nx.to_graph6_bytes(g, header=False).decode().strip()
        r = run("density", "--g6", g6, "--format", "json")
        self.assertEqual(json.loads(r.stdout)["density"], "3/2")


if __name__ == "__main__":
    unittest.main()
