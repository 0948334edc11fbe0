"""Integration tests for the lmtopo command line tool.

Usage: test_cli.py LMTOPO_BINARY SCHEMA_DIR
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BINARY = None
SCHEMAS = None


def run(*args, stdin=None):
    return subprocess.run([BINARY, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=300)


def ok(*args, stdin=None):
    r = run(*args, stdin=stdin)
    if r.returncode != 0:
        raise AssertionError(f"{args} exited {r.returncode}: {r.stderr}")
    return r.stdout


class CliTest(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.dir = Path(cls.tmp.name)
        for name in ("sigma1", "sigma3", "tetrahedron", "bipyramid5", "octahedron"):
            (cls.dir / f"{name}.txt").write_text(ok("gen", "catalog", name))
        cls.list_dir = cls.dir / "list"
        cls.list_summary = json.loads(ok("list", "build", "--degree", 6, "--faces", 20, "--spheres", 3,
                                         "--max-vertices", 8, "--max-merges", 1, "--seed", 1,
                                         "--list-dir", cls.list_dir))

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def path(self, name):
        return self.dir / f"{name}.txt"

    def validate(self, text):
        doc = json.loads(text)
        schema = json.loads((SCHEMAS / f"{doc['kind']}.schema.json").read_text())
        jsonschema.validate(doc, schema)
        return doc

    def test_inv_sigma1(self):
        doc = self.validate(ok("inv", self.path("sigma1")))
        self.assertEqual(doc["mu"], "7/8")
        self.assertTrue(doc["identity_check"])

    def test_pipeline_from_stdin(self):
        text = ok("gen", "catalog", "octahedron")
        doc = self.validate(ok("inv", "-", stdin=text))
        self.assertEqual(doc["chi"], 2)
        self.assertEqual(doc["surface"]["surface_name"], "sphere")

    def test_certify_bipyramid(self):
        doc = self.validate(ok("certify", self.path("bipyramid5"), "--list", self.list_dir))
        self.assertEqual(doc["verdict"], "not_certified")
        self.assertIsNotNone(doc["witness"])
        self.assertEqual(len(doc["witness"]["image"]), 6)

    def test_every_report_validates(self):
        commands = [
            ("mutilde", self.path("sigma3")),
            ("mutilde", self.path("sigma3"), "--mode", "brute"),
            ("collapse", self.path("sigma3")),
            ("contains", self.path("tetrahedron"), self.path("sigma3"), "--count"),
            ("contains", self.path("tetrahedron"), self.path("sigma3"), "--all"),
            ("config", self.path("octahedron"), "--bound", 17),
            ("quotients", self.path("octahedron"), "--max-merges", 1),
            ("betti", self.path("sigma3"), "--field", "gf2"),
            ("list", "verify", self.list_dir),
            ("experiment", "threshold", "--catalog", "tetrahedron", "--n", "8,10", "--alpha", "1,0.5",
             "--trials", 4, "--seed", 3),
            ("experiment", "betti", "--n", 10, "--c", 3, "--trials", 3, "--seed", 3),
            ("experiment", "collapse", "--n", 12, "--c", 1, "--trials", 3, "--seed", 3),
        ]
        kinds = set()
        for cmd in commands:
            with self.subTest(cmd=cmd):
                kinds.add(self.validate(ok(*cmd))["kind"])
        self.assertEqual(len(kinds), 10)
        jsonschema.validate(self.list_summary, json.loads((SCHEMAS / "list_summary.schema.json").read_text()))
        self.assertEqual(self.list_summary["l1"], 1)

    def test_generated_sphere(self):
        text = ok("gen", "sphere", "--vertices", 30, "--seed", 4)
        self.assertTrue(text.startswith("# lmtopo"))
        doc = self.validate(ok("inv", "-", stdin=text))
        self.assertEqual((doc["v"], doc["f"], doc["chi"]), (30, 56, 2))

    def test_determinism_and_seed(self):
        args = ("experiment", "threshold", "--catalog", "tetrahedron", "--n", 12, "--alpha", 1,
                "--trials", 5, "--seed", 42)
        a, b = ok(*args), ok(*args)
        self.assertEqual(a, b)
        self.assertEqual(json.loads(a)["parameters"]["seed"], 42)
        self.assertEqual(ok("gen", "sphere", "--vertices", 20, "--seed", 9),
                         ok("gen", "sphere", "--vertices", 20, "--seed", 9))

    def test_generated_seed_is_reported(self):
        r = run("gen", "lm", "--n", 8, "--p", 0.3)
        self.assertEqual(r.returncode, 0)
        self.assertRegex(r.stderr, r"seed: \d+")
        seed = r.stderr.split("seed:")[1].split()[0]
        self.assertIn(f"seed={seed}", r.stdout.splitlines()[0])
        self.assertEqual(ok("gen", "lm", "--n", 8, "--p", 0.3, "--seed", seed), r.stdout)

    def test_csv_output(self):
        out = ok("--format", "csv", "experiment", "collapse", "--n", 12, "--c", 1, "--trials", 3, "--seed", 3)
        self.assertTrue(out.splitlines()[0].startswith("n,"))

    def test_exit_codes(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("no-such-command").returncode, 2)
        self.assertEqual(run("inv").returncode, 2)
        self.assertEqual(run("--format", "csv", "inv", self.path("sigma1")).returncode, 2)
        bad = self.dir / "bad.txt"
        bad.write_text("1 2 3\n1 2 2\n")
        r = run("inv", bad)
        self.assertEqual(r.returncode, 1)
        self.assertIn(":2:", r.stderr)
        self.assertEqual(len(r.stderr.strip().splitlines()), 1)
        self.assertEqual(run("inv", self.dir / "missing.txt").returncode, 1)
        self.assertEqual(run("gen", "catalog", "dodecahedron").returncode, 2)
        self.assertEqual(run("config", self.path("sigma3"), "--bound", 17).returncode, 1)


if __name__ == "__main__":
    BINARY = os.path.abspath(sys.argv[1])
    SCHEMAS = Path(sys.argv[2])
    unittest.main(argv=[sys.argv[0], "-v"])
