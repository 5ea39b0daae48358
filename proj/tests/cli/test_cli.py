"""End-to-end checks of the mzeta command-line tool.

Usage: test_cli.py MZETA_BINARY REPORT_SCHEMA
"""

import csv
import io
import json
import subprocess
import sys
import tempfile
import unittest
from pathlib import Path

import jsonschema

BIN = ""
SCHEMA = ""


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)


class Compute(unittest.TestCase):
    def test_exact(self):
        r = run("compute", "bernoulli", "--n", "12")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "-691/2730")

    def test_numeric_has_tolerance(self):
        r = run("compute", "hurwitz", "--s", "2", "--x", "1")
        self.assertEqual(r.returncode, 0, r.stderr)
        value, tol = r.stdout.split()
        self.assertAlmostEqual(float(value), 1.6449340668482264, places=14)
        self.assertTrue(tol.startswith("tol="))

    def test_pole_exits_one(self):
        r = run("compute", "hurwitz", "--s", "1", "--x", "1")
        self.assertEqual(r.returncode, 1)
        self.assertTrue(r.stderr.startswith("pole:"))

    def test_usage_errors_exit_two(self):
        self.assertEqual(run("compute", "hurwitz", "--s", "2").returncode, 2)
        self.assertEqual(run("compute", "nonsense").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)


class Verify(unittest.TestCase):
    def test_plain_summary(self):
        r = run("verify", "--identity", "I-ORTH")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.strip(), "PASS 961 / FAIL 0 / TOTAL 961")

    def test_json_matches_schema(self):
        schema = json.loads(Path(SCHEMA).read_text())
        for ident in ("I-ORTH", "I-T1", "I-T2"):
            r = run("verify", "--identity", ident, "--format", "json")
            self.assertEqual(r.returncode, 0, r.stderr)
            jsonschema.validate(json.loads(r.stdout), schema)

    def test_csv_columns(self):
        r = run("verify", "--identity", "I-E24", "--format", "csv")
        rows = list(csv.reader(io.StringIO(r.stdout)))
        self.assertEqual(rows[0], "id,variant,params,lhs,rhs,absErr,relErr,tol,pass,elapsedMs".split(","))
        self.assertTrue(all(len(row) == 10 for row in rows))

    def test_no_timing_is_reproducible(self):
        args = ("verify", "--identity", "I-C1", "--identity", "I-T5", "--format", "json", "--no-timing")
        first, second = run(*args), run(*args)
        self.assertEqual(first.stdout, second.stdout)
        self.assertTrue(all(r["elapsedMs"] == 0 for r in json.loads(first.stdout)))

    def test_output_file(self):
        with tempfile.TemporaryDirectory() as d:
            out = Path(d) / "r.csv"
            r = run("verify", "--identity", "I-L11", "--format", "csv", "-o", str(out))
            self.assertEqual(r.returncode, 0, r.stderr)
            self.assertTrue(out.read_text().startswith("id,variant"))
            self.assertTrue(r.stdout.startswith("PASS "))

    def test_manifest_violation_exits_one(self):
        with tempfile.TemporaryDirectory() as d:
            manifest = Path(d) / "m.json"
            manifest.write_text('{"expectations":[]}')
            r = run("verify", "--identity", "I-T2", "--manifest", str(manifest))
            self.assertEqual(r.returncode, 1)
            self.assertIn("I-T2", r.stderr)

    def test_tol_override(self):
        r = run("verify", "--identity", "I-C1", "--range", "n=2:2", "--tol", "3", "--format", "json")
        self.assertTrue(all(rep["pass"] for rep in json.loads(r.stdout)))

    def test_unknown_identity_exits_two(self):
        self.assertEqual(run("verify", "--identity", "I-NOPE").returncode, 2)
        self.assertEqual(run("verify", "--identity", "I-T1", "--range", "m:3").returncode, 2)
        self.assertEqual(run("verify", "--identity", "I-T1", "--range", "m=a:b").returncode, 2)
        self.assertEqual(run("verify", "--identity", "I-T1", "--s", "1+").returncode, 2)

    def test_single_value_range(self):
        r = run("verify", "--identity", "I-T1", "--range", "m=3", "--format", "json")
        self.assertEqual({rep["params"]["m"] for rep in json.loads(r.stdout)}, {"3"})

    def test_all_matches_builtin_manifest(self):
        r = run("verify", "--all")
        self.assertEqual(r.returncode, 0, r.stderr)


class Table(unittest.TestCase):
    def test_stirling2(self):
        r = run("table", "--kind", "stirling2", "--max-n", "4")
        self.assertEqual(r.returncode, 0, r.stderr)
        self.assertEqual(r.stdout.splitlines()[-1], "4,0,1,7,6,1")

    def test_norlund(self):
        r = run("table", "--kind", "norlund", "--max-n", "2", "--order", "2")
        self.assertEqual(r.stdout.splitlines(), ["n,B_n^(2)", "0,1", "1,-1", "2,5/6"])

    def test_bad_kind(self):
        self.assertEqual(run("table", "--kind", "cubes", "--max-n", "3").returncode, 2)


if __name__ == "__main__":
    BIN, SCHEMA = sys.argv[1], sys.argv[2]
    unittest.main(argv=sys.argv[:1], verbosity=2)
