#!/usr/bin/env python3
"""End-to-end checks of the sfinv command line: exit codes, JSON schema,
determinism, DOT output and file inputs."""

import argparse
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

ARGS = None


def run(*argv):
    return subprocess.run([ARGS.binary, *argv], capture_output=True, text=True, timeout=300)


def run_json(*argv):
    proc = run(*argv)
    if proc.returncode != 0:
        raise AssertionError(f"{argv} exited {proc.returncode}: {proc.stderr}")
    return json.loads(proc.stdout)


def without_timings(value):
    if isinstance(value, dict):
        return {k: without_timings(v) for k, v in value.items() if k != "elapsed_ms"}
    if isinstance(value, list):
        return [without_timings(v) for v in value]
    return value


def data(name):
    return os.path.join(ARGS.data, name)


def corrupt():
    return os.path.join(ARGS.examples, "corrupt_abab.witness")


# One command per record kind, plus a few variants.
SAMPLES = [
    ["words", "reduce", "abBA"],
    ["words", "conjugates", "abc"],
    ["words", "splits", "abc"],
    ["words", "dyck", "aAbB"],
    ["group", "--group", "cyclic", "3", "a", "--word", "aa", "--cycles", "--relator", "aaa"],
    ["group", "--group", "perm", "a:(0 1 2)", "b:(0 1)", "--span", "ab"],
    ["mgx", "enumerate", "--group", "cyclic", "2", "a", "--list"],
    ["mgx", "maxima", "--group", "cyclic", "3", "a", "--point", "a"],
    ["mgx", "f-inverse", "--group", "cyclic", "2", "a"],
    ["msf", "enumerate", "--group", "cyclic", "3", "a"],
    ["msf", "theta", "--group", "cyclic", "3", "a"],
    ["msf", "verify-pre1", "--group", "cyclic", "3", "a"],
    ["msf", "verify-iso", "--group", "perm", "a:(0 1)", "b:(2 3)"],
    ["stephen", "approximate", "--relator", "aa", "--rounds", "1"],
    ["stephen", "right-invertible", "a", "--relator", "abc"],
    ["stephen", "leq", "AC", "b", "--relator", "abc"],
    ["stephen", "equal", "A", "bc", "--relator", "abc"],
    ["pieces", "factorize", "--relator", "abab"],
    ["pieces", "decide", "--relator", "abc"],
    ["pieces", "decide", "--relator", "aba"],
    ["pieces", "linked", "--relator", "abab"],
    ["battery", "--criterion", "1", "--criterion", "3"],
]


class ExitCodes(unittest.TestCase):
    def test_ok(self):
        self.assertEqual(run("words", "normalize", "ab").returncode, 0)

    def test_help(self):
        proc = run("--help")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("pieces", proc.stdout)

    def test_unknown_subcommand(self):
        proc = run("frobnicate")
        self.assertEqual(proc.returncode, 1)
        self.assertIn("unknown subcommand", proc.stderr)

    def test_usage_errors(self):
        for argv in (
            ["words", "reduce", "ab1"],
            ["mgx", "enumerate"],
            ["pieces", "decide", "--relator", "abB"],
            ["pieces", "decide"],
            ["group", "--group", "cyclic", "0", "a"],
            ["stephen", "right-invertible", "a", "--relator", "abc", "--rounds", "-1"],
            ["msf", "enumerate", "--group", "perm", "a:(0 1 2)", "b:(0 1)", "--enum-cap", "4"],
        ):
            with self.subTest(argv=argv):
                proc = run(*argv)
                self.assertEqual(proc.returncode, 1, proc.stderr)
                self.assertTrue(proc.stderr.strip())

    def test_unknown_verdict_exits_zero(self):
        proc = run("stephen", "right-invertible", "b", "--relator", "abc", "--rounds", "1")
        self.assertEqual(proc.returncode, 0)
        self.assertEqual(json.loads(proc.stdout)["verdict"], "unknown")

    def test_corrupted_witness_is_a_soundness_violation(self):
        proc = run("pieces", "decide", "--relator", "abab", "--unchecked-witness", corrupt())
        self.assertEqual(proc.returncode, 2, proc.stderr)
        proc = run("battery", "--criterion", "8", "--unchecked-witness", corrupt())
        self.assertEqual(proc.returncode, 2)
        self.assertTrue(json.loads(proc.stdout)["summary"]["soundness_violation"])

    def test_corrupted_witness_is_rejected_when_checked(self):
        record = run_json("pieces", "decide", "--relator", "abab", "--witness", corrupt())
        self.assertEqual(record["verdict"], "StronglyFInverse")
        self.assertTrue(any("corrupt_abab" in n for n in record["notes"]))

    def test_starved_battery_fails_without_soundness_error(self):
        proc = run("battery", "--criterion", "5", "--rounds", "0")
        self.assertEqual(proc.returncode, 0)
        summary = json.loads(proc.stdout)["summary"]
        self.assertFalse(summary["all_passed"])
        self.assertFalse(summary["soundness_violation"])


class Schema(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        with open(ARGS.schema) as f:
            cls.schema = json.load(f)
        jsonschema.Draft202012Validator.check_schema(cls.schema)

    def test_every_kind_validates(self):
        kinds = set()
        for argv in SAMPLES + [
            ["witness", "check", "--relator", "ab", "--witness", data("bicyclic.witness"), "--builtin"],
            ["witness", "certify", "a", "--relator", "ab", "--witness", data("bicyclic.witness")],
        ]:
            with self.subTest(argv=argv):
                record = run_json(*argv)
                jsonschema.validate(record, self.schema)
                self.assertEqual(record["schema_version"], 1)
                kinds.add(record["kind"])
        self.assertEqual(kinds, set(self.schema["properties"]["kind"]["enum"]))

    def test_schema_rejects_wrong_version(self):
        record = run_json("words", "reduce", "ab")
        record["schema_version"] = 2
        with self.assertRaises(jsonschema.ValidationError):
            jsonschema.validate(record, self.schema)


class Determinism(unittest.TestCase):
    def test_repeated_runs_agree(self):
        for argv in SAMPLES + [["battery", "--criterion", "4", "--criterion", "9", "--seed", "7"]]:
            with self.subTest(argv=argv):
                first = without_timings(run_json(*argv))
                second = without_timings(run_json(*argv))
                self.assertEqual(first, second)

    def test_seed_changes_random_cases_only(self):
        a = run_json("battery", "--criterion", "9", "--seed", "1")
        b = run_json("battery", "--criterion", "9", "--seed", "2")
        self.assertEqual([c["name"] for c in a["cases"]], [c["name"] for c in b["cases"]])
        self.assertTrue(a["summary"]["all_passed"] and b["summary"]["all_passed"])


class Dot(unittest.TestCase):
    def test_cayley_graph(self):
        proc = run("group", "--group", "cyclic", "3", "a", "--format", "dot")
        self.assertEqual(proc.returncode, 0)
        self.assertTrue(proc.stdout.startswith("digraph"))
        self.assertEqual(proc.stdout.count("->"), 3)
        self.assertIn('label="1"', proc.stdout)

    def test_only_span(self):
        proc = run("group", "--group", "cyclic", "3", "a", "--span", "1", "--only-span", "--format", "dot")
        self.assertEqual(proc.stdout.count("->"), 0)
        self.assertEqual(proc.stdout.count("label="), 1)

    def test_stephen_graph(self):
        proc = run("stephen", "approximate", "--relator", "aa", "--rounds", "1", "--format", "dot")
        self.assertTrue(proc.stdout.startswith("digraph"))
        self.assertEqual(proc.stdout.count("->"), 2)

    def test_dot_not_available_for_words(self):
        self.assertEqual(run("words", "reduce", "ab", "--format", "dot").returncode, 1)


class Inputs(unittest.TestCase):
    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "r.json")
            proc = run("pieces", "decide", "--relator", "abab", "--out", path)
            self.assertEqual(proc.returncode, 0)
            self.assertEqual(proc.stdout, "")
            with open(path) as f:
                self.assertEqual(json.load(f)["verdict"], "StronglyFInverse")

    def test_presentation_file(self):
        record = run_json("pieces", "decide", "--presentation", data("abab.pres"))
        self.assertEqual(record["relator"], "abab")
        self.assertEqual(record["pieces"], ["ab", "ab"])

    def test_table_group(self):
        record = run_json("group", "--group", "table", data("klein.table"))
        self.assertEqual(record["order"], 4)
        self.assertEqual(record["generators"], "ab")

    def test_witness_check(self):
        record = run_json("witness", "check", "--relator", "ab", "--witness", data("bicyclic.witness"))
        self.assertEqual(len(record["witnesses"]), 1)
        self.assertTrue(record["witnesses"][0]["valid"])
        bad = run_json("witness", "check", "--relator", "abab", "--witness", corrupt())
        self.assertFalse(bad["witnesses"][0]["valid"])

    def test_table_format(self):
        proc = run("pieces", "decide", "--relator", "abab", "--format", "table")
        self.assertEqual(proc.returncode, 0)
        self.assertIn("StronglyFInverse", proc.stdout)
        self.assertIn("pieces: ab ab", proc.stdout)


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--schema", required=True)
    parser.add_argument("--data", required=True)
    parser.add_argument("--examples", required=True)
    ARGS, rest = parser.parse_known_args()
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)
