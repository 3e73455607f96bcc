"""
test_harness.py
~~~~~~~~~~~~~~~

This test suite checks the sweep configuration, the JSON reports and the
virasoro-paths command of virasoro_paths.

Created by the virasoro-paths developers on 2026-10-17

:copyright: (c) 2026 by the virasoro-paths developers
:license: GPLv3, see LICENSE for more details.
"""

import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path
from unittest import mock

import virasoro_paths as vp
from virasoro_paths.harness import EXIT_FAILURE, EXIT_PASS, EXIT_USAGE, collect_tasks, main

"""
Constants
"""
LEE_YANG_1_2 = [1, 1, 1, 1, 2, 2, 3]
ISING_SIGMA = [1, 1, 1, 2, 2, 3, 4]
STAIRCASE_DUMP = "0 0 12/8 1 2 3\n"
HALF_DUMP = "0 0 6/8 1 3/2 2\n"
DEMO = "SNS -> SNS -> SNSNN -> SNNNS\nNNN -> NSNSN -> NSNSNNN -> NSNNNSN\n"


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        status = main(argv)
    return status, out.getvalue()


class SweepConfigTestCase(unittest.TestCase):
    def test_harness_config_defaults(self):
        config = vp.SweepConfig()
        self.assertEqual(config.suite, "all")
        self.assertEqual(config.order, 20)
        self.assertEqual(config.jobs, 1)
        self.assertEqual(config.length(12), 12)
        self.assertEqual(config.p_range((3, 4)), (3, 4))

    def test_harness_config_ranges(self):
        config = vp.SweepConfig(p=[3], a=[1, 2], lmax=4)
        self.assertEqual(config.p, (3,))
        self.assertEqual(config.length(12), 4)
        self.assertTrue(config.accepts(a=2, b=5))
        self.assertFalse(config.accepts(a=3))
        self.assertFalse(config.empty)
        self.assertTrue(vp.SweepConfig(p=[]).empty)
        self.assertEqual(collect_tasks(vp.SweepConfig(suite="abf", p=[])), [])

    def test_harness_config_validate(self):
        for kwargs in (
            {"suite": "nothing"},
            {"order": -1},
            {"order": 1000},
            {"lmax": -1},
            {"jobs": 0},
            {"p": [0]},
            {"t": ["3/2"]},
            {"e": [2]},
        ):
            with self.assertRaises(vp.InvalidParametersError):
                vp.SweepConfig(**kwargs).validate()


class SweepTestCase(unittest.TestCase):
    def test_harness_sweep_report(self):
        report = vp.run_sweep(vp.SweepConfig(suite="trinomial", lmax=2, order=4))
        self.assertEqual(report.status, EXIT_PASS)
        self.assertEqual(report.failures, [])
        parsed = json.loads(report.to_json())
        self.assertEqual(len(parsed), len(report.records))
        self.assertEqual(set(parsed[0]), {"identity", "indices", "pass"})

    def test_harness_sweep_deterministic(self):
        serial = vp.run_sweep(vp.SweepConfig(suite="trinomial", lmax=2, order=4, jobs=1)).to_json()
        again = vp.run_sweep(vp.SweepConfig(suite="trinomial", lmax=2, order=4, jobs=1)).to_json()
        parallel = vp.run_sweep(vp.SweepConfig(suite="trinomial", lmax=2, order=4, jobs=2)).to_json()
        self.assertEqual(serial, again)
        self.assertEqual(serial, parallel)

    def test_harness_default_path_sweeps_pass(self):
        for suite in ("abf", "restricted"):
            report = vp.run_sweep(vp.SweepConfig(suite=suite))
            self.assertTrue(report.records)
            self.assertEqual(len(report.failures), 0, suite)
            self.assertEqual(report.status, EXIT_PASS)

    def test_harness_main_sweep(self):
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "report.json"
            status, _ = _run(["sweep", "--suite", "abf", "--p", "3", "--lmax", "3", "--out", str(out)])
            self.assertEqual(status, EXIT_PASS)
            records = json.loads(out.read_text())
        self.assertTrue(records)
        self.assertTrue(all(record["pass"] for record in records))

    def test_harness_main_empty_range(self):
        status, text = _run(["sweep", "--suite", "abf", "--p"])
        self.assertEqual(status, EXIT_PASS)
        self.assertEqual(json.loads(text), [])

    def test_harness_main_usage_errors(self):
        self.assertEqual(_run(["sweep", "--order", "1000"])[0], EXIT_USAGE)
        self.assertEqual(_run(["sweep", "--suite", "nothing"])[0], EXIT_USAGE)
        self.assertEqual(_run(["unknown"])[0], EXIT_USAGE)
        self.assertEqual(_run(["path-dump", "--a", "1", "--b", "1", "--length", "2"])[0], EXIT_USAGE)

    def test_harness_main_error_during_checks(self):
        error = vp.InconsistentSystemError("m_last is not zero")
        with mock.patch("virasoro_paths.harness.run_task", side_effect=error):
            status, text = _run(["sweep", "--suite", "trinomial", "--lmax", "2", "--order", "4", "--jobs", "1"])
        self.assertEqual(status, EXIT_FAILURE)
        self.assertEqual(text, "")


class CommandTestCase(unittest.TestCase):
    def test_harness_character_csv(self):
        status, text = _run(["character", "--p", "2", "--p-prime", "5", "--r", "1", "--s", "2", "--order", "6"])
        self.assertEqual(status, EXIT_PASS)
        lines = text.splitlines()
        self.assertEqual(lines[0], "power,rocha_caridi")
        self.assertEqual(len(lines), 8)
        self.assertEqual([int(line.split(",")[1]) for line in lines[1:]], LEE_YANG_1_2)

    def test_harness_character_fermionic_json(self):
        argv = ["character", "--p", "3", "--r", "1", "--s", "2", "--fermionic", "--order", "6", "--format", "json"]
        status, text = _run(argv)
        self.assertEqual(status, EXIT_PASS)
        table = json.loads(text)
        self.assertEqual(table["order"], 6)
        self.assertEqual(table["columns"], {"rocha_caridi": ISING_SIGMA, "row_c": ISING_SIGMA, "row_d": ISING_SIGMA})

    def test_harness_character_half_lattice(self):
        models = [vp.CharacterParams.half_lattice(2, 1, 1)]
        self.assertEqual(vp.emit_character(models, 6).splitlines()[-1], "6,3")
        status, text = _run(["character", "--t", "2", "--r", "1", "--a", "1", "--fermionic", "--order", "6"])
        self.assertEqual(status, EXIT_PASS)
        self.assertEqual(text.splitlines()[0], "power,rocha_caridi,row_c")

    def test_harness_character_errors(self):
        self.assertEqual(_run(["character", "--p", "3", "--r", "1"])[0], EXIT_USAGE)
        self.assertEqual(_run(["character", "--p", "3", "--t", "2", "--r", "1"])[0], EXIT_USAGE)
        with self.assertRaises(vp.InvalidParametersError):
            vp.emit_character(vp.CharacterParams(3, 4, 1, 1), 4, fmt="xml")

    def test_harness_path_dump(self):
        status, text = _run(["path-dump", "--p", "3", "--a", "1", "--b", "3", "--length", "2"])
        self.assertEqual(status, EXIT_PASS)
        self.assertEqual(text, STAIRCASE_DUMP)
        status, text = _run(["path-dump", "--family", "half", "--t", "2", "--a", "1", "--b", "2", "--length", "1"])
        self.assertEqual(status, EXIT_PASS)
        self.assertEqual(text, HALF_DUMP)

    def test_harness_transform_demo(self):
        argv = ["transform-demo", "--p", "3", "--a", "2", "--b", "2", "--length", "2", "--n", "1", "--partition", "1"]
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "demo.txt"
            status, _ = _run(argv + ["--out", str(out)])
            self.assertEqual(status, EXIT_PASS)
            self.assertEqual(out.read_text(), DEMO)
