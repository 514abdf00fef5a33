import io
import json
import os
import shutil
import tempfile
import unittest

try:
    import mock
except ImportError:
    from unittest import mock

from zeroforcing.baseapi import VERTEX_CAP_ENV_VAR
from zeroforcing.cli import (EXIT_OK, EXIT_INTERNAL, EXIT_HYPOTHESIS,
                             EXIT_CAP, build_parser, main)

from .BaseTest import BaseTest


class TestCli(BaseTest):

    def setUp(self):
        super(TestCli, self).setUp()
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def run_cli(self, *argv):
        out = io.StringIO()
        code = main(list(argv), stdout=out)
        text = out.getvalue()
        return code, json.loads(text) if text else None

    def test_parser(self):
        args = build_parser().parse_args(
            ["zf", "kneser", "-n", "7", "-k", "2", "-t", "0", "--mode",
             "exact"])
        self.assertEqual(args.family, "kneser")
        self.assertEqual(args.t, 0)
        self.assertEqual(args.mode, "exact")

    def test_build(self):
        code, data = self.run_cli("build", "johnson", "-n", "5", "-k", "2",
                                  "-S", "0")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["values"]["v_count"], 10)
        self.assertEqual(data["spec"]["S"], [0])

    def test_zf_exact_and_replay(self):
        path = os.path.join(self.tmp, "zf.json")
        code, data = self.run_cli("--report", path, "zf", "hamming", "-n",
                                  "2", "-q", "3", "--mode", "exact")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["values"]["value"], 5)
        self.assertTrue(os.path.exists(path))

        code, data = self.run_cli("--replay", path)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(all(data["verification"].values()))

    def test_zf_with_set(self):
        code, data = self.run_cli(
            "zf", "johnson", "-n", "4", "-k", "2", "-S", "1", "--set",
            self.data_path("johnson_4_2_white.json"), "--complement")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["values"]["zero_forcing"])

    def test_zf_grundy(self):
        code, data = self.run_cli("zf", "kneser", "-n", "5", "-k", "2", "-t",
                                  "0", "--mode", "grundy", "--variant", "z")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["values"]["zero_forcing_number"], 5)

    def test_construct_and_nullity(self):
        code, data = self.run_cli("construct", "kneser", "-n", "7", "-k",
                                  "2", "-t", "0", "--verify")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["verification"]["kneser_zfs"]["zfs"])

        code, data = self.run_cli("nullity", "-n", "2", "-q", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["values"]["nullity"], 5)

    def test_metrics_from_file(self):
        code, data = self.run_cli("metrics", "--graph",
                                  self.data_path("c4.edges"))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["values"]["diameter"], 2)
        self.assertEqual(data["values"]["girth"], 4)

    def test_sweep(self):
        code, rows = self.run_cli("sweep",
                                  self.data_path("sweep_nullity.json"))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(rows), 4)

    def test_exit_codes(self):
        code, data = self.run_cli("construct", "kneser", "-n", "6", "-k",
                                  "2", "-t", "0")
        self.assertEqual(code, EXIT_HYPOTHESIS)
        self.assertEqual(data, None)

        code, data = self.run_cli("metrics")
        self.assertEqual(code, EXIT_HYPOTHESIS)

        code, data = self.run_cli("--search-cap", "5", "zf", "johnson", "-n",
                                  "5", "-k", "2", "-S", "0", "--mode",
                                  "exact")
        self.assertEqual(code, EXIT_CAP)
        self.assertTrue(data["capped"])

        with mock.patch.dict(os.environ, {VERTEX_CAP_ENV_VAR: "10"}):
            code, data = self.run_cli("build", "hamming", "-n", "3", "-q",
                                      "3")
        self.assertEqual(code, EXIT_CAP)

        bad = os.path.join(self.tmp, "bad.edges")
        with open(bad, "w") as f:
            f.write("0 x\n")
        code, data = self.run_cli("metrics", "--graph", bad)
        self.assertEqual(code, EXIT_INTERNAL)


if __name__ == '__main__':
    unittest.main()
