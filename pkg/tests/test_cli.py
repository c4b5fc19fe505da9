"""
Module for testing the command-line interface
"""

import io
import json
import logging
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from latticeunits.cli import (
    EXIT_DOCUMENT,
    EXIT_HELP_INFEASIBLE,
    EXIT_OK,
    EXIT_UNSAT,
    EXIT_UNSUPPORTED,
    main,
)
from latticeunits.data import psl2_16_bundle_paths, psl2_16_candidate_path
from latticeunits.psl2 import character_table, order_2t_candidate
from latticeunits.sylow import order_p_classes

logger = logging.getLogger(__name__)


def run(argv: list[str]) -> tuple[int, str]:
    """
    Run the command-line interface and capture its output

    :param argv: arguments
    :return: exit code and standard output
    """
    out = io.StringIO()
    with redirect_stdout(out), redirect_stderr(io.StringIO()):
        code = main(argv)
    return code, out.getvalue()


class TestCli(unittest.TestCase):
    """
    Class for testing commands and exit codes
    """

    def test_tableaux(self):
        """
        Test the lr and filtration commands

        :return: None
        """
        logger.info("Testing tableau commands")
        code, out = run(["lr", "--outer", "3,2", "--inner", "1", "--content", "3,1"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("exists: true", out)

        code, out = run(
            ["lr", "--outer", "3,2,1", "--inner", "2,1", "--content", "2,1"]
            + ["--fillings"]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.strip().split("\n")), 3)

        code, out = run(["lr", "--outer", "3,5", "--content", "1"])
        self.assertEqual(code, EXIT_DOCUMENT)

        code, out = run(["filtration", "--total", "3,2", "--factors", "1", "3,1"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("exists: true", out)
        code, out = run(["filtration", "--total", "2", "--factors", "1", "2"])
        self.assertIn("exists: false", out)

        code, _ = run(["--threads", "0", "lr", "--outer", "1", "--content", "1"])
        self.assertEqual(code, EXIT_DOCUMENT)

    def test_decide(self):
        """
        Test deciding the shipped bundles

        :return: None
        """
        logger.info("Testing the decide command")
        code, out = run(["decide", str(psl2_16_bundle_paths[3])])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("overall: SAT", out)

        code, out = run(
            ["--format", "structured", "decide", str(psl2_16_bundle_paths[5])]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual({v["status"] for v in json.loads(out)}, {"SAT"})

        code, _ = run(["decide", "missing_bundle.json"])
        self.assertEqual(code, EXIT_DOCUMENT)

        candidate = order_2t_candidate(19, 5).model_dump()
        with tempfile.TemporaryDirectory() as tmp:
            cases = [(True, EXIT_UNSAT), (False, EXIT_UNSUPPORTED)]
            for skewfield_free, expected in cases:
                path = Path(tmp).joinpath("bundle.json")
                with open(path, "w", encoding="utf8") as f:
                    json.dump(
                        {
                            "p": 5,
                            "table": "psl2:19",
                            "trees": ["psl2:19:5"],
                            "candidate": candidate,
                            "skewfield_free": skewfield_free,
                        },
                        f,
                    )
                code, _ = run(["decide", str(path)])
                self.assertEqual(code, expected)

    def test_config(self):
        """
        Test configuration files with flags taking precedence

        :return: None
        """
        logger.info("Testing configuration files")
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp).joinpath("config.json")
            with open(path, "w", encoding="utf8") as f:
                json.dump({"output_format": "structured", "emit_witness": False}, f)
            code, out = run(
                ["--config", str(path), "decide", str(psl2_16_bundle_paths[3])]
            )
            self.assertEqual(code, EXIT_OK)
            records = json.loads(out)
            self.assertNotIn("witness", records[0])

            code, out = run(
                ["--config", str(path), "--format", "text"]
                + ["decide", str(psl2_16_bundle_paths[3])]
            )
            self.assertIn("overall: SAT", out)

    def test_characters(self):
        """
        Test the mult and help-check commands

        :return: None
        """
        logger.info("Testing character commands")
        code, out = run(
            ["mult", "--table", "psl2:16", "--candidate", str(psl2_16_candidate_path)]
            + ["--character", "chi12"]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("chi12", out)

        code, _ = run(
            ["mult", "--table", "psl2:16", "--candidate", str(psl2_16_candidate_path)]
            + ["--character", "chi99"]
        )
        self.assertEqual(code, EXIT_DOCUMENT)

        code, out = run(
            ["help-check", "--table", "psl2:16"]
            + ["--candidate", str(psl2_16_candidate_path)]
        )
        self.assertEqual(code, EXIT_OK)
        self.assertIn("feasible: true", out)

        first, second = order_p_classes(character_table(11), 5)
        candidate = json.dumps({"order": 5, "pa": {"1": {first: 4, second: -3}}})
        code, out = run(["help-check", "--table", "psl2:11", "--candidate", candidate])
        self.assertEqual(code, EXIT_HELP_INFEASIBLE)
        self.assertIn("feasible: false", out)

        code, _ = run(["help-check", "--table", "psl2:11", "--candidate", "{order"])
        self.assertEqual(code, EXIT_DOCUMENT)

    def test_psl2(self):
        """
        Test the generated data commands

        :return: None
        """
        logger.info("Testing the psl2 command")
        code, out = run(["psl2", "table", "--q", "5"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["order"], 60)

        code, out = run(["psl2", "tree", "--q", "11", "--t", "5"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["p"], 5)

        code, _ = run(["psl2", "tree", "--q", "16"])
        self.assertEqual(code, EXIT_DOCUMENT)
        code, _ = run(["psl2", "tree", "--q", "16", "--t", "2"])
        self.assertEqual(code, EXIT_UNSUPPORTED)

    def test_reproduce(self):
        """
        Test the reproduce command

        :return: None
        """
        logger.info("Testing the reproduce command")
        code, out = run(["reproduce", "psl2-2t", "--q", "19", "--t", "5"])
        self.assertEqual(code, EXIT_OK)
        self.assertNotIn("FAILED", out)
