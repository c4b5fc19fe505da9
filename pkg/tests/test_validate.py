"""
Module for testing document validation and loading
"""

import json
import logging
import tempfile
import unittest
from pathlib import Path

from latticeunits.data import psl2_16_bundle_paths, psl2_16_tree_paths
from latticeunits.errors import DocumentValidationError
from latticeunits.validate import (
    build_run_config,
    load_brauer_trees,
    load_character_table,
    load_instance_bundle,
    load_run_config,
    load_unit_candidate,
    validate_unit_candidate_json,
)

logger = logging.getLogger(__name__)


class TestValidate(unittest.TestCase):
    """
    Class for testing input documents
    """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self.tmp.name)

    def tearDown(self):
        self.tmp.cleanup()

    def _write(self, name: str, data) -> Path:
        path = self.dir.joinpath(name)
        with open(path, "w", encoding="utf8") as f:
            if isinstance(data, str):
                f.write(data)
            else:
                json.dump(data, f)
        return path

    def test_generated(self):
        """
        Test generated tables and trees

        :return: None
        """
        logger.info("Testing generated references")
        self.assertEqual(load_character_table("psl2:16").order, 4080)
        self.assertEqual(len(load_brauer_trees("psl2:16:5")), 2)
        with self.assertRaises(DocumentValidationError):
            load_character_table("psl2:16:3")
        with self.assertRaises(DocumentValidationError):
            load_brauer_trees("psl2:16")
        with self.assertRaises(DocumentValidationError):
            load_character_table("psl2:x")

    def test_candidate(self):
        """
        Test unit candidate documents

        :return: None
        """
        logger.info("Testing unit candidates")
        unit = load_unit_candidate({"order": 3, "pa": {"1": {"3a": 1}}})
        self.assertEqual(unit.order, 3)
        self.assertEqual(unit.pa, {1: {"3a": 1}})

        with self.assertRaises(DocumentValidationError):
            validate_unit_candidate_json({"order": 3, "pa": {"x": {"3a": 1}}})
        with self.assertRaises(DocumentValidationError):
            load_unit_candidate({"order": 3, "pa": {"1": {"3a": 1}}, "name": "u"})
        with self.assertRaises(DocumentValidationError):
            load_unit_candidate({"order": 3, "pa": {"1": {"3a": 2}}})
        with self.assertRaises(DocumentValidationError):
            load_unit_candidate(self._write("broken.json", "{not json"))
        with self.assertRaises(DocumentValidationError):
            load_unit_candidate(self.dir.joinpath("missing.json"))

    def test_bundle(self):
        """
        Test instance bundles

        :return: None
        """
        logger.info("Testing instance bundles")
        loaded = load_instance_bundle(psl2_16_bundle_paths[3])
        self.assertEqual(loaded.bundle.p, 3)
        self.assertEqual([t.block for t in loaded.trees], ["B0", "B1"])
        self.assertEqual(loaded.candidate.order, 15)
        self.assertEqual(loaded.table.order, 4080)

        mismatch = self._write(
            "mismatch.json",
            {
                "p": 3,
                "table": "psl2:16",
                "trees": [str(psl2_16_tree_paths[(5, "principal")])],
                "candidate": {"order": 3, "pa": {"1": {"3a": 1}}},
            },
        )
        with self.assertRaises(DocumentValidationError):
            load_instance_bundle(mismatch)

        generated = self._write(
            "generated.json",
            {
                "p": 5,
                "table": "psl2:16",
                "trees": ["psl2:16:5"],
                "candidate": {"order": 5, "pa": {"1": {"5a": 1}}},
            },
        )
        self.assertEqual(len(load_instance_bundle(generated).trees), 2)

        with self.assertRaises(DocumentValidationError):
            load_instance_bundle(self._write("empty.json", {"p": 3}))

    def test_run_config(self):
        """
        Test run configurations

        :return: None
        """
        logger.info("Testing run configurations")
        config = build_run_config({"command": "lr"})
        self.assertTrue(config.prune)
        self.assertEqual(config.threads, 1)
        self.assertEqual(config.output_format, "text")
        self.assertIsNone(config.p)

        config = build_run_config({"command": "decide", "inputs": ["psl2:16"]})
        self.assertEqual(config.inputs, ["psl2:16"])

        for bad in [
            {"command": "lr", "p": 4},
            {"command": "lr", "threads": 0},
            {"command": "lr", "colour": "red"},
            {"command": "decide", "inputs": [str(self.dir.joinpath("none.json"))]},
        ]:
            with self.assertRaises(DocumentValidationError):
                build_run_config(bad)

        path = self._write("config.json", {"prune": False, "threads": 2})
        self.assertEqual(load_run_config(path), {"prune": False, "threads": 2})
        with self.assertRaises(DocumentValidationError):
            load_run_config(self._write("bad.json", {"threads": 0}))
