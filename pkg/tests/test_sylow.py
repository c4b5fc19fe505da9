"""
Module for testing units of order p with a Sylow subgroup of order p
"""

import logging
import unittest

from latticeunits.decider import decide
from latticeunits.errors import ClosedFormMismatchError, UnsupportedBlockError
from latticeunits.models import BrauerTree
from latticeunits.psl2 import character_id, character_table, principal_block_tree
from latticeunits.sylow import (
    build_sylow_p_instance,
    closed_form_grids,
    feasible_pa_vectors,
    order_p_classes,
    pa_vectors,
    sylow_gamma_targets,
    sylow_setting,
    unit_of_order_p,
)
from latticeunits.tableaux import gamma

logger = logging.getLogger(__name__)

table = character_table(11)
tree = principal_block_tree(11, 5)
theta = tree.vertex_lookup[tree.exceptional.vertex].chars[0]
classes = order_p_classes(table, 5)


class TestSylow(unittest.TestCase):
    """
    Class for testing the closed forms for units of order p
    """

    def test_setting(self):
        """
        Test the data of the principal 5-block of PSL(2, 11)

        :return: None
        """
        logger.info("Testing the Sylow setting")
        self.assertEqual(len(classes), 2)
        setting = sylow_setting(table, tree)
        self.assertEqual((setting.p, setting.m, setting.e), (5, 2, 2))
        self.assertEqual(setting.theta_sign, -1)
        self.assertEqual(setting.theta_degree, 12)
        self.assertEqual(setting.min_g, 2)
        self.assertEqual(
            sylow_gamma_targets(table, tree), {"index": 2, "value": 3}
        )
        with self.assertRaises(UnsupportedBlockError):
            sylow_setting(character_table(16), principal_block_tree(16, 3))

    def test_grids(self):
        """
        Test the closed-form multiplicities

        :return: None
        """
        logger.info("Testing closed-form multiplicities")
        pa = {classes[0]: 1, classes[1]: 0}
        grids = closed_form_grids(table, tree, pa)
        self.assertEqual(grids["chi1"].as_ints(), (1, 0, 0, 0, 0))
        steinberg = character_id(11, "steinberg")
        self.assertEqual(grids[steinberg].as_ints(), (3, 2, 2, 2, 2))
        values = grids[theta].as_ints()
        self.assertEqual(values[0], 2)
        self.assertEqual(sorted(values[1:]), [2, 2, 3, 3])

    def test_vectors(self):
        """
        Test enumerating partial augmentation vectors

        :return: None
        """
        logger.info("Testing partial augmentation vectors")
        self.assertEqual(
            list(pa_vectors(["x", "y"], 1)), [{"x": 0, "y": 1}, {"x": 1, "y": 0}]
        )
        self.assertEqual(len(list(pa_vectors(["x", "y"], 2))), 4)
        unit = unit_of_order_p(5, {"x": 1, "y": 0})
        self.assertEqual(unit.pa, {1: {"x": 1}})
        feasible = feasible_pa_vectors(table, 5, bound=1)
        self.assertEqual(
            feasible, [{classes[0]: 0, classes[1]: 1}, {classes[0]: 1, classes[1]: 0}]
        )

    def test_group_element(self):
        """
        Test that group elements exist locally with the forced gamma

        :return: None
        """
        logger.info("Testing group elements of order p")
        target = sylow_gamma_targets(table, tree)
        for pa in feasible_pa_vectors(table, 5, bound=1):
            verdict = decide(build_sylow_p_instance(table, tree, pa))
            self.assertEqual(verdict.status, "SAT")
            module = tuple(verdict.witness[f"M|{theta}|0"])
            self.assertEqual(gamma(module, target["index"]), target["value"])

    def test_mismatch(self):
        """
        Test that a tree whose signs disagree with the character values is
        rejected by the closed forms

        :return: None
        """
        logger.info("Testing closed-form mismatches")
        flipped = BrauerTree.model_validate(
            {
                **tree.model_dump(),
                "positive_vertex": tree.neighbours(tree.positive_vertex)[0],
                "signs": None,
            }
        )
        pa = {classes[0]: 1, classes[1]: 0}
        with self.assertRaises(ClosedFormMismatchError):
            closed_form_grids(table, flipped, pa)
        with self.assertRaises(ClosedFormMismatchError):
            build_sylow_p_instance(table, flipped, pa)
