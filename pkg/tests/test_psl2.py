"""
Module for testing the generated data of PSL(2,q)
"""

import logging
import unittest
from fractions import Fraction

from latticeunits.data import psl2_16_tree_paths
from latticeunits.errors import CharacterTableError, UnsupportedBlockError
from latticeunits.grouprep import help_feasible, validate_orthogonality
from latticeunits.psl2 import (
    brauer_trees,
    burkhardt_exceptional,
    character_id,
    character_table,
    element_2t_exists,
    exceptional_characters,
    exceptional_multiplicity,
    nonprincipal_block_trees,
    order_2t_candidate,
    principal_block_tree,
    psl2_params,
    t_rational_multiplicity,
)
from latticeunits.validate import load_brauer_tree

logger = logging.getLogger(__name__)


class TestPSL2(unittest.TestCase):
    """
    Class for testing PSL(2,q) tables and trees
    """

    def test_params(self):
        """
        Test group parameters

        :return: None
        """
        logger.info("Testing PSL(2,q) parameters")
        params = psl2_params(16)
        self.assertEqual((params.p, params.f), (2, 4))
        self.assertEqual(params.order, 4080)
        self.assertEqual(params.exponent, 4080 // 16 * 2)
        self.assertEqual(psl2_params(19).order, 3420)
        with self.assertRaises(CharacterTableError):
            psl2_params(6)
        with self.assertRaises(CharacterTableError):
            psl2_params(3)

    def test_tables(self):
        """
        Test generated character tables against orthogonality

        :return: None
        """
        logger.info("Testing generated character tables")
        for q in [5, 7, 8, 9, 11, 13, 16, 19, 25, 41]:
            table = character_table(q)
            sizes = validate_orthogonality(table)
            self.assertEqual(sum(sizes.values()), psl2_params(q).order)
            self.assertEqual(len(table.classes), len(table.characters))

        table = character_table(16)
        degrees = [table.degree(c) for c in table.character_ids()]
        self.assertEqual(degrees, [1] + [15] * 8 + [16] + [17] * 7)
        self.assertEqual(character_id(16, "steinberg"), "chi10")
        self.assertEqual(character_id(16, "chi5"), "chi11")
        with self.assertRaises(CharacterTableError):
            character_id(16, "half+1")

    def test_trees(self):
        """
        Test the Brauer trees of PSL(2,16) against the shipped documents

        :return: None
        """
        logger.info("Testing generated Brauer trees")
        self.assertEqual(exceptional_characters(16, 3), ["chi11"])
        self.assertEqual(sorted(exceptional_characters(16, 5)), ["chi12", "chi13"])

        generated = principal_block_tree(16, 3)
        shipped = load_brauer_tree(psl2_16_tree_paths[(3, "principal")])
        self.assertEqual(generated.model_dump(), shipped.model_dump())

        trees = brauer_trees(16, 5)
        self.assertEqual(len(trees), 2)
        shipped = load_brauer_tree(psl2_16_tree_paths[(5, "nonprincipal")])
        self.assertEqual(
            sorted(trees[1].vertex_lookup["exc"].chars),
            sorted(shipped.vertex_lookup["exc"].chars),
        )
        self.assertEqual(
            [e.model_dump() for e in trees[1].edges],
            [e.model_dump() for e in shipped.edges],
        )
        self.assertEqual(len(brauer_trees(16, 3)), 3)
        self.assertEqual(len(nonprincipal_block_trees(16, 3)), 2)
        self.assertEqual(len(nonprincipal_block_trees(16, 5)), 1)
        self.assertEqual(nonprincipal_block_trees(19, 5), [])

        tree = principal_block_tree(11, 5)
        self.assertEqual(tree.ell, 2)
        self.assertEqual(tree.edge_lookup["psi1"].ends, ("chi1", "exc"))
        tree = principal_block_tree(19, 5)
        self.assertEqual(tree.ell, 2)
        self.assertEqual(tree.neighbours("exc"), [character_id(19, "steinberg")])
        self.assertEqual(len(brauer_trees(19, 5)), 1)

        with self.assertRaises(UnsupportedBlockError):
            principal_block_tree(16, 2)
        with self.assertRaises(UnsupportedBlockError):
            principal_block_tree(19, 3)

    def test_order_2t(self):
        """
        Test the order 2t candidates

        :return: None
        """
        logger.info("Testing order 2t candidates")
        self.assertTrue(element_2t_exists(19, 5))
        self.assertFalse(element_2t_exists(11, 5))
        self.assertFalse(element_2t_exists(16, 3))
        with self.assertRaises(UnsupportedBlockError):
            order_2t_candidate(11, 5)

        self.assertIn(burkhardt_exceptional(19, 5), exceptional_characters(19, 5))

        unit = order_2t_candidate(19, 5)
        self.assertEqual(unit.order, 10)
        self.assertEqual(sorted(unit.pa.keys()), [1, 2, 5])
        self.assertFalse(unit.is_trivial_pattern())
        feasible, _ = help_feasible(character_table(19), unit)
        self.assertTrue(feasible)

        self.assertEqual(t_rational_multiplicity(19, 5), 2)
        self.assertEqual(exceptional_multiplicity(19, 5), 3)
        self.assertEqual(t_rational_multiplicity(41, 5), Fraction(4))
        self.assertEqual(exceptional_multiplicity(41, 5), 3)
