"""
Module for testing gamma bounds
"""

import logging
import unittest

from latticeunits.bounds import (
    Bound,
    eigen_bounds,
    exceptional_bounds,
    gamma_bounds,
    satisfies,
    subtree_bounds,
)
from latticeunits.brauer import signs_from_convention
from latticeunits.data import psl2_16_tree_paths
from latticeunits.validate import load_brauer_tree

logger = logging.getLogger(__name__)

line_tree = load_brauer_tree(psl2_16_tree_paths[(3, "principal")])
exceptional_tree = load_brauer_tree(psl2_16_tree_paths[(5, "principal")])


def _triples(bounds: list[Bound]) -> list[tuple[int, str, int]]:
    return [(b.index, b.relation, b.value) for b in bounds]


class TestBounds(unittest.TestCase):
    """
    Class for testing the bounds on gamma
    """

    def test_bound(self):
        """
        Test evaluating a single bound

        :return: None
        """
        logger.info("Testing single bounds")
        bound = Bound(index=2, relation="<=", value=1, source="test")
        self.assertTrue(bound.holds((3, 1)))
        self.assertFalse(bound.holds((3, 2)))
        self.assertEqual(str(bound), "gamma_2 <= 1 (test)")
        lower = Bound(index=1, relation=">=", value=2, source="test")
        self.assertTrue(satisfies((3, 1), [bound, lower]))
        self.assertFalse(satisfies((4,), [bound, lower]))
        self.assertTrue(satisfies((), []))

    def test_eigen(self):
        """
        Test bounds from the eigenvalue layers

        :return: None
        """
        logger.info("Testing eigenvalue bounds")
        self.assertEqual(
            _triples(eigen_bounds(4, 5, [1])), [(4, ">=", 1), (2, "<=", 1)]
        )
        self.assertEqual(
            _triples(eigen_bounds(2, 5, [1, 3])), [(2, ">=", 3), (4, "<=", 1)]
        )
        self.assertEqual(eigen_bounds(2, 5, []), [])
        bounds = eigen_bounds(4, 5, [1])
        self.assertTrue(satisfies((5,), bounds))
        self.assertTrue(satisfies((4, 1), bounds))
        self.assertFalse(satisfies((3, 2), bounds))

    def test_subtree(self):
        """
        Test bounds on an edge module from the subtrees on both sides

        :return: None
        """
        logger.info("Testing subtree bounds")
        signs = signs_from_convention(line_tree)
        mu_one = {"chi1": 1, "chi11": 2, "chi10": 1}
        mu_zeta = {"chi1": 0, "chi11": 5, "chi10": 5}

        near = subtree_bounds(line_tree, signs, "psi1", "chi1", mu_one, mu_zeta)
        self.assertEqual(_triples(near), [(2, "<=", 0), (1, "<=", 1)])
        far = subtree_bounds(line_tree, signs, "psi1", "chi11", mu_one, mu_zeta)
        self.assertEqual(_triples(far), [(1, ">=", 0), (2, ">=", -1)])

        bounds = gamma_bounds(line_tree, signs, mu_one, mu_zeta)
        self.assertEqual(sorted(bounds.edges), ["psi1", "psi10"])
        self.assertEqual(bounds.exceptional, [])
        allowed = [
            x for x in [(), (1,), (1, 1), (2,)] if satisfies(x, bounds.edges["psi1"])
        ]
        self.assertEqual(allowed, [(), (1,)])

    def test_exceptional(self):
        """
        Test bounds on the module of an exceptional character

        :return: None
        """
        logger.info("Testing exceptional bounds")
        signs = signs_from_convention(exceptional_tree)
        mu_one = {"chi1": 1, "chi10": 4}
        mu_zeta = {"chi1": 0, "chi10": 3}
        bounds = exceptional_bounds(exceptional_tree, signs, mu_one, mu_zeta)
        self.assertEqual(
            _triples(bounds), [(3, "<=", 3), (2, "<=", 4), (2, "<=", 7)]
        )
        self.assertTrue(satisfies((5, 2), bounds))
        self.assertEqual(exceptional_bounds(line_tree, {}, {}, {}), [])
        self.assertEqual(
            subtree_bounds(
                exceptional_tree, signs, "psi1", "exc", mu_one, mu_zeta
            ),
            [],
        )

    def test_components(self):
        """
        Test splitting a tree at an edge

        :return: None
        """
        logger.info("Testing tree components")
        self.assertEqual(line_tree.component_without_edge("psi1", "chi1"), ["chi1"])
        self.assertEqual(
            line_tree.component_without_edge("psi1", "chi11"), ["chi11", "chi10"]
        )
        self.assertEqual(
            line_tree.component_without_edge("psi10", "chi1"), ["chi1", "chi11"]
        )
