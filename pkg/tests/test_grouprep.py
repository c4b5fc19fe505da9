"""
Module for testing class data, power maps and eigenvalue multiplicities
"""

import logging
import unittest

from latticeunits.errors import DocumentValidationError
from latticeunits.grouprep import (
    check_candidate,
    galois_character,
    galois_fixes,
    help_feasible,
    help_report,
    is_trivial_pattern,
    multiplicity,
    multiplicity_frame,
    multiplicity_grid,
    power_class,
    trivial_candidate,
    validate_orthogonality,
)
from latticeunits.models import UnitCandidate
from latticeunits.psl2 import character_table

logger = logging.getLogger(__name__)

a5 = character_table(5)


class TestGroupRep(unittest.TestCase):
    """
    Class for testing the HeLP layer on PSL(2,5)
    """

    def test_classes(self):
        """
        Test class sizes and power maps

        :return: None
        """
        logger.info("Testing class data of PSL(2,5)")
        sizes = validate_orthogonality(a5)
        self.assertEqual(sizes, {"1a": 1, "2a": 15, "3a": 20, "5a": 12, "5b": 12})
        self.assertEqual(power_class(a5, "5a", 2), "5b")
        self.assertEqual(power_class(a5, "5a", 4), "5a")
        self.assertEqual(power_class(a5, "5a", 5), "1a")
        self.assertEqual(power_class(a5, "3a", 2), "3a")

    def test_galois(self):
        """
        Test Galois conjugation of characters

        :return: None
        """
        logger.info("Testing Galois conjugate characters")
        self.assertEqual(galois_character(a5, "chi2", 7), "chi3")
        self.assertEqual(galois_character(a5, "chi2", 19), "chi2")
        self.assertTrue(galois_fixes(a5, "chi4", 7))
        self.assertFalse(galois_fixes(a5, "chi2", 7))

    def test_candidates(self):
        """
        Test candidate checks

        :return: None
        """
        logger.info("Testing candidate checks")
        unit = trivial_candidate(a5, "5a")
        self.assertEqual(unit.order, 5)
        self.assertEqual(unit.pa, {1: {"5a": 1}})
        self.assertTrue(is_trivial_pattern(unit))
        check_candidate(a5, unit)

        with self.assertRaises(DocumentValidationError):
            check_candidate(a5, UnitCandidate(order=5, pa={1: {"1a": 1}}))
        with self.assertRaises(DocumentValidationError):
            check_candidate(a5, UnitCandidate(order=5, pa={1: {"3a": 1}}))
        with self.assertRaises(DocumentValidationError):
            check_candidate(a5, UnitCandidate(order=5, pa={1: {"7a": 1}}))
        with self.assertRaises(DocumentValidationError):
            UnitCandidate(order=5, pa={1: {"5a": 2}})
        with self.assertRaises(DocumentValidationError):
            UnitCandidate(order=6, pa={1: {"5a": 1}})

    def test_multiplicities(self):
        """
        Test eigenvalue multiplicities of group elements

        :return: None
        """
        logger.info("Testing multiplicities of group elements")
        unit = trivial_candidate(a5, "5a")
        self.assertEqual(multiplicity_grid(a5, "chi5", unit).as_ints(), (1,) * 5)
        grid = multiplicity_grid(a5, "chi1", unit)
        self.assertEqual(grid.as_ints(), (1, 0, 0, 0, 0))
        self.assertEqual(multiplicity(a5, "chi4", unit, 0), 0)
        self.assertEqual(multiplicity_grid(a5, "chi4", unit).total, 4)

        involution = trivial_candidate(a5, "2a")
        self.assertEqual(multiplicity_grid(a5, "chi5", involution).as_ints(), (3, 2))

        frame = multiplicity_frame(a5, unit)
        self.assertEqual(list(frame.index), a5.character_ids())
        self.assertEqual(list(frame.columns), [0, 1, 2, 3, 4])

        feasible, violations = help_feasible(a5, unit)
        self.assertTrue(feasible)
        self.assertEqual(violations, [])

    def test_help(self):
        """
        Test that HeLP rejects a non-trivial order 5 pattern

        :return: None
        """
        logger.info("Testing HeLP on an infeasible candidate")
        unit = UnitCandidate(order=5, pa={1: {"5a": 2, "5b": -1}})
        self.assertFalse(is_trivial_pattern(unit))
        feasible, violations = help_feasible(a5, unit)
        self.assertFalse(feasible)
        self.assertGreater(len(violations), 0)

        report = help_report(a5, unit)
        self.assertEqual(len(report), 5 * len(a5.characters))
        self.assertFalse(report["nonnegative"].all())
