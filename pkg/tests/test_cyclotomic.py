"""
Module for testing exact cyclotomic arithmetic
"""

import logging
import unittest
from fractions import Fraction

from latticeunits.cyclotomic import (
    CycNumber,
    GaloisElement,
    euler_phi,
    exact_rational_sum,
    frobenius_element,
    gauss_sqrt,
    inertia_generator,
    inertia_group,
    local_decomposition_group,
    mobius,
    orbits,
    ramanujan_sum,
    relative_trace,
    trace,
)

logger = logging.getLogger(__name__)


class TestCyclotomic(unittest.TestCase):
    """
    Class for testing cyclotomic numbers
    """

    def test_arithmetic(self):
        """
        Test field operations and equality across orders

        :return: None
        """
        logger.info("Testing cyclotomic arithmetic")
        self.assertEqual(CycNumber.root(3, 1) + CycNumber.root(3, 2), -1)
        self.assertEqual(CycNumber.root(4, 1) * CycNumber.root(4, 1), -1)
        self.assertEqual(CycNumber.root(3, 1), CycNumber.root(6, 2))
        self.assertEqual(CycNumber.root(5, 7), CycNumber.root(5, 2))
        self.assertEqual(1 - CycNumber.root(2, 1), 2)
        self.assertEqual(gauss_sqrt(5) * gauss_sqrt(5), 5)
        self.assertEqual(gauss_sqrt(3) * gauss_sqrt(3), -3)
        self.assertTrue(CycNumber.rational(Fraction(1, 2), 7).is_rational())
        self.assertFalse(CycNumber.root(5, 1).is_rational())
        self.assertEqual(CycNumber.root(5, 1).conjugate(), CycNumber.root(5, 4))
        self.assertAlmostEqual(CycNumber.root(4, 1).to_complex(), 1j)
        with self.assertRaises(ValueError):
            CycNumber.root(5, 1).as_rational()

    def test_descend(self):
        """
        Test expressing numbers in smaller fields

        :return: None
        """
        logger.info("Testing descent between cyclotomic fields")
        value = CycNumber.root(3, 1).lift(15)
        self.assertEqual(value.order, 15)
        self.assertEqual(value.descend(3).coeffs, CycNumber.root(3, 1).coeffs)
        with self.assertRaises(ValueError):
            CycNumber.root(5, 1).descend(3)

    def test_traces(self):
        """
        Test traces and arithmetic functions

        :return: None
        """
        logger.info("Testing traces")
        self.assertEqual(euler_phi(15), 8)
        self.assertEqual(mobius(6), 1)
        self.assertEqual(mobius(4), 0)
        self.assertEqual(ramanujan_sum(5, 1), -1)
        self.assertEqual(ramanujan_sum(5, 0), 4)
        self.assertEqual(ramanujan_sum(15, 5), -4)
        self.assertEqual(ramanujan_sum(15, 5), trace(CycNumber.root(15, 5)))
        self.assertEqual(trace(CycNumber.root(5, 1)), -1)
        self.assertEqual(trace(CycNumber.rational(2), 5), 8)
        self.assertEqual(trace(CycNumber.root(15, 5), 3), -1)
        values = [CycNumber.root(3, k) for k in (1, 2)] + [
            CycNumber.root(5, k) for k in range(1, 5)
        ]
        self.assertEqual(exact_rational_sum(values), -2)

    def test_galois(self):
        """
        Test Galois elements, orbits and local groups

        :return: None
        """
        logger.info("Testing Galois actions")
        element = GaloisElement(5, 2)
        self.assertEqual(element.apply(CycNumber.root(5, 1)), CycNumber.root(5, 2))
        self.assertEqual((element * element).residue, 4)
        with self.assertRaises(ValueError):
            GaloisElement(6, 2)

        subgroup = [GaloisElement(5, 1), GaloisElement(5, 4)]
        self.assertEqual(orbits(subgroup, range(1, 5)), [(1, 4), (2, 3)])
        self.assertEqual(
            relative_trace(CycNumber.root(5, 2), subgroup),
            CycNumber.root(5, 2) + CycNumber.root(5, 3),
        )

        self.assertEqual(len(local_decomposition_group(15, 3)), 8)
        self.assertEqual(
            sorted(g.residue for g in inertia_group(15, 3)), [1, 11]
        )
        self.assertEqual(
            sorted(g.residue for g in local_decomposition_group(15, 2)),
            [1, 2, 4, 8],
        )

        self.assertEqual(inertia_generator(15, 3).residue, 11)
        self.assertEqual(frobenius_element(15, 3).residue, 13)
        self.assertEqual(inertia_generator(15, 2).residue, 1)
        self.assertEqual(frobenius_element(15, 2).residue, 2)
        for order, p in [(15, 3), (15, 2), (15, 5), (63, 7), (7, 7)]:
            generators = [inertia_generator(order, p), frobenius_element(order, p)]
            generated = {GaloisElement(order, 1)}
            frontier = list(generated)
            while frontier:
                element = frontier.pop()
                for generator in generators:
                    image = element * generator
                    if image not in generated:
                        generated.add(image)
                        frontier.append(image)
            self.assertEqual(generated, set(local_decomposition_group(order, p)))
            powers = {GaloisElement(order, 1)}
            image = inertia_generator(order, p)
            while image not in powers:
                powers.add(image)
                image = image * inertia_generator(order, p)
            self.assertEqual(powers, set(inertia_group(order, p)))
