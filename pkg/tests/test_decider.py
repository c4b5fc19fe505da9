"""
Module for testing the decision engine
"""

import logging
import unittest
from fractions import Fraction

from latticeunits.data import psl2_16_bundle_paths
from latticeunits.decider import (
    Assignment,
    build_instance,
    compute_m_of_chi,
    decide,
    decide_blocks,
    eigen_filtration_exists,
    tree_filtration_exists,
    verify_assignment,
)
from latticeunits.errors import (
    DocumentValidationError,
    HeLPInfeasibleError,
    RepresentativeChoiceError,
    UnsupportedBlockError,
)
from latticeunits.grouprep import (
    MultiplicityGrid,
    multiplicity_grid,
    trivial_candidate,
)
from latticeunits.models import UnitCandidate
from latticeunits.psl2 import (
    character_table,
    g0_class,
    order_2t_candidate,
    principal_block_tree,
)
from latticeunits.reproduce import golden_assignment
from latticeunits.sylow import (
    build_sylow_p_instance,
    feasible_pa_vectors,
    order_p_classes,
)
from latticeunits.tableaux import (
    filtration_exists,
    gamma,
    partitions,
    uniserial_sum,
)
from latticeunits.validate import load_instance_bundle

logger = logging.getLogger(__name__)

FAMILIES = ["dimension", "gamma_bound", "eigen_filtration", "tree_filtration"]


class TestFiltrations(unittest.TestCase):
    """
    Class for testing the local conditions on modules
    """

    def test_character_data(self):
        """
        Test relative degrees over the unramified extension

        :return: None
        """
        logger.info("Testing relative degrees")
        table = character_table(16)
        data = compute_m_of_chi(table, "chi12", 5)
        self.assertEqual((data.m, data.e), (2, 2))
        self.assertEqual(data.orbits, ((1, 4), (2, 3)))
        self.assertEqual(data.representatives, (1, 2))

        steinberg = compute_m_of_chi(table, "chi10", 5)
        self.assertEqual((steinberg.m, steinberg.e), (4, 1))
        self.assertEqual(compute_m_of_chi(table, "chi1", 3).m, 2)

        with self.assertRaises(UnsupportedBlockError):
            compute_m_of_chi(table, "chi12", 7)
        with self.assertRaises(UnsupportedBlockError):
            compute_m_of_chi(table, "chi12", 2)

    def test_eigen_filtration(self):
        """
        Test filtrations by the eigenvalue layers

        :return: None
        """
        logger.info("Testing eigenvalue filtrations")
        self.assertTrue(eigen_filtration_exists((5,), 1, [1], 4, 5))
        self.assertTrue(eigen_filtration_exists((4, 1), 1, [1], 4, 5))
        self.assertFalse(eigen_filtration_exists((3, 2), 1, [1], 4, 5))
        self.assertFalse(eigen_filtration_exists((6,), 2, [1], 4, 5))
        self.assertFalse(eigen_filtration_exists((4,), 1, [1], 4, 5))

    def test_rational_layers(self):
        """
        Test that with a single layer of width p-1 the filtration exists
        exactly when gamma_2 and gamma_(p-1) both equal its multiplicity

        :return: None
        """
        logger.info("Testing single-layer eigenvalue filtrations")
        for p in [5, 7]:
            for n in range(11):
                for module in partitions(n, max_part=p):
                    for mu in range(n // (p - 1) + 1):
                        mu0 = n - (p - 1) * mu
                        expected = gamma(module, 2) == mu and gamma(module, p - 1) == mu
                        self.assertEqual(
                            eigen_filtration_exists(module, mu0, [mu], p - 1, p),
                            expected,
                        )
                        factors = [uniserial_sum(1, mu0), uniserial_sum(p - 1, mu)]
                        self.assertEqual(filtration_exists(module, factors), expected)

    def test_tree_filtration(self):
        """
        Test filtrations of vertex modules by edge modules

        :return: None
        """
        logger.info("Testing tree filtrations")
        self.assertTrue(tree_filtration_exists((3, 2), [(1,), (3, 1)]))
        self.assertTrue(tree_filtration_exists((5, 2), [(1,), (5, 1)]))
        self.assertFalse(tree_filtration_exists((2,), [(1,), (2,)]))


class TestDecider(unittest.TestCase):
    """
    Class for testing instances and verdicts
    """

    def test_instance(self):
        """
        Test the data derived for an instance

        :return: None
        """
        logger.info("Testing instance construction")
        loaded = load_instance_bundle(psl2_16_bundle_paths[3])
        instance = build_instance(loaded.table, loaded.trees[0], unit=loaded.candidate)
        self.assertEqual((instance.p, instance.r, instance.n), (3, 5, 15))
        self.assertEqual(instance.block, "B0")
        self.assertEqual(instance.exponent(1, 0), 6)
        self.assertEqual(instance.exponent(0, 1), 10)
        self.assertEqual(instance.dimension("chi1", 0), 1)
        self.assertEqual(instance.dimension("chi10", 0), 4)
        self.assertEqual(
            sum(instance.dimension("chi10", j) for j in range(5)), 16
        )

    def test_worked_example(self):
        """
        Test the order 15 unit of PSL(2, 16) at both primes

        :return: None
        """
        logger.info("Testing the PSL(2, 16) example")
        for p, path in sorted(psl2_16_bundle_paths.items()):
            loaded = load_instance_bundle(path)
            verdicts = decide_blocks(loaded.table, loaded.trees, loaded.candidate)
            self.assertEqual([v.status for v in verdicts], ["SAT"] * len(verdicts))
            golden = golden_assignment(p)
            for tree, verdict in zip(loaded.trees, verdicts):
                self.assertEqual(verdict.p, p)
                self.assertEqual(verdict.block, tree.block)
                instance = build_instance(loaded.table, tree, unit=loaded.candidate)
                witness = Assignment.from_witness(verdict.witness)
                self.assertEqual(verify_assignment(instance, witness), [])
                self.assertEqual(verify_assignment(instance, golden), [])
            if p == 3:
                self.assertEqual(verdicts[0].witness["M|chi10|0"], [3, 1])

    def test_rejected_assignment(self):
        """
        Test that a broken assignment is reported

        :return: None
        """
        logger.info("Testing rejected assignments")
        loaded = load_instance_bundle(psl2_16_bundle_paths[3])
        instance = build_instance(loaded.table, loaded.trees[0], unit=loaded.candidate)
        golden = golden_assignment(3)
        broken = Assignment(modules=dict(golden.modules), edges=dict(golden.edges))
        broken.modules[("chi10", 0)] = (2, 2)
        self.assertGreater(len(verify_assignment(instance, broken)), 0)

        missing = Assignment(modules=dict(golden.modules), edges=dict(golden.edges))
        del missing.modules[("chi11", 0)]
        self.assertGreater(len(verify_assignment(instance, missing)), 0)

    def test_witness_form(self):
        """
        Test the partition-array form of assignments

        :return: None
        """
        logger.info("Testing witness keys")
        assignment = Assignment.from_witness(
            {"M|chi1|0": [1], "S|psi1|0": [1], "M|chi1|1": []}
        )
        self.assertEqual(assignment.modules[("chi1", 0)], (1,))
        self.assertEqual(assignment.modules[("chi1", 1)], ())
        self.assertEqual(assignment.edges[("psi1", 0)], (1,))
        self.assertEqual(
            assignment.witness(),
            {"M|chi1|0": [1], "M|chi1|1": [], "S|psi1|0": [1]},
        )

    def test_witness_keys(self):
        """
        Test that malformed witness keys are rejected

        :return: None
        """
        logger.info("Testing malformed witness keys")
        for key in ["X|chi1|0", "M|chi1|0|1", "M|chi1|a", "M|chi1", "S|psi1|-1"]:
            with self.assertRaises(DocumentValidationError):
                Assignment.from_witness({key: [1]})

    def test_representatives(self):
        """
        Test that multiplicities which differ on an orbit of p-th roots of unity
        are rejected

        :return: None
        """
        logger.info("Testing orbit representatives")
        loaded = load_instance_bundle(psl2_16_bundle_paths[3])
        tree = loaded.trees[0]
        grids = {
            c: multiplicity_grid(loaded.table, c, loaded.candidate)
            for c in tree.characters()
        }
        build_instance(loaded.table, tree, grids=grids)

        values = [Fraction(0)] * 15
        # zeta_15^10 is xi^0 * zeta_3, while zeta_15^5 is xi^0 * zeta_3^2
        values[10] = Fraction(1)
        grids["chi1"] = MultiplicityGrid(
            character="chi1", order=15, values=tuple(values)
        )
        with self.assertRaises(RepresentativeChoiceError):
            build_instance(loaded.table, tree, grids=grids)

    def test_modes(self):
        """
        Test that the verdict does not depend on pruning or threads, and the
        witness does not depend on threads, for every shipped instance

        :return: None
        """
        logger.info("Testing search modes")
        instances = []
        for path in psl2_16_bundle_paths.values():
            loaded = load_instance_bundle(path)
            for tree in loaded.trees:
                instances.append(
                    build_instance(loaded.table, tree, unit=loaded.candidate)
                )
        for q, t in [(19, 5), (41, 5)]:
            table = character_table(q)
            tree = principal_block_tree(q, t)
            for unit in [
                order_2t_candidate(q, t),
                trivial_candidate(table, g0_class(q, t)),
            ]:
                instances.append(build_instance(table, tree, unit=unit))
        for q, p in [(11, 5), (13, 7)]:
            table = character_table(q)
            tree = principal_block_tree(q, p)
            for pa in feasible_pa_vectors(table, p, bound=2):
                instances.append(build_sylow_p_instance(table, tree, pa))

        statuses = set()
        for instance in instances:
            single = decide(instance, prune=True, threads=1)
            threaded = decide(instance, prune=True, threads=2)
            unpruned = decide(instance, prune=False, threads=1)
            statuses.add(single.status)
            self.assertEqual(threaded.status, single.status)
            self.assertEqual(threaded.witness, single.witness)
            self.assertEqual(unpruned.status, single.status)
            if unpruned.sat:
                self.assertEqual(
                    verify_assignment(
                        instance, Assignment.from_witness(unpruned.witness)
                    ),
                    [],
                )
        self.assertEqual(statuses, {"SAT", "UNSAT"})

    def test_order_2t(self):
        """
        Test units of order 10 in PSL(2, 19)

        :return: None
        """
        logger.info("Testing units of order 2t")
        table = character_table(19)
        tree = principal_block_tree(19, 5)
        verdict = decide(build_instance(table, tree, unit=order_2t_candidate(19, 5)))
        self.assertEqual(verdict.status, "UNSAT")
        self.assertFalse(verdict.sat)
        self.assertIsNone(verdict.witness)
        self.assertIn(verdict.failing_family, FAMILIES)

        element = trivial_candidate(table, g0_class(19, 5))
        for prune in [True, False]:
            verdict = decide(build_instance(table, tree, unit=element), prune=prune)
            self.assertEqual(verdict.status, "SAT")

    def test_errors(self):
        """
        Test rejected instances

        :return: None
        """
        logger.info("Testing rejected instances")
        loaded = load_instance_bundle(psl2_16_bundle_paths[3])
        tree = loaded.trees[0]
        with self.assertRaises(UnsupportedBlockError):
            build_instance(
                loaded.table, tree, unit=loaded.candidate, skewfield_free=False
            )
        with self.assertRaises(UnsupportedBlockError):
            decide_blocks(
                loaded.table, [tree], loaded.candidate, skewfield_free=False
            )
        with self.assertRaises(DocumentValidationError):
            build_instance(loaded.table, tree)
        with self.assertRaises(DocumentValidationError):
            build_instance(loaded.table, tree, grids={})
        with self.assertRaises(UnsupportedBlockError):
            build_instance(
                loaded.table, tree, unit=trivial_candidate(loaded.table, "5a")
            )

        table = character_table(11)
        first, second = order_p_classes(table, 5)
        unit = UnitCandidate(order=5, pa={1: {first: 4, second: -3}})
        with self.assertRaises(HeLPInfeasibleError):
            build_instance(table, principal_block_tree(11, 5), unit=unit)
