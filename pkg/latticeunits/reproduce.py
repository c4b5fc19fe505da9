"""
Module reproducing the worked examples: the order 15 unit of PSL(2, 16), units
of order 2t in PSL(2, q) and units of order p for Sylow subgroups of order p.

Every suite returns a dataframe with one row per check.
"""

import json
import logging
from typing import Optional

import pandas as pd

from latticeunits.data import psl2_16_bundle_paths, psl2_16_witness_paths
from latticeunits.decider import (
    Assignment,
    build_instance,
    compute_m_of_chi,
    decide,
    decide_blocks,
    verify_assignment,
)
from latticeunits.grouprep import help_feasible, multiplicity_grid, trivial_candidate
from latticeunits.psl2 import (
    burkhardt_exceptional,
    character_id,
    character_table,
    exceptional_multiplicity,
    g0_class,
    order_2t_candidate,
    principal_block_tree,
    t_rational_multiplicity,
)
from latticeunits.reports import save_frame
from latticeunits.sylow import (
    build_sylow_p_instance,
    feasible_pa_vectors,
    sylow_gamma_targets,
)
from latticeunits.tableaux import gamma
from latticeunits.validate import load_instance_bundle

logger = logging.getLogger(__name__)

COLUMNS = ["check", "expected", "observed", "passed"]

TARGETS = ["psl2-16", "psl2-2t", "sylow-p"]


class _Checks:
    def __init__(self):
        self.rows = []

    def add(self, check: str, expected, observed):
        passed = expected == observed
        if not passed:
            logger.warning(
                f"Check '{check}' failed: expected {expected}, got {observed}"
            )
        self.rows.append(
            {
                "check": check,
                "expected": str(expected),
                "observed": str(observed),
                "passed": passed,
            }
        )

    def frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=COLUMNS)


def golden_assignment(p: int) -> Assignment:
    """
    The module assignment of the worked PSL(2, 16) example at p

    :param p: 3 or 5
    :return: Assignment
    """
    with open(psl2_16_witness_paths[p], "rb") as f:
        return Assignment.from_witness(json.load(f))


def _alternative_assignment(assignment: Assignment, module: tuple) -> Assignment:
    """
    Replace the modules of the non-principal 3-block at j = 1 and 4
    """
    result = Assignment(modules=dict(assignment.modules), edges=dict(assignment.edges))
    for j in (1, 4):
        result.edges[("psi11", j)] = module
        for char_id in ("chi12", "chi16", "chi17"):
            result.modules[(char_id, j)] = module
    return result


def reproduce_psl2_16(prune: bool = True, threads: int = 1) -> pd.DataFrame:
    """
    The order 15 unit of PSL(2, 16): HeLP cannot exclude it, and it exists
    locally at 3 and at 5

    :param prune: whether to use gamma bounds
    :param threads: number of threads
    :return: dataframe of checks
    """
    checks = _Checks()
    table = character_table(16)

    unit = trivial_candidate(table, "3a")
    grid = multiplicity_grid(table, "chi10", unit)
    checks.add("trivial 3a: mu(1, chi10)", 6, int(grid[0]))
    checks.add("trivial 3a: mu(zeta_3, chi10)", 5, int(grid[1]))

    for p, path in sorted(psl2_16_bundle_paths.items()):
        loaded = load_instance_bundle(path)
        feasible, _ = help_feasible(loaded.table, loaded.candidate)
        checks.add(f"p={p}: HeLP feasible", True, feasible)

        verdicts = decide_blocks(
            loaded.table, loaded.trees, loaded.candidate, prune=prune, threads=threads
        )
        for verdict in verdicts:
            checks.add(f"p={p} block {verdict.block}: verdict", "SAT", verdict.status)

        golden = golden_assignment(p)
        for tree in loaded.trees:
            instance = build_instance(loaded.table, tree, unit=loaded.candidate)
            problems = verify_assignment(instance, golden)
            checks.add(f"p={p} block {tree.block}: worked assignment", [], problems)

            if p == 3 and tree.block != "B0":
                for module in [(3, 1), (1, 1, 1, 1)]:
                    problems = verify_assignment(
                        instance, _alternative_assignment(golden, module)
                    )
                    checks.add(
                        f"p=3 block {tree.block}: "
                        f"S(psi11, +-1) = {list(module)} rejected",
                        True,
                        len(problems) > 0,
                    )

    candidate = load_instance_bundle(psl2_16_bundle_paths[3]).candidate
    chi17 = multiplicity_grid(table, "chi17", candidate)
    expected17 = [3 if k in (1, 14) else 0 if k in (4, 11) else 1 for k in range(15)]
    checks.add(
        "order 15 unit: multiplicities of chi17", expected17, list(chi17.as_ints())
    )
    chi12 = multiplicity_grid(table, "chi12", candidate)
    expected12 = [2 if k in (6, 9) else 1 for k in range(15)]
    checks.add(
        "order 15 unit: multiplicities of chi12", expected12, list(chi12.as_ints())
    )

    data = compute_m_of_chi(table, "chi12", 5)
    checks.add("p=5: (m, e) of chi12", (2, 2), (data.m, data.e))
    return checks.frame()


def reproduce_psl2_2t(
    q: int = 19, t: int = 5, prune: bool = True, threads: int = 1
) -> pd.DataFrame:
    """
    Units of order 2t in PSL(2, q) with the partial augmentations left open
    by HeLP do not exist locally at t, while group elements of order 2t do

    :param q: prime power
    :param t: odd prime with t^2 not dividing |PSL(2, q)|
    :param prune: whether to use gamma bounds
    :param threads: number of threads
    :return: dataframe of checks
    """
    checks = _Checks()
    table = character_table(q)
    tree = principal_block_tree(q, t)
    unit = order_2t_candidate(q, t)

    feasible, _ = help_feasible(table, unit)
    checks.add(f"q={q} t={t}: HeLP feasible", True, feasible)

    steinberg = multiplicity_grid(table, character_id(q, "steinberg"), unit)
    checks.add(
        f"q={q} t={t}: mu(-zeta, steinberg)",
        t_rational_multiplicity(q, t),
        steinberg[t + 2],
    )
    eta = burkhardt_exceptional(q, t, table)
    checks.add(
        f"q={q} t={t}: mu(-zeta^((t-1)/2), {eta})",
        exceptional_multiplicity(q, t),
        multiplicity_grid(table, eta, unit)[2 * t - 1],
    )

    verdict = decide(
        build_instance(table, tree, unit=unit), prune=prune, threads=threads
    )
    checks.add(f"q={q} t={t}: verdict for the open pattern", "UNSAT", verdict.status)

    element = trivial_candidate(table, g0_class(q, t))
    verdict = decide(
        build_instance(table, tree, unit=element), prune=prune, threads=threads
    )
    checks.add(f"q={q} t={t}: verdict for a group element", "SAT", verdict.status)
    return checks.frame()


def reproduce_sylow_p(
    q: int = 11, p: int = 5, bound: int = 4, prune: bool = True, threads: int = 1
) -> pd.DataFrame:
    """
    Units of order p in PSL(2, q) with Sylow p-subgroup of order p: every
    HeLP-feasible partial augmentation vector with entries in [-bound, bound]
    is decided, and only the group elements survive

    :param q: prime power
    :param p: prime dividing |PSL(2, q)| exactly once
    :param bound: largest absolute value of a partial augmentation
    :param prune: whether to use gamma bounds
    :param threads: number of threads
    :return: dataframe of checks
    """
    checks = _Checks()
    table = character_table(q)
    tree = principal_block_tree(q, p)
    target = sylow_gamma_targets(table, tree)
    theta = tree.vertex_lookup[tree.exceptional.vertex].chars[0]

    for pa in feasible_pa_vectors(table, p, bound):
        trivial = sorted(pa.values()) == [0] * (len(pa) - 1) + [1]
        instance = build_sylow_p_instance(table, tree, pa)
        verdict = decide(instance, prune=prune, threads=threads)
        label = ",".join(f"{k}:{v}" for k, v in sorted(pa.items()))
        checks.add(
            f"q={q} p={p} pa ({label}): verdict",
            "SAT" if trivial else "UNSAT",
            verdict.status,
        )
        if verdict.sat:
            module = tuple(verdict.witness[f"M|{theta}|0"])
            checks.add(
                f"q={q} p={p} pa ({label}): gamma_{target['index']} of {theta}",
                target["value"],
                gamma(module, target["index"]),
            )
    return checks.frame()


def run_reproduction(
    target: str,
    q: Optional[int] = None,
    t: Optional[int] = None,
    prune: bool = True,
    threads: int = 1,
    output: Optional[str] = None,
) -> pd.DataFrame:
    """
    Run one reproduction suite

    :param target: psl2-16, psl2-2t or sylow-p
    :param q: prime power for psl2-2t and sylow-p
    :param t: prime for psl2-2t and sylow-p
    :param prune: whether to use gamma bounds
    :param threads: number of threads
    :param output: optional csv path
    :return: dataframe of checks
    """
    if target == "psl2-16":
        frame = reproduce_psl2_16(prune=prune, threads=threads)
    elif target == "psl2-2t":
        frame = reproduce_psl2_2t(q or 19, t or 5, prune=prune, threads=threads)
    elif target == "sylow-p":
        frame = reproduce_sylow_p(q or 11, t or 5, prune=prune, threads=threads)
    else:
        raise ValueError(f"Unknown target '{target}', choose from {TARGETS}")

    passed = int(frame["passed"].sum())
    logger.info(f"{target}: {passed} of {len(frame)} checks passed")
    save_frame(frame, output)
    return frame
