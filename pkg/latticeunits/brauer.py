"""
Module for validating Brauer trees of blocks of defect 1 against a character table
"""

import logging
from dataclasses import dataclass, field
from typing import Optional

import matplotlib.pyplot as plt
import numpy as np
from matplotlib.axes import Axes

from latticeunits.cyclotomic import CycNumber
from latticeunits.errors import BrauerTreeError, CharacterTableError
from latticeunits.models import BrauerTree, CharacterTable

logger = logging.getLogger(__name__)


def signs_from_convention(
    tree: BrauerTree, positive_vertex: Optional[str] = None
) -> dict[str, int]:
    """
    The 2-colouring of a tree by signs +1/-1 with a given vertex positive

    :param tree: Brauer tree
    :param positive_vertex: vertex labelled +1 (default: the tree's own choice)
    :return: sign per vertex
    """
    start = tree.positive_vertex if positive_vertex is None else positive_vertex
    if start not in tree.vertex_lookup:
        err = f"Unknown vertex '{start}'"
        logger.error(err)
        raise BrauerTreeError(err)
    signs = {start: 1}
    stack = [start]
    while stack:
        current = stack.pop()
        for other in tree.neighbours(current):
            if other not in signs:
                signs[other] = -signs[current]
                stack.append(other)
    return {v.id: signs[v.id] for v in tree.vertices if v.id in signs}


def edge_factors(tree: BrauerTree, vertex_id: str) -> list[str]:
    """
    Brauer characters of the edges at a vertex, in the stored cyclic order,
    rotated to start at the least edge id

    :param tree: Brauer tree
    :param vertex_id: vertex id
    :return: list of Brauer character ids
    """
    edges = tree.incident_edges(vertex_id)
    if len(edges) == 0:
        return []
    start = edges.index(min(edges))
    rotated = edges[start:] + edges[:start]
    return [tree.edge_lookup[e].brauer for e in rotated]


def vertex_degree(tree: BrauerTree, table: CharacterTable, vertex_id: str) -> int:
    """
    Degree of the ordinary characters at a vertex

    :param tree: Brauer tree
    :param table: character table
    :param vertex_id: vertex id
    :return: degree
    """
    degrees = {table.degree(c) for c in tree.vertex_lookup[vertex_id].chars}
    if len(degrees) != 1:
        err = f"Characters at vertex {vertex_id} have different degrees {degrees}"
        logger.error(err)
        raise BrauerTreeError(err)
    return degrees.pop()


def brauer_degrees(tree: BrauerTree, table: CharacterTable) -> dict[str, int]:
    """
    Degrees of the Brauer characters, solved from the vertex equations
    chi(1) = sum of incident Brauer degrees by repeatedly eliminating leaves

    :param tree: Brauer tree
    :param table: character table
    :return: degree per Brauer character id
    """
    remaining = {v.id: set(tree.incident_edges(v.id)) for v in tree.vertices}
    residual = {v.id: vertex_degree(tree, table, v.id) for v in tree.vertices}
    solved: dict[str, int] = {}

    progress = True
    while progress and len(solved) < len(tree.edges):
        progress = False
        for vertex in tree.vertices:
            if len(remaining[vertex.id]) != 1:
                continue
            edge_id = remaining[vertex.id].pop()
            value = residual[vertex.id]
            solved[edge_id] = value
            for end in tree.edge_lookup[edge_id].ends:
                if end != vertex.id:
                    remaining[end].discard(edge_id)
                    residual[end] -= value
            residual[vertex.id] = 0
            progress = True

    if len(solved) < len(tree.edges):
        err = f"Brauer degrees of block {tree.block} are not determined by the tree"
        logger.error(err)
        raise BrauerTreeError(err)

    for vertex_id, value in residual.items():
        if value != 0:
            err = (
                f"Degree sum at vertex {vertex_id} of block {tree.block} is off "
                f"by {value}"
            )
            logger.error(err)
            raise BrauerTreeError(err)

    return {tree.edge_lookup[e].brauer: d for e, d in solved.items()}


@dataclass
class Issue:
    """
    One failed check of a block
    """

    check: str
    location: str
    message: str

    def __str__(self):
        return f"[{self.check}] {self.location}: {self.message}"


@dataclass
class ValidationReport:
    """
    Outcome of validating a block
    """

    block: str
    issues: list[Issue] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """
        Whether all checks passed

        :return: boolean
        """
        return len(self.issues) == 0

    def add(self, check: str, location: str, message: str):
        """
        Record an issue

        :param check: name of the check
        :param location: vertex, edge or class concerned
        :param message: description
        :return: None
        """
        self.issues.append(Issue(check=check, location=location, message=message))


def _check_shape(tree: BrauerTree, report: ValidationReport):
    n_vertices = len(tree.vertices)
    if len(tree.edges) != n_vertices - 1:
        report.add(
            "tree",
            tree.block,
            f"{len(tree.edges)} edges for {n_vertices} vertices",
        )
    reached = tree.component_without_edge("", tree.vertices[0].id)
    if len(reached) != n_vertices:
        report.add("tree", tree.block, "graph is not connected")

    for vertex in tree.vertices:
        expected = tree.ell if tree.is_exceptional(vertex.id) else 1
        if len(vertex.chars) != expected:
            report.add(
                "multiplicity",
                vertex.id,
                f"carries {len(vertex.chars)} characters, expected {expected}",
            )

    if tree.ell * len(tree.edges) != tree.p - 1:
        report.add(
            "multiplicity",
            tree.block,
            f"exceptional multiplicity {tree.ell} times {len(tree.edges)} edges "
            f"is not p - 1 = {tree.p - 1}",
        )


def _check_signs(tree: BrauerTree, report: ValidationReport) -> dict[str, int]:
    signs = signs_from_convention(tree)
    for edge in tree.edges:
        first, second = edge.ends
        if signs.get(first) == signs.get(second):
            report.add("signs", edge.id, "endpoints carry the same sign")
    if tree.signs is not None:
        for vertex_id, sign in tree.signs.items():
            if sign not in (1, -1):
                report.add("signs", vertex_id, f"sign {sign} is not +1 or -1")
            elif signs.get(vertex_id) != sign:
                report.add(
                    "signs",
                    vertex_id,
                    f"stored sign {sign} disagrees with the 2-colouring",
                )
        for edge in tree.edges:
            first, second = edge.ends
            if first in tree.signs and tree.signs.get(first) == tree.signs.get(second):
                report.add("signs", edge.id, "stored signs agree across the edge")
    return signs


def _check_alternating_sum(
    tree: BrauerTree,
    table: CharacterTable,
    signs: dict[str, int],
    report: ValidationReport,
):
    for info in table.classes:
        if info.order % tree.p == 0:
            continue
        position = table.class_index(info.id)
        total = CycNumber.rational(0, info.order)
        for vertex in tree.vertices:
            chars = vertex.chars[:1] if tree.is_exceptional(vertex.id) else vertex.chars
            for char_id in chars:
                total = total + table.character(char_id).values[position] * signs.get(
                    vertex.id, 0
                )
        if not total.is_zero():
            report.add(
                "alternating_sum",
                info.id,
                f"signed sum of block characters is {total}, not 0",
            )


def validate_block(tree: BrauerTree, table: CharacterTable) -> ValidationReport:
    """
    Check a Brauer tree against a character table: tree shape, exceptional
    multiplicity, sign bipartition, degree sums, and the vanishing of the
    signed character sum on p-regular classes.

    :param tree: Brauer tree
    :param table: character table
    :return: ValidationReport
    """
    report = ValidationReport(block=tree.block)

    unknown = [c for c in tree.characters() if c not in table.character_positions]
    if unknown:
        report.add("characters", tree.block, f"unknown characters {unknown}")
        return report

    if table.order % tree.p != 0 or table.order % (tree.p**2) == 0:
        report.add(
            "defect",
            tree.block,
            f"|G| = {table.order} is not divisible by exactly one power of {tree.p}",
        )

    _check_shape(tree, report)
    if not report.ok:
        return report

    signs = _check_signs(tree, report)

    try:
        degrees = brauer_degrees(tree, table)
        for brauer, degree in degrees.items():
            if degree < 1:
                report.add("degrees", brauer, f"Brauer degree {degree} is not positive")
    except BrauerTreeError as exc:
        report.add("degrees", tree.block, str(exc))

    try:
        _check_alternating_sum(tree, table, signs, report)
    except CharacterTableError as exc:
        report.add("alternating_sum", tree.block, str(exc))

    if report.ok:
        logger.debug(f"Block {tree.block} at p={tree.p} passes validation")
    return report


def check_block(tree: BrauerTree, table: CharacterTable):
    """
    Validate a block, raising BrauerTreeError on the first issue

    :param tree: Brauer tree
    :param table: character table
    :return: None
    """
    report = validate_block(tree, table)
    if not report.ok:
        err = f"Block {tree.block} at p={tree.p} is invalid: {report.issues[0]}"
        logger.error(err)
        raise BrauerTreeError(err)


def _layout(tree: BrauerTree) -> dict[str, tuple[float, float]]:
    leaves = tree.leaves()
    root = leaves[0] if leaves else tree.vertices[0].id
    depth = {root: 0}
    order = [root]
    stack = [root]
    while stack:
        current = stack.pop()
        for other in tree.neighbours(current):
            if other not in depth:
                depth[other] = depth[current] + 1
                order.append(other)
                stack.append(other)
    rows: dict[int, list[str]] = {}
    for vertex_id in order:
        rows.setdefault(depth[vertex_id], []).append(vertex_id)
    positions = {}
    for level, members in rows.items():
        half = (len(members) - 1) / 2
        offsets = np.linspace(-half, half, len(members))
        for vertex_id, offset in zip(members, offsets):
            positions[vertex_id] = (float(level), float(offset))
    return positions


def plot_tree(tree: BrauerTree, ax: Optional[Axes] = None) -> Axes:
    """
    Draw a Brauer tree: vertices labelled by their characters and signs, the
    exceptional vertex as a double circle, edges labelled by Brauer characters

    :param tree: Brauer tree
    :param ax: axis to draw on
    :return: ax
    """
    if ax is None:
        ax = plt.subplot(111)

    positions = _layout(tree)
    signs = signs_from_convention(tree)

    for edge in tree.edges:
        (x_0, y_0), (x_1, y_1) = positions[edge.ends[0]], positions[edge.ends[1]]
        ax.plot([x_0, x_1], [y_0, y_1], color="k", zorder=1)
        ax.annotate(
            edge.brauer, ((x_0 + x_1) / 2, (y_0 + y_1) / 2 + 0.08), ha="center"
        )

    for vertex in tree.vertices:
        x, y = positions[vertex.id]
        ax.add_patch(plt.Circle((x, y), 0.08, fc="white", ec="k", zorder=2))
        if tree.is_exceptional(vertex.id):
            ax.add_patch(plt.Circle((x, y), 0.12, fc="none", ec="k", zorder=2))
        label = ", ".join(vertex.chars)
        sign = "+" if signs[vertex.id] > 0 else "-"
        ax.annotate(f"{label} ({sign})", (x, y - 0.25), ha="center")

    ax.set_aspect("equal")
    ax.axis("off")
    ax.autoscale_view()
    ax.set_title(f"Block {tree.block}, p = {tree.p}")
    return ax
