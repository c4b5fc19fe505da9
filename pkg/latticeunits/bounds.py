"""
Module for necessary conditions on the number of large Jordan blocks (gamma)
of the modules attached to a Brauer tree.

Three families are provided:

* eigenvalue bounds on a vertex module M from its filtration by
  trivial modules and uniserial modules of dimension m,
* subtree bounds on an edge module S from the multiplicities of the characters
  on one side of the edge, when that side avoids the exceptional vertex,
* exceptional bounds on the module of an exceptional character from the
  multiplicities of all non-exceptional characters.

All bounds are stated for one p'-eigenvalue xi_j of the unit at a time.
"""

import logging
from dataclasses import dataclass, field
from typing import Literal

from latticeunits.models import BrauerTree
from latticeunits.tableaux import Partition, gamma

logger = logging.getLogger(__name__)

Relation = Literal["<=", ">="]


@dataclass(frozen=True)
class Bound:
    """
    An inequality gamma_index(module) <relation> value
    """

    index: int
    relation: Relation
    value: int
    source: str

    def holds(self, partition: Partition) -> bool:
        """
        Whether a module satisfies the bound

        :param partition: module
        :return: boolean
        """
        observed = gamma(partition, self.index)
        if self.relation == "<=":
            return observed <= self.value
        return observed >= self.value

    def __str__(self):
        return f"gamma_{self.index} {self.relation} {self.value} ({self.source})"


def _bound(index: int, relation: Relation, value: int, source: str) -> list[Bound]:
    if index < 1:
        return []
    return [Bound(index=index, relation=relation, value=value, source=source)]


def satisfies(partition: Partition, bounds: list[Bound]) -> bool:
    """
    Whether a module satisfies all bounds

    :param partition: module
    :param bounds: list of bounds
    :return: boolean
    """
    return all(b.holds(partition) for b in bounds)


def eigen_bounds(m: int, p: int, mus: list[int]) -> list[Bound]:
    """
    Bounds on a module filtered by trivial modules and e layers I_m^(mu_i):
    gamma_m >= max mu_i and gamma_(p-m+1) <= min mu_i.

    :param m: dimension of the non-trivial layers
    :param p: prime
    :param mus: layer multiplicities mu_1, ..., mu_e
    :return: list of bounds
    """
    if len(mus) == 0:
        return []
    return _bound(m, ">=", max(mus), "eigen") + _bound(
        p - m + 1, "<=", min(mus), "eigen"
    )


@dataclass
class GammaBounds:
    """
    Bounds for one p'-eigenvalue: per edge id on the edge module, and per
    exceptional character on its vertex module
    """

    edges: dict[str, list[Bound]] = field(default_factory=dict)
    exceptional: list[Bound] = field(default_factory=list)

    def count(self) -> int:
        """
        Total number of bounds

        :return: count
        """
        return sum(len(x) for x in self.edges.values()) + len(self.exceptional)


def _positive_leaves(tree: BrauerTree, signs: dict[str, int]) -> list[str]:
    return [
        v for v in tree.leaves() if signs[v] == 1 and not tree.is_exceptional(v)
    ]


def _char(tree: BrauerTree, vertex_id: str) -> str:
    return tree.vertex_lookup[vertex_id].chars[0]


def subtree_bounds(
    tree: BrauerTree,
    signs: dict[str, int],
    edge_id: str,
    vertex_id: str,
    mu_one: dict[str, int],
    mu_zeta: dict[str, int],
) -> list[Bound]:
    """
    Bounds on the module of an edge D coming from the component S on the side
    of an endpoint chi, provided S avoids the exceptional vertex. With a = |S|
    and sigma = sum over S of sign(psi) * mu(xi*zeta, psi):

    * sign(chi) = -1: gamma_(p-a) >= -sigma
    * sign(chi) = +1: gamma_(a+1) <= sigma

    and for every positive leaf chi_1 in S:

    * sign(chi) = -1: gamma_(p-a+1) >= -mu(xi, chi_1) - sigma
    * sign(chi) = +1: gamma_a <= mu(xi, chi_1) + sigma

    :param tree: Brauer tree
    :param signs: sign per vertex
    :param edge_id: edge D
    :param vertex_id: endpoint chi of D
    :param mu_one: mu(xi, u, psi) per non-exceptional character
    :param mu_zeta: mu(xi*zeta, u, psi) per non-exceptional character
    :return: list of bounds
    """
    component = tree.component_without_edge(edge_id, vertex_id)
    if any(tree.is_exceptional(v) for v in component):
        return []
    p = tree.p
    a = len(component)
    sigma = sum(signs[v] * mu_zeta[_char(tree, v)] for v in component)
    source = f"subtree:{vertex_id}"
    negative = signs[vertex_id] == -1

    if negative:
        bounds = _bound(p - a, ">=", -sigma, source)
    else:
        bounds = _bound(a + 1, "<=", sigma, source)

    for leaf in _positive_leaves(tree, signs):
        if leaf not in component:
            continue
        shift = mu_one[_char(tree, leaf)]
        if negative:
            bounds += _bound(p - a + 1, ">=", -shift - sigma, f"{source}:{leaf}")
        else:
            bounds += _bound(a, "<=", shift + sigma, f"{source}:{leaf}")
    return bounds


def exceptional_bounds(
    tree: BrauerTree,
    signs: dict[str, int],
    mu_one: dict[str, int],
    mu_zeta: dict[str, int],
) -> list[Bound]:
    """
    Bounds on the module of an exceptional character theta. With m the number
    of edges and sigma = sum over non-exceptional psi of sign(psi) * mu(xi*zeta, psi):

    * sign(theta) = -1: gamma_(m+1) <= sigma
    * sign(theta) = +1: gamma_(p-m) >= -sigma

    and for every positive leaf chi_1:

    * sign(theta) = -1: gamma_m <= mu(xi, chi_1) + sigma
    * sign(theta) = +1: gamma_(p-m+1) >= -mu(xi, chi_1) - sigma

    :param tree: Brauer tree
    :param signs: sign per vertex
    :param mu_one: mu(xi, u, psi) per non-exceptional character
    :param mu_zeta: mu(xi*zeta, u, psi) per non-exceptional character
    :return: list of bounds (empty without an exceptional vertex)
    """
    if tree.exceptional is None:
        return []
    p = tree.p
    m = tree.edges_m
    theta_vertex = tree.exceptional.vertex
    sigma = sum(
        signs[v.id] * mu_zeta[v.chars[0]]
        for v in tree.vertices
        if not tree.is_exceptional(v.id)
    )
    negative = signs[theta_vertex] == -1

    if negative:
        bounds = _bound(m + 1, "<=", sigma, "exceptional")
    else:
        bounds = _bound(p - m, ">=", -sigma, "exceptional")

    for leaf in _positive_leaves(tree, signs):
        shift = mu_one[_char(tree, leaf)]
        if negative:
            bounds += _bound(m, "<=", shift + sigma, f"exceptional:{leaf}")
        else:
            bounds += _bound(p - m + 1, ">=", -shift - sigma, f"exceptional:{leaf}")
    return bounds


def gamma_bounds(
    tree: BrauerTree,
    signs: dict[str, int],
    mu_one: dict[str, int],
    mu_zeta: dict[str, int],
) -> GammaBounds:
    """
    All subtree bounds on the edge modules and all exceptional bounds for one
    p'-eigenvalue xi

    :param tree: Brauer tree
    :param signs: sign per vertex
    :param mu_one: mu(xi, u, psi) per non-exceptional character
    :param mu_zeta: mu(xi*zeta, u, psi) per non-exceptional character
    :return: GammaBounds
    """
    result = GammaBounds()
    for edge in tree.edges:
        bounds = []
        for end in edge.ends:
            bounds += subtree_bounds(tree, signs, edge.id, end, mu_one, mu_zeta)
        result.edges[edge.id] = bounds
    result.exceptional = exceptional_bounds(tree, signs, mu_one, mu_zeta)
    logger.debug(f"Derived {result.count()} gamma bounds for block {tree.block}")
    return result
