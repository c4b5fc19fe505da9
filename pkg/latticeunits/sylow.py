"""
Module for units of order p when the Sylow p-subgroup has order p.

In the principal block the values of the characters on elements of order p are
known in closed form, so the eigenvalue multiplicities of a unit of order p
follow from its partial augmentations without the general formula. Both
computations are run and compared.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterator

from latticeunits.brauer import signs_from_convention
from latticeunits.cyclotomic import CycNumber, GaloisElement, orbits, relative_trace
from latticeunits.decider import Instance, build_instance
from latticeunits.errors import ClosedFormMismatchError, UnsupportedBlockError
from latticeunits.grouprep import MultiplicityGrid, help_feasible, multiplicity_grid
from latticeunits.models import BrauerTree, CharacterTable, UnitCandidate

logger = logging.getLogger(__name__)


def order_p_classes(table: CharacterTable, p: int) -> list[str]:
    """
    Classes of elements of order p

    :param table: character table
    :param p: prime
    :return: list of class ids
    """
    return [info.id for info in table.classes if info.order == p]


def _mismatch(message: str):
    logger.error(message)
    raise ClosedFormMismatchError(message)


@dataclass(frozen=True)
class SylowSetting:
    """
    The data of the principal block used by the closed forms
    """

    p: int
    m: int
    e: int
    theta_sign: int
    theta_degree: int
    orbit_sums: tuple[CycNumber, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def min_g(self) -> Fraction:
        """
        Least multiplicity of a primitive p-th root at a group element of order
        p, for an exceptional character of negative sign

        :return: (theta(1) - m) / p
        """
        return Fraction(self.theta_degree - self.m, self.p)

    @property
    def max_g(self) -> Fraction:
        """
        Largest multiplicity of a primitive p-th root at a group element of
        order p, for an exceptional character of positive sign

        :return: (theta(1) + m) / p
        """
        return Fraction(self.theta_degree + self.m, self.p)


def sylow_setting(table: CharacterTable, tree: BrauerTree) -> SylowSetting:
    """
    Check that the block is a principal block with a Sylow subgroup of order p
    and collect the closed-form data

    :param table: character table
    :param tree: Brauer tree of the principal block
    :return: SylowSetting
    """
    p = tree.p
    if table.order % p != 0 or table.order % (p**2) == 0:
        err = f"The Sylow {p}-subgroup of {table.group} does not have order {p}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    if tree.exceptional is None:
        err = (
            f"Block {tree.block} at p={p} has no exceptional vertex; there is a "
            f"single class of elements of order {p}"
        )
        logger.error(err)
        raise UnsupportedBlockError(err)
    e = len(order_p_classes(table, p))
    m = (p - 1) // e
    if m != tree.edges_m:
        _mismatch(
            f"{e} classes of elements of order {p} need {m} edges, but block "
            f"{tree.block} has {tree.edges_m}"
        )

    subgroup = [GaloisElement(p, s) for s in range(1, p) if pow(s, m, p) == 1]
    orbit_list = tuple(orbits(subgroup, range(1, p)))
    sums = tuple(relative_trace(CycNumber.root(p, o[0]), subgroup) for o in orbit_list)
    signs = signs_from_convention(tree)
    theta = tree.vertex_lookup[tree.exceptional.vertex].chars[0]
    return SylowSetting(
        p=p,
        m=m,
        e=e,
        theta_sign=signs[tree.exceptional.vertex],
        theta_degree=table.degree(theta),
        orbit_sums=sums,
        orbits=orbit_list,
    )


def _class_orbits(
    table: CharacterTable, setting: SylowSetting, char_id: str
) -> dict[str, int]:
    """
    For an exceptional character, the orbit index i of every class g of order p
    with chi(g) = -sign(theta) * orbit sum i
    """
    result = {}
    for class_id in order_p_classes(table, setting.p):
        value = table.value(char_id, class_id)
        matches = [
            i
            for i, total in enumerate(setting.orbit_sums)
            if value == total * (-setting.theta_sign)
        ]
        if len(matches) != 1:
            _mismatch(
                f"{char_id} takes the value {value} on {class_id}, which is not "
                f"a signed orbit sum of {setting.p}-th roots of unity"
            )
        result[class_id] = matches[0]
    if sorted(result.values()) != list(range(setting.e)):
        _mismatch(f"Classes of order {setting.p} do not match the orbits for {char_id}")
    return result


def _grid(char_id: str, p: int, degree: int, values: dict[int, Fraction]):
    ordered = [Fraction(0)] * p
    for k, value in values.items():
        ordered[k] = value
    ordered[0] = degree - sum(ordered[1:], Fraction(0))
    return MultiplicityGrid(character=char_id, order=p, values=tuple(ordered))


def closed_form_grids(
    table: CharacterTable, tree: BrauerTree, pa: dict[str, int]
) -> dict[str, MultiplicityGrid]:
    """
    Multiplicities of a unit of order p at the characters of the principal
    block, from the closed forms:

    * exceptional theta, sign -1: mu(zeta_i) = eps_(g_i) + (theta(1) - m)/p
    * exceptional theta, sign +1: mu(zeta_i) = -eps_(g_i) + (theta(1) + m)/p
    * non-exceptional psi: mu(zeta) = (psi(1) - sign(psi))/p

    The signed sum over the non-exceptional characters is checked against
    (-sign(theta) * theta(1) - m)/p.

    :param table: character table
    :param tree: Brauer tree of the principal block
    :param pa: partial augmentations on the classes of order p
    :return: grid per character of the block
    """
    setting = sylow_setting(table, tree)
    p = setting.p
    signs = signs_from_convention(tree)
    grids = {}

    signed_sum = Fraction(0)
    for vertex in tree.vertices:
        if tree.is_exceptional(vertex.id):
            continue
        psi = vertex.chars[0]
        sign = signs[vertex.id]
        for class_id in order_p_classes(table, p):
            if table.value(psi, class_id) != CycNumber.rational(sign):
                _mismatch(
                    f"{psi} takes the value {table.value(psi, class_id)} on "
                    f"{class_id}, expected its sign {sign}"
                )
        value = Fraction(table.degree(psi) - sign, p)
        signed_sum += sign * value
        grids[psi] = _grid(psi, p, table.degree(psi), {k: value for k in range(1, p)})

    expected = Fraction(-setting.theta_sign * setting.theta_degree - setting.m, p)
    if signed_sum != expected:
        _mismatch(
            f"Signed multiplicities of the non-exceptional characters sum to "
            f"{signed_sum}, expected {expected}"
        )

    for theta in tree.vertex_lookup[tree.exceptional.vertex].chars:
        assignment = _class_orbits(table, setting, theta)
        values = {}
        for class_id, index in assignment.items():
            eps = pa.get(class_id, 0)
            if setting.theta_sign == -1:
                value = eps + setting.min_g
            else:
                value = -eps + setting.max_g
            for k in setting.orbits[index]:
                values[k] = value
        grids[theta] = _grid(theta, p, table.degree(theta), values)
    return grids


def unit_of_order_p(p: int, pa: dict[str, int]) -> UnitCandidate:
    """
    Candidate of order p with given partial augmentations

    :param p: prime
    :param pa: partial augmentations on classes of order p
    :return: UnitCandidate
    """
    return UnitCandidate(order=p, pa={1: {k: v for k, v in pa.items() if v != 0}})


def build_sylow_p_instance(
    table: CharacterTable, tree: BrauerTree, pa: dict[str, int]
) -> Instance:
    """
    Instance for a unit of order p from the closed forms, cross-checked against
    the general multiplicity formula

    :param table: character table
    :param tree: Brauer tree of the principal block
    :param pa: partial augmentations on the classes of order p
    :return: Instance
    """
    unit = unit_of_order_p(tree.p, pa)
    grids = closed_form_grids(table, tree, pa)
    for char_id, grid in grids.items():
        generic = multiplicity_grid(table, char_id, unit)
        if generic.values != grid.values:
            _mismatch(
                f"Closed-form multiplicities of {char_id} are "
                f"{[str(x) for x in grid.values]}, the general formula gives "
                f"{[str(x) for x in generic.values]}"
            )
    return build_instance(table, tree, unit=unit, grids=grids)


def sylow_gamma_targets(table: CharacterTable, tree: BrauerTree) -> dict[str, int]:
    """
    Values forced on the module M of the exceptional character: for sign -1,
    gamma_m(M) = 1 + min(g), and for sign +1, gamma_(p-m+1)(M) = max(g) - 1

    :param table: character table
    :param tree: Brauer tree of the principal block
    :return: dictionary with keys index and value
    """
    setting = sylow_setting(table, tree)
    if setting.theta_sign == -1:
        return {"index": setting.m, "value": int(1 + setting.min_g)}
    return {"index": setting.p - setting.m + 1, "value": int(setting.max_g - 1)}


def pa_vectors(classes: list[str], bound: int) -> Iterator[dict[str, int]]:
    """
    All partial augmentation vectors on the given classes with entries in
    [-bound, bound] summing to 1

    :param classes: class ids
    :param bound: largest absolute value of an entry
    :return: iterator of vectors
    """
    for values in product(range(-bound, bound + 1), repeat=len(classes)):
        if sum(values) == 1:
            yield dict(zip(classes, values))


def feasible_pa_vectors(
    table: CharacterTable, p: int, bound: int = 4
) -> list[dict[str, int]]:
    """
    The HeLP-feasible partial augmentation vectors of units of order p with
    entries in [-bound, bound]

    :param table: character table
    :param p: prime
    :param bound: largest absolute value of an entry
    :return: list of vectors
    """
    result = []
    for pa in pa_vectors(order_p_classes(table, p), bound):
        feasible, _ = help_feasible(table, unit_of_order_p(p, pa))
        if feasible:
            result.append(pa)
    logger.info(f"{len(result)} HeLP-feasible vectors for units of order {p}")
    return result
