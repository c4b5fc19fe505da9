"""
Module for character-theoretic data of candidate torsion units: power maps,
class sizes, extended character values and eigenvalue multiplicities
(the HeLP layer)
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import pandas as pd
from sympy import divisors, factorint

from latticeunits.cyclotomic import CycNumber, exact_rational_sum, trace
from latticeunits.errors import CharacterTableError, DocumentValidationError
from latticeunits.models import CharacterTable, UnitCandidate

logger = logging.getLogger(__name__)


def power_class(table: CharacterTable, class_id: str, k: int) -> str:
    """
    Class of g^k for g in a given class.

    The part of k sharing primes with the element order is reached through the
    prime power maps, the remaining part coprime to the order by matching the
    Galois conjugate column.

    :param table: character table
    :param class_id: class of g
    :param k: exponent
    :return: class id of g^k
    """
    info = table.class_info(class_id)
    order = info.order
    k = k % order
    if k == 0:
        return table.identity_class

    current = class_id
    shared = gcd(k, order)
    for prime, multiplicity in sorted(factorint(shared).items()):
        for _ in range(multiplicity):
            try:
                current = table.class_info(current).powermap[str(prime)]
            except KeyError as exc:
                err = f"Class {current} of {table.group} has no {prime}-th power map"
                logger.error(err)
                raise CharacterTableError(err) from exc

    current_order = table.class_info(current).order
    if current_order != order // shared:
        err = (
            f"Power maps of {table.group} send class {class_id} to {current}, "
            f"of order {current_order} instead of {order // shared}"
        )
        logger.error(err)
        raise CharacterTableError(err)

    residue = (k // shared) % current_order
    if residue == 1 or current_order == 1:
        return current

    position = table.class_index(current)
    column = [char.values[position].galois(residue) for char in table.characters]
    target = table.find_class(column)
    if target is None:
        err = (
            f"No class of {table.group} matches the {residue}-th Galois "
            f"conjugate of class {current}"
        )
        logger.error(err)
        raise CharacterTableError(err)
    return target


def centralizer_orders(table: CharacterTable) -> dict[str, int]:
    """
    Centralizer orders from column orthogonality, |C_G(g)| = sum_chi |chi(g)|^2

    :param table: character table
    :return: centralizer order per class
    """
    result = {}
    for j, info in enumerate(table.classes):
        norm = exact_rational_sum(
            char.values[j] * char.values[j].conjugate() for char in table.characters
        )
        if norm.denominator != 1 or norm < 1:
            err = f"Column of class {info.id} has non-integral norm {norm}"
            logger.error(err)
            raise CharacterTableError(err)
        result[info.id] = int(norm)
    return result


def class_sizes(table: CharacterTable) -> dict[str, int]:
    """
    Class sizes recovered from the centralizer orders

    :param table: character table
    :return: size per class
    """
    sizes = {}
    for class_id, centralizer in centralizer_orders(table).items():
        if table.order % centralizer != 0:
            err = (
                f"Centralizer order {centralizer} of class {class_id} does not "
                f"divide |G| = {table.order}"
            )
            logger.error(err)
            raise CharacterTableError(err)
        sizes[class_id] = table.order // centralizer
    total = sum(sizes.values())
    if total != table.order:
        err = f"Class sizes of {table.group} sum to {total}, not {table.order}"
        logger.error(err)
        raise CharacterTableError(err)
    return sizes


def validate_orthogonality(table: CharacterTable) -> dict[str, int]:
    """
    Check row and column orthogonality exactly.
    Raises CharacterTableError on the first violation.

    :param table: character table
    :return: class sizes
    """
    sizes = class_sizes(table)
    weights = [sizes[info.id] for info in table.classes]

    for a, first in enumerate(table.characters):
        for second in table.characters[a:]:
            inner = exact_rational_sum(
                x * y.conjugate() * w
                for x, y, w in zip(first.values, second.values, weights)
            )
            expected = table.order if first.id == second.id else 0
            if inner != expected:
                err = (
                    f"Rows {first.id} and {second.id} of {table.group} have "
                    f"inner product {inner}, expected {expected}"
                )
                logger.error(err)
                raise CharacterTableError(err)

    for a, first in enumerate(table.classes):
        for b in range(a + 1, len(table.classes)):
            inner = exact_rational_sum(
                char.values[a] * char.values[b].conjugate()
                for char in table.characters
            )
            if inner != 0:
                err = (
                    f"Columns {first.id} and {table.classes[b].id} of "
                    f"{table.group} are not orthogonal"
                )
                logger.error(err)
                raise CharacterTableError(err)

    logger.debug(f"Character table of {table.group} passes orthogonality checks")
    return sizes


def galois_fixes(table: CharacterTable, char_id: str, residue: int) -> bool:
    """
    Whether the Galois automorphism zeta -> zeta^residue fixes a character

    :param table: character table
    :param char_id: character id
    :param residue: unit modulo the exponent
    :return: boolean
    """
    char = table.character(char_id)
    return all(
        value.galois(residue % info.order) == value
        for value, info in zip(char.values, table.classes)
    )


def galois_character(table: CharacterTable, char_id: str, residue: int) -> str:
    """
    The character sigma_c(chi), with sigma_c: zeta -> zeta^c

    :param table: character table
    :param char_id: character id
    :param residue: unit modulo the exponent
    :return: character id
    """
    char = table.character(char_id)
    images = [
        value.galois(residue % info.order)
        for value, info in zip(char.values, table.classes)
    ]
    for other in table.characters:
        if all(x == y for x, y in zip(other.values, images)):
            return other.id
    err = f"{table.group} has no character matching sigma_{residue}({char_id})"
    logger.error(err)
    raise CharacterTableError(err)


def check_candidate(table: CharacterTable, unit: UnitCandidate):
    """
    Ensure the partial augmentations of a candidate refer to existing classes,
    vanish on the identity (Berman-Higman) and are supported on classes whose
    element order divides the order of the power.

    :param table: character table
    :param unit: candidate
    :return: None
    """
    if table.exponent % unit.order != 0:
        err = (
            f"Unit order {unit.order} does not divide the exponent "
            f"{table.exponent} of {table.group}"
        )
        logger.error(err)
        raise DocumentValidationError(err)
    for d, vector in unit.pa.items():
        for class_id, value in vector.items():
            if value == 0:
                continue
            if class_id not in table.class_positions:
                err = f"Partial augmentation of u^{d} on unknown class '{class_id}'"
                logger.error(err)
                raise DocumentValidationError(err)
            if class_id == table.identity_class:
                err = (
                    f"u^{d} has non-zero partial augmentation on the identity, "
                    f"contradicting Berman-Higman"
                )
                logger.error(err)
                raise DocumentValidationError(err)
            element_order = table.class_info(class_id).order
            if (unit.order // d) % element_order != 0:
                err = (
                    f"u^{d} has order {unit.order // d} but partial augmentation "
                    f"on class {class_id} of order {element_order}"
                )
                logger.error(err)
                raise DocumentValidationError(err)


def trivial_candidate(table: CharacterTable, class_id: str) -> UnitCandidate:
    """
    Candidate of a group element: every power is the indicator of its class

    :param table: character table
    :param class_id: class of the element
    :return: UnitCandidate
    """
    order = table.class_info(class_id).order
    return UnitCandidate(
        order=order,
        pa={
            d: {power_class(table, class_id, d): 1}
            for d in divisors(order)
            if d < order
        },
    )


def is_trivial_pattern(unit: UnitCandidate) -> bool:
    """
    Whether every power of a candidate has non-negative partial augmentations,
    i.e. the candidate is rationally conjugate to a group element

    :param unit: candidate
    :return: boolean
    """
    return unit.is_trivial_pattern()


def extended_char_value(
    table: CharacterTable, char_id: str, unit: UnitCandidate, d: int
) -> CycNumber:
    """
    chi(u^d) as the partial-augmentation weighted sum of character values

    :param table: character table
    :param char_id: character id
    :param unit: candidate
    :param d: divisor of the unit order
    :return: value in Q(zeta_(n/d))
    """
    if unit.order % d != 0:
        err = f"{d} does not divide the unit order {unit.order}"
        logger.error(err)
        raise DocumentValidationError(err)
    char = table.character(char_id)
    if d == unit.order:
        return char.values[0]
    total = CycNumber.rational(0, unit.order // d)
    for class_id, weight in unit.pa[d].items():
        if weight != 0:
            total = total + char.values[table.class_index(class_id)] * weight
    return total


def _power_values(
    table: CharacterTable, char_id: str, unit: UnitCandidate
) -> dict[int, CycNumber]:
    return {
        d: extended_char_value(table, char_id, unit, d) for d in divisors(unit.order)
    }


def _multiplicity_from_values(
    values: dict[int, CycNumber], order: int, k: int
) -> Fraction:
    total = Fraction(0)
    for d, value in values.items():
        sub_order = order // d
        total += trace(value * CycNumber.root(sub_order, -k), sub_order)
    return total / order


def multiplicity(
    table: CharacterTable, char_id: str, unit: UnitCandidate, k: int
) -> Fraction:
    """
    Multiplicity of zeta_n^k as an eigenvalue of D(u) for a representation D
    affording chi, by the Luthar-Passi formula
    (1/n) sum_(d | n) Tr_(Q(zeta^d)/Q)(chi(u^d) zeta^(-dk)).

    The raw rational is returned so that infeasible candidates can be detected.

    :param table: character table
    :param char_id: character id
    :param unit: candidate
    :param k: exponent modulo n
    :return: multiplicity
    """
    return _multiplicity_from_values(
        _power_values(table, char_id, unit), unit.order, k
    )


@dataclass(frozen=True)
class MultiplicityGrid:
    """
    Eigenvalue multiplicities of one character at a candidate unit of order n
    """

    character: str
    order: int
    values: tuple[Fraction, ...]

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k % self.order]

    @property
    def total(self) -> Fraction:
        """
        Sum of all multiplicities, the character degree for genuine units

        :return: sum
        """
        return sum(self.values, Fraction(0))

    def is_integral(self) -> bool:
        """
        Whether all multiplicities are integers

        :return: boolean
        """
        return all(v.denominator == 1 for v in self.values)

    def is_nonnegative(self) -> bool:
        """
        Whether all multiplicities are non-negative

        :return: boolean
        """
        return all(v >= 0 for v in self.values)

    def as_ints(self) -> tuple[int, ...]:
        """
        Multiplicities as integers

        :return: tuple of integers
        """
        if not self.is_integral():
            raise ValueError(f"Multiplicities of {self.character} are not integral")
        return tuple(int(v) for v in self.values)


def multiplicity_grid(
    table: CharacterTable, char_id: str, unit: UnitCandidate
) -> MultiplicityGrid:
    """
    All eigenvalue multiplicities of a character at a candidate

    :param table: character table
    :param char_id: character id
    :param unit: candidate
    :return: MultiplicityGrid
    """
    values = _power_values(table, char_id, unit)
    return MultiplicityGrid(
        character=char_id,
        order=unit.order,
        values=tuple(
            _multiplicity_from_values(values, unit.order, k)
            for k in range(unit.order)
        ),
    )


def multiplicity_frame(table: CharacterTable, unit: UnitCandidate) -> pd.DataFrame:
    """
    Multiplicity grids of all characters as a table, one row per character and
    one column per exponent

    :param table: character table
    :param unit: candidate
    :return: dataframe
    """
    rows = []
    for char_id in table.character_ids():
        grid = multiplicity_grid(table, char_id, unit)
        rows.append([str(v) for v in grid.values])
    return pd.DataFrame(
        rows, index=table.character_ids(), columns=list(range(unit.order))
    )


def help_report(table: CharacterTable, unit: UnitCandidate) -> pd.DataFrame:
    """
    HeLP report: multiplicities of every character at every power u^d of the
    candidate (u^d of order > 1)

    :param table: character table
    :param unit: candidate
    :return: dataframe with columns character, power, exponent, mu, integral,
        nonnegative
    """
    check_candidate(table, unit)
    records = []
    for d in unit.proper_divisors():
        power = unit.power(d)
        for char_id in table.character_ids():
            grid = multiplicity_grid(table, char_id, power)
            for k, value in enumerate(grid.values):
                records.append(
                    {
                        "character": char_id,
                        "power": d,
                        "exponent": k,
                        "mu": value,
                        "integral": value.denominator == 1,
                        "nonnegative": value >= 0,
                    }
                )
    return pd.DataFrame(
        records,
        columns=["character", "power", "exponent", "mu", "integral", "nonnegative"],
    )


def help_feasible(
    table: CharacterTable, unit: UnitCandidate
) -> tuple[bool, list[str]]:
    """
    Whether all multiplicities at all powers of a candidate are non-negative
    integers

    :param table: character table
    :param unit: candidate
    :return: (feasible, list of violations)
    """
    report = help_report(table, unit)
    failing = report[~(report["integral"] & report["nonnegative"])]
    violations = [
        f"mu(zeta^{row.exponent}, u^{row.power}, {row.character}) = {row.mu}"
        for row in failing.itertuples()
    ]
    if violations:
        logger.info(
            f"Candidate of order {unit.order} fails HeLP: {violations[0]}"
            + (f" (+{len(violations) - 1} more)" if len(violations) > 1 else "")
        )
    return len(violations) == 0, violations
