"""
Generator of the ordinary character tables of PSL(2,q) and of the Brauer trees
of their blocks of defect 1.

Classes are the identity, the unipotent classes (one involution class for
even q, two classes of elements of order p for odd q), and the powers a^l of a
generator of the split torus and b^m of a generator of the non-split torus.
Class ids are "<element order><letter>", letters ascending with the exponent.
Characters are numbered chi1, chi2, ... by ascending degree, Galois families
contiguous.
"""

import logging
import string
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Optional

from sympy import factorint, isprime, legendre_symbol, primefactors

from latticeunits.cyclotomic import CycNumber, gauss_sqrt
from latticeunits.data import psl2_16_aliases
from latticeunits.errors import CharacterTableError, UnsupportedBlockError
from latticeunits.grouprep import power_class
from latticeunits.models import (
    BrauerTree,
    Character,
    CharacterTable,
    ClassInfo,
    ExceptionalVertex,
    TreeEdge,
    TreeVertex,
    UnitCandidate,
)

logger = logging.getLogger(__name__)

ALIASES = {16: psl2_16_aliases}


@dataclass(frozen=True)
class PSL2Params:
    """
    Arithmetic data of PSL(2,q)
    """

    q: int
    p: int
    f: int

    @property
    def even(self) -> bool:
        """
        Whether q is a power of 2

        :return: boolean
        """
        return self.p == 2

    @property
    def epsilon(self) -> int:
        """
        +1 if q = 1 mod 4, -1 if q = 3 mod 4 (+1 for even q)

        :return: sign
        """
        if self.even:
            return 1
        return 1 if self.q % 4 == 1 else -1

    @property
    def split_order(self) -> int:
        """
        Order of the split torus

        :return: (q-1)/2 for odd q, q-1 for even q
        """
        return self.q - 1 if self.even else (self.q - 1) // 2

    @property
    def nonsplit_order(self) -> int:
        """
        Order of the non-split torus

        :return: (q+1)/2 for odd q, q+1 for even q
        """
        return self.q + 1 if self.even else (self.q + 1) // 2

    @property
    def order(self) -> int:
        """
        Group order

        :return: |PSL(2,q)|
        """
        return self.q * (self.q**2 - 1) // gcd(2, self.q - 1)

    @property
    def exponent(self) -> int:
        """
        Group exponent

        :return: exponent
        """
        return lcm(self.p, self.split_order, self.nonsplit_order)

    def torus_order(self, family: str) -> int:
        """
        Order of the torus of a family "a" (split) or "b" (non-split)

        :param family: "a" or "b"
        :return: order
        """
        return self.split_order if family == "a" else self.nonsplit_order


def psl2_params(q: int) -> PSL2Params:
    """
    Parameters of PSL(2,q), rejecting q which is not a prime power at least 4

    :param q: field size
    :return: PSL2Params
    """
    factors = factorint(q)
    if q < 4 or len(factors) != 1:
        err = f"PSL(2,q) needs a prime power q >= 4, got {q}"
        logger.error(err)
        raise CharacterTableError(err)
    ((p, f),) = factors.items()
    return PSL2Params(q=q, p=int(p), f=int(f))


def _letters(index: int) -> str:
    letters = ""
    index += 1
    while index > 0:
        index, rest = divmod(index - 1, 26)
        letters = string.ascii_lowercase[rest] + letters
    return letters


@dataclass(frozen=True)
class _ClassKey:
    family: str
    exponent: int


class _ClassLayout:
    """
    Conjugacy classes of PSL(2,q) as (family, exponent) keys with their ids
    """

    def __init__(self, params: PSL2Params):
        self.params = params
        keys = [_ClassKey("1", 0)]
        if params.even:
            keys.append(_ClassKey("u", 1))
        else:
            keys += [_ClassKey("u", 1), _ClassKey("u", -1)]
        for family in ("a", "b"):
            size = params.torus_order(family)
            keys += [_ClassKey(family, l) for l in range(1, size // 2 + 1)]

        by_order: dict[int, list[_ClassKey]] = {}
        for key in keys:
            by_order.setdefault(self.element_order(key), []).append(key)

        self.keys: list[_ClassKey] = []
        self.ids: dict[_ClassKey, str] = {}
        for order in sorted(by_order):
            for position, key in enumerate(by_order[order]):
                self.keys.append(key)
                self.ids[key] = f"{order}{_letters(position)}"

    def element_order(self, key: _ClassKey) -> int:
        """
        Order of the elements of a class

        :param key: class key
        :return: order
        """
        if key.family == "1":
            return 1
        if key.family == "u":
            return self.params.p
        size = self.params.torus_order(key.family)
        return size // gcd(key.exponent, size)

    def torus_class(self, family: str, exponent: int) -> _ClassKey:
        """
        Class of a torus element a^l or b^m

        :param family: "a" or "b"
        :param exponent: l or m
        :return: class key
        """
        size = self.params.torus_order(family)
        exponent %= size
        if exponent == 0:
            return _ClassKey("1", 0)
        return _ClassKey(family, min(exponent, size - exponent))

    def power(self, key: _ClassKey, k: int) -> _ClassKey:
        """
        Class of g^k

        :param key: class of g
        :param k: exponent
        :return: class key
        """
        if key.family == "1":
            return key
        if key.family == "u":
            if k % self.params.p == 0:
                return _ClassKey("1", 0)
            if self.params.even or self.params.f % 2 == 0:
                return key
            if legendre_symbol(k % self.params.p, self.params.p) == 1:
                return key
            return _ClassKey("u", -key.exponent)
        return self.torus_class(key.family, key.exponent * k)


def _torus_value(layout: _ClassLayout, key: _ClassKey, index: int) -> CycNumber:
    """
    rho^(index*l) + rho^(-index*l) at the class a^l (or b^l), rho a primitive
    root of unity of the torus order, written in the field of the element order
    """
    size = layout.params.torus_order(key.family)
    shared = gcd(key.exponent, size)
    order = size // shared
    step = key.exponent // shared
    return CycNumber.root(order, index * step) + CycNumber.root(order, -index * step)


def _unipotent_root(params: PSL2Params) -> CycNumber:
    """
    Square root of epsilon*q, rational for even f
    """
    if params.f % 2 == 0:
        return CycNumber.rational(params.p ** (params.f // 2))
    return gauss_sqrt(params.p) * params.p ** ((params.f - 1) // 2)


def character_labels(params: PSL2Params) -> list[str]:
    """
    Generator labels of the characters in ascending degree: "trivial", the pair
    "half+1", "half-1" of degree (q+-1)/2 for odd q, "theta<j>" of degree q-1,
    "steinberg", and "chi<i>" of degree q+1

    :param params: PSL2Params
    :return: list of labels
    """
    labels = ["trivial"]
    if not params.even:
        labels += ["half+1", "half-1"]
    labels += [f"theta{j}" for j in range(1, (params.nonsplit_order - 1) // 2 + 1)]
    labels.append("steinberg")
    labels += [f"chi{i}" for i in range(1, (params.split_order - 1) // 2 + 1)]
    return labels


def _character_value(
    params: PSL2Params, layout: _ClassLayout, label: str, key: _ClassKey
) -> CycNumber:
    q = params.q
    family = key.family
    if label == "trivial":
        return CycNumber.rational(1)

    if label.startswith("half"):
        sign = 1 if label == "half+1" else -1
        if family == "1":
            return CycNumber.rational((q + params.epsilon) // 2)
        if family == "u":
            root = _unipotent_root(params) * (sign * key.exponent)
            return (root + params.epsilon) * Fraction(1, 2)
        if params.epsilon == 1:
            return CycNumber.rational((-1) ** key.exponent if family == "a" else 0)
        return CycNumber.rational((-1) ** (key.exponent + 1) if family == "b" else 0)

    if label.startswith("theta"):
        values = {"1": q - 1, "u": -1, "a": 0}
        if family in values:
            return CycNumber.rational(values[family])
        return -_torus_value(layout, key, int(label[5:]))

    if label == "steinberg":
        return CycNumber.rational({"1": q, "u": 0, "a": 1, "b": -1}[family])

    values = {"1": q + 1, "u": 1, "b": 0}
    if family in values:
        return CycNumber.rational(values[family])
    return _torus_value(layout, key, int(label[3:]))


def _alias(q: int, kind: str, name: str) -> str:
    if q not in ALIASES:
        return name
    return ALIASES[q][kind][name]


@lru_cache(maxsize=None)
def character_table(q: int) -> CharacterTable:
    """
    Ordinary character table of PSL(2,q). For q = 16 classes and characters are
    renamed by the shipped alias map so that ids follow the library numbering.
    Tables are cached and must not be modified.

    :param q: prime power, at least 4
    :return: CharacterTable
    """
    params = psl2_params(q)
    layout = _ClassLayout(params)
    primes = primefactors(params.exponent)

    classes = [
        ClassInfo(
            id=_alias(q, "classes", layout.ids[key]),
            order=layout.element_order(key),
            powermap={
                str(r): _alias(q, "classes", layout.ids[layout.power(key, r)])
                for r in primes
            },
        )
        for key in layout.keys
    ]
    characters = [
        Character(
            id=_alias(q, "characters", f"chi{n + 1}"),
            values=[
                _character_value(params, layout, label, key) for key in layout.keys
            ],
        )
        for n, label in enumerate(character_labels(params))
    ]

    positions = [0] + sorted(
        range(1, len(classes)),
        key=lambda i: (classes[i].order, len(classes[i].id), classes[i].id),
    )
    classes = [classes[i] for i in positions]
    for char in characters:
        char.values = [char.values[i] for i in positions]
    characters.sort(key=lambda c: int(c.id[3:]))

    table = CharacterTable(
        group=f"PSL(2,{q})",
        order=params.order,
        exponent=params.exponent,
        classes=classes,
        characters=characters,
    )
    logger.debug(
        f"Generated character table of {table.group} with "
        f"{len(table.classes)} classes"
    )
    return table


def character_id(q: int, label: str) -> str:
    """
    Id of a character of the generated table of PSL(2,q) from its generator label

    :param q: prime power
    :param label: generator label, see character_labels
    :return: character id
    """
    labels = character_labels(psl2_params(q))
    if label not in labels:
        err = f"PSL(2,{q}) has no character labelled '{label}'"
        logger.error(err)
        raise CharacterTableError(err)
    return _alias(q, "characters", f"chi{labels.index(label) + 1}")


def torus_class_id(q: int, family: str, exponent: int) -> str:
    """
    Id of the class of a^l (family "a") or b^m (family "b") in the generated table

    :param q: prime power
    :param family: "a" or "b"
    :param exponent: l or m
    :return: class id
    """
    params = psl2_params(q)
    layout = _ClassLayout(params)
    return _alias(q, "classes", layout.ids[layout.torus_class(family, exponent)])


def _check_prime(params: PSL2Params, t: int):
    if t == 2 or not isprime(t):
        err = f"Blocks of defect 1 need an odd prime, got {t}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    if t == params.p or params.order % t != 0 or params.order % (t * t) == 0:
        err = f"{t} does not divide |PSL(2,{params.q})| = {params.order} exactly once"
        logger.error(err)
        raise UnsupportedBlockError(err)


def _torus_family(params: PSL2Params, t: int) -> str:
    return "a" if params.split_order % t == 0 else "b"


def _family_labels(params: PSL2Params, family: str) -> list[tuple[int, str]]:
    """
    (index, label) of the characters induced from a torus: degree q+1 for the
    split torus, degree q-1 for the non-split torus
    """
    size = params.torus_order(family)
    prefix = "chi" if family == "a" else "theta"
    return [(i, f"{prefix}{i}") for i in range(1, (size - 1) // 2 + 1)]


def exceptional_characters(q: int, t: int) -> list[str]:
    """
    Characters at the exceptional vertex of the principal t-block: those
    induced from the torus containing a Sylow t-subgroup whose index is
    divisible by the t'-part of the torus order

    :param q: prime power
    :param t: odd prime dividing |G| exactly once
    :return: list of character ids
    """
    params = psl2_params(q)
    _check_prime(params, t)
    family = _torus_family(params, t)
    step = params.torus_order(family) // t
    return [
        character_id(q, label)
        for i, label in _family_labels(params, family)
        if i % step == 0
    ]


def principal_block_tree(q: int, t: int) -> BrauerTree:
    """
    Brauer tree of the principal t-block of PSL(2,q): a line with the trivial
    character at one end, the Steinberg character, and the exceptional
    characters, which sit in the middle when t divides the split torus and at
    the other end otherwise

    :param q: prime power
    :param t: odd prime dividing |G| exactly once, t not dividing q
    :return: BrauerTree
    """
    params = psl2_params(q)
    family = _torus_family(params, t)
    exceptional = exceptional_characters(q, t)
    trivial = character_id(q, "trivial")
    steinberg = character_id(q, "steinberg")
    ell = len(exceptional)

    eta = "exc" if ell > 1 else exceptional[0]
    vertices = [
        TreeVertex(id=trivial, chars=[trivial]),
        TreeVertex(id=eta, chars=exceptional),
        TreeVertex(id=steinberg, chars=[steinberg]),
    ]
    if family == "a":
        ends = [(trivial, eta), (eta, steinberg)]
    else:
        ends = [(trivial, steinberg), (steinberg, eta)]
    edges = [
        TreeEdge(id="psi1", brauer="psi1", ends=ends[0]),
        TreeEdge(
            id=f"psi{steinberg[3:]}", brauer=f"psi{steinberg[3:]}", ends=ends[1]
        ),
    ]
    middle = eta if family == "a" else steinberg
    return BrauerTree(
        p=t,
        block="B0",
        vertices=vertices,
        exceptional=ExceptionalVertex(vertex=eta, mult=ell) if ell > 1 else None,
        edges=edges,
        cyclic_order={middle: [e.id for e in edges]},
        positive_vertex=trivial,
    )


def _positive_vertex(
    table: CharacterTable, t: int, non_exceptional: str, exceptional_vertex: str
) -> str:
    """
    Sign convention: a non-exceptional character is positive iff it is positive
    on the elements of order t
    """
    class_id = next(c.id for c in table.classes if c.order == t)
    value = table.value(non_exceptional, class_id).to_complex().real
    return non_exceptional if value > 0 else exceptional_vertex


def nonprincipal_block_trees(q: int, t: int) -> list[BrauerTree]:
    """
    Brauer trees of the non-principal t-blocks of defect 1 of PSL(2,q) for even q.
    The characters induced from the torus containing the Sylow t-subgroup split
    into blocks by their index modulo the t'-part of the torus order; in each
    such block the character with index divisible by t is non-exceptional and
    the remaining t-1 are exceptional.

    :param q: power of 2
    :param t: odd prime dividing |G| exactly once
    :return: list of BrauerTree, one per block
    """
    params = psl2_params(q)
    _check_prime(params, t)
    if not params.even:
        return []
    table = character_table(q)
    family = _torus_family(params, t)
    size = params.torus_order(family)
    step = size // t
    labels = _family_labels(params, family)

    trees = []
    for s in range(1, step // 2 + 1):
        members = [
            (i, character_id(q, label))
            for i, label in labels
            if i % step in (s, step - s)
        ]
        non_exceptional = [c for i, c in members if i % t == 0]
        exceptional = [c for i, c in members if i % t != 0]
        if len(non_exceptional) != 1 or len(exceptional) != t - 1:
            err = f"Unexpected block of PSL(2,{q}) at t={t}: {members}"
            logger.error(err)
            raise CharacterTableError(err)
        head = non_exceptional[0]
        edge = f"psi{head[3:]}"
        trees.append(
            BrauerTree(
                p=t,
                block=f"B{len(trees) + 1}",
                vertices=[
                    TreeVertex(id=head, chars=[head]),
                    TreeVertex(id="exc", chars=exceptional),
                ],
                exceptional=ExceptionalVertex(vertex="exc", mult=t - 1),
                edges=[TreeEdge(id=edge, brauer=edge, ends=(head, "exc"))],
                positive_vertex=_positive_vertex(table, t, head, "exc"),
            )
        )
    return trees


def brauer_trees(q: int, t: int) -> list[BrauerTree]:
    """
    The principal t-block tree followed by the companion non-principal trees

    :param q: prime power
    :param t: odd prime dividing |G| exactly once
    :return: list of BrauerTree
    """
    return [principal_block_tree(q, t)] + nonprincipal_block_trees(q, t)


def element_2t_exists(q: int, t: int) -> bool:
    """
    Whether PSL(2,q) has elements of order 2t, i.e. 2t divides (q-1)/2 or (q+1)/2

    :param q: prime power
    :param t: odd prime
    :return: boolean
    """
    params = psl2_params(q)
    if params.even:
        return False
    return params.split_order % (2 * t) == 0 or params.nonsplit_order % (2 * t) == 0


def _g0(q: int, t: int) -> tuple[str, int]:
    """
    Torus family and exponent of an element g0 of order 2t
    """
    params = psl2_params(q)
    if not element_2t_exists(q, t):
        err = f"PSL(2,{q}) has no elements of order {2 * t}"
        logger.error(err)
        raise UnsupportedBlockError(err)
    family = "a" if params.split_order % (2 * t) == 0 else "b"
    return family, params.torus_order(family) // (2 * t)


def order_2t_candidate(q: int, t: int) -> UnitCandidate:
    """
    The candidate of order 2t whose powers u^2, u^t are conjugate to g0^2, g0^t
    and whose only non-vanishing partial augmentations are 1 at g0^((t-1)/2),
    1 at g0^((t+1)/2) and -1 at g0^(t-1)

    :param q: odd prime power
    :param t: odd prime
    :return: UnitCandidate
    """
    family, step = _g0(q, t)

    def cls(k: int) -> str:
        return torus_class_id(q, family, step * k)

    pattern: dict[str, int] = {}
    for k, value in (((t - 1) // 2, 1), ((t + 1) // 2, 1), (t - 1, -1)):
        pattern[cls(k)] = pattern.get(cls(k), 0) + value
    return UnitCandidate(
        order=2 * t,
        pa={1: pattern, 2: {cls(2): 1}, t: {cls(t): 1}},
    )


def g0_class(q: int, t: int) -> str:
    """
    Class of the element g0 of order 2t used by order_2t_candidate

    :param q: odd prime power
    :param t: odd prime
    :return: class id
    """
    family, step = _g0(q, t)
    return torus_class_id(q, family, step)


def burkhardt_exceptional(
    q: int, t: int, table: Optional[CharacterTable] = None
) -> str:
    """
    The exceptional character eta of the principal t-block with
    eta(g0^i) = +-(zeta^i + zeta^-i) for i not divisible by 2t, zeta = exp(2 pi i/t).
    The sign is + when g0 lies in the split torus (q = 1 mod 4) and - otherwise.

    :param q: odd prime power
    :param t: odd prime with elements of order 2t
    :param table: generated table, if already at hand
    :return: character id
    """
    family, _ = _g0(q, t)
    if table is None:
        table = character_table(q)
    g0 = g0_class(q, t)
    sign = 1 if family == "a" else -1
    for char_id in exceptional_characters(q, t):
        if all(
            table.value(char_id, power_class(table, g0, i))
            == (CycNumber.root(t, i) + CycNumber.root(t, -i)) * sign
            for i in range(1, 2 * t)
        ):
            return char_id
    err = f"No exceptional character of PSL(2,{q}) at t={t} has the expected values"
    logger.error(err)
    raise CharacterTableError(err)


def t_rational_multiplicity(q: int, t: int) -> Fraction:
    """
    (alpha(1) - c)/2t for the Steinberg character alpha, with c = alpha(g) on the
    non-trivial elements of order dividing 2t

    :param q: odd prime power
    :param t: odd prime
    :return: multiplicity of -zeta^i in alpha at the order 2t candidate
    """
    family, _ = _g0(q, t)
    value = 1 if family == "a" else -1
    return Fraction(q - value, 2 * t)


def exceptional_multiplicity(q: int, t: int) -> Fraction:
    """
    Multiplicity of -zeta^((t-1)/2) in the exceptional character eta at the
    order 2t candidate

    :param q: odd prime power
    :param t: odd prime
    :return: multiplicity
    """
    family, _ = _g0(q, t)
    if family == "a":
        return Fraction(q - 1, 2 * t) - 1
    return Fraction(q + 1, 2 * t) + 1


