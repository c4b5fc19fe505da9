"""
Exact arithmetic in the cyclotomic fields Q(zeta_N).

An element of Q(zeta_N) is stored through its rational coefficients in the power
basis 1, zeta_N, ..., zeta_N^(phi(N)-1), obtained by reducing modulo the N-th
cyclotomic polynomial. This form is unique, so equality is a comparison of
coefficients once both sides live at a common order.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Optional, Union

import numpy as np
from sympy import Matrix
from sympy import Rational as SympyRational
from sympy import (
    cyclotomic_poly,
    factorint,
    isprime,
    legendre_symbol,
    primitive_root,
    totient,
)
from sympy.abc import x as _x
from sympy.ntheory.modular import crt

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """
    Euler's totient function

    :param n: positive integer
    :return: phi(n)
    """
    return int(totient(n))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    """
    Moebius function

    :param n: positive integer
    :return: mu(n)
    """
    factors = factorint(n)
    if any(exp > 1 for exp in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


@lru_cache(maxsize=None)
def cyclotomic_coefficients(order: int) -> tuple[int, ...]:
    """
    Integer coefficients of the order-th cyclotomic polynomial, lowest degree first

    :param order: N
    :return: coefficients
    """
    poly = cyclotomic_poly(order, _x, polys=True)
    return tuple(int(c) for c in reversed(poly.all_coeffs()))


@lru_cache(maxsize=None)
def _power_table(order: int) -> tuple[tuple[int, ...], ...]:
    """
    Power-basis coordinates of zeta_N^k for k = 0..N-1
    """
    phi_coeffs = cyclotomic_coefficients(order)
    degree = len(phi_coeffs) - 1
    current = [1] + [0] * (degree - 1)
    table = []
    for _ in range(order):
        table.append(tuple(current))
        shifted = [0] + current
        top = shifted[degree]
        shifted = shifted[:degree]
        if top != 0:
            shifted = [a - top * b for a, b in zip(shifted, phi_coeffs)]
        current = shifted
    return tuple(table)


def ramanujan_sum(order: int, k: int) -> int:
    """
    Sum of the k-th powers of the primitive N-th roots of unity,
    i.e. the trace of zeta_N^k from Q(zeta_N) to Q

    :param order: N
    :param k: exponent
    :return: integer trace
    """
    g = gcd(k % order, order)
    quotient = order // g
    return mobius(quotient) * euler_phi(order) // euler_phi(quotient)


def _as_fraction(value: Union[Rational, str]) -> Fraction:
    return Fraction(value)


def _to_sympy(value: Fraction) -> SympyRational:
    return SympyRational(value.numerator, value.denominator)


class CycNumber:
    """
    Element of the cyclotomic field Q(zeta_N)
    """

    __slots__ = ("order", "coeffs")
    __hash__ = None

    def __init__(self, order: int, coeffs: Iterable[Rational]):
        if order < 1:
            raise ValueError(f"Cyclotomic order must be positive, got {order}")
        coeffs = tuple(Fraction(c) for c in coeffs)
        degree = euler_phi(order)
        if len(coeffs) != degree:
            raise ValueError(
                f"Expected {degree} power-basis coefficients for order {order}, "
                f"got {len(coeffs)}"
            )
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def from_exponents(cls, order: int, mapping: Mapping[int, Rational]) -> "CycNumber":
        """
        Build sum_k mapping[k] * zeta_N^k

        :param order: N
        :param mapping: coefficient per exponent
        :return: CycNumber
        """
        table = _power_table(order)
        acc = [Fraction(0)] * euler_phi(order)
        for k, coeff in mapping.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            for i, entry in enumerate(table[k % order]):
                if entry:
                    acc[i] += coeff * entry
        return cls(order, acc)

    @classmethod
    def root(cls, order: int, k: int = 1) -> "CycNumber":
        """
        The root of unity zeta_N^k

        :param order: N
        :param k: exponent
        :return: CycNumber
        """
        return cls(order, _power_table(order)[k % order])

    @classmethod
    def rational(cls, value: Union[Rational, str], order: int = 1) -> "CycNumber":
        """
        A rational number, embedded in Q(zeta_N)

        :param value: rational
        :param order: N
        :return: CycNumber
        """
        coeffs = [Fraction(0)] * euler_phi(order)
        coeffs[0] = _as_fraction(value)
        return cls(order, coeffs)

    def __repr__(self):
        terms = [
            f"{c}*z{self.order}^{i}" if i else f"{c}"
            for i, c in enumerate(self.coeffs)
            if c != 0
        ]
        return f"CycNumber({' + '.join(terms) if terms else '0'})"

    def lift(self, order: int) -> "CycNumber":
        """
        Express the same number in Q(zeta_M) for a multiple M of the order

        :param order: M
        :return: CycNumber of order M
        """
        if order == self.order:
            return self
        if order % self.order != 0:
            raise ValueError(f"Cannot lift order {self.order} to order {order}")
        step = order // self.order
        return CycNumber.from_exponents(
            order, {i * step: c for i, c in enumerate(self.coeffs) if c != 0}
        )

    def descend(self, order: int) -> "CycNumber":
        """
        Express the number in Q(zeta_M), raising ValueError if it does not lie there

        :param order: M
        :return: CycNumber of order M
        """
        common = lcm(order, self.order)
        target = self.lift(common)
        if order == common:
            return target
        basis = [
            CycNumber.root(order, i).lift(common) for i in range(euler_phi(order))
        ]
        matrix = Matrix(
            [
                [_to_sympy(b.coeffs[row]) for b in basis]
                for row in range(len(target.coeffs))
            ]
        )
        rhs = Matrix([_to_sympy(c) for c in target.coeffs])
        try:
            solution, params = matrix.gauss_jordan_solve(rhs)
        except ValueError as exc:
            raise ValueError(f"{self} does not lie in Q(zeta_{order})") from exc
        if params.shape[0] != 0:
            raise ValueError(f"Basis of Q(zeta_{order}) is degenerate")
        return CycNumber(order, [Fraction(int(s.p), int(s.q)) for s in solution])

    @staticmethod
    def _coerce(other) -> Optional["CycNumber"]:
        if isinstance(other, CycNumber):
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.rational(other)
        return None

    def _common(self, other: "CycNumber") -> tuple["CycNumber", "CycNumber"]:
        order = lcm(self.order, other.order)
        return self.lift(order), other.lift(order)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return CycNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, [c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        product: dict[int, Fraction] = {}
        for i, x in enumerate(a.coeffs):
            if x == 0:
                continue
            for j, y in enumerate(b.coeffs):
                if y != 0:
                    product[i + j] = product.get(i + j, Fraction(0)) + x * y
        return CycNumber.from_exponents(a.order, product)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def is_zero(self) -> bool:
        """
        Whether the number is zero

        :return: boolean
        """
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        """
        Whether the number lies in Q

        :return: boolean
        """
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        """
        The number as a rational, raising if it is not rational

        :return: Fraction
        """
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def galois(self, residue: int) -> "CycNumber":
        """
        Apply the Galois automorphism zeta_N -> zeta_N^c

        :param residue: c, coprime to N
        :return: image
        """
        if gcd(residue, self.order) != 1:
            raise ValueError(
                f"Residue {residue} is not a unit modulo {self.order}"
            )
        return CycNumber.from_exponents(
            self.order,
            {(i * residue) % self.order: c for i, c in enumerate(self.coeffs) if c},
        )

    def conjugate(self) -> "CycNumber":
        """
        Complex conjugate

        :return: conjugate
        """
        return self.galois(-1)

    def to_complex(self) -> complex:
        """
        Numerical value

        :return: complex number
        """
        exponents = np.arange(len(self.coeffs))
        weights = np.array([float(c) for c in self.coeffs])
        return complex(np.sum(weights * np.exp(2j * np.pi * exponents / self.order)))

    def to_json(self) -> dict:
        """
        Serialise as {"order": N, "coeffs": ["a/b", ...]}

        :return: dictionary
        """
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Union[dict, int, str]) -> "CycNumber":
        """
        Parse a serialised number. Accepts {"order": N, "coeffs": [...]} with
        coefficients per exponent 0..N-1 (or a reduced prefix of them),
        {"zeta": [N, k]}, or a plain rational.

        :param data: serialised number
        :return: CycNumber
        """
        if isinstance(data, (int, str)):
            return cls.rational(data)
        if "zeta" in data:
            order, k = data["zeta"]
            return cls.root(int(order), int(k))
        order = int(data["order"])
        return cls.from_exponents(
            order, {k: _as_fraction(c) for k, c in enumerate(data["coeffs"])}
        )


def trace(value: CycNumber, order: Optional[int] = None) -> Fraction:
    """
    Trace from Q(zeta_M) to Q, with M = order (default: the order of the value).
    The value must lie in Q(zeta_M).

    :param value: element
    :param order: M
    :return: rational trace
    """
    if order is None:
        order = value.order
    common = lcm(order, value.order)
    lifted = value.lift(common)
    full = sum(
        (c * ramanujan_sum(common, i) for i, c in enumerate(lifted.coeffs) if c),
        Fraction(0),
    )
    return full / (euler_phi(common) // euler_phi(order))


@dataclass(frozen=True)
class GaloisElement:
    """
    The automorphism zeta_N -> zeta_N^residue of Q(zeta_N)
    """

    order: int
    residue: int

    def __post_init__(self):
        if gcd(self.residue, self.order) != 1:
            raise ValueError(f"{self.residue} is not a unit modulo {self.order}")
        object.__setattr__(self, "residue", self.residue % self.order)

    def __mul__(self, other: "GaloisElement") -> "GaloisElement":
        if other.order != self.order:
            raise ValueError("Cannot compose Galois elements of different orders")
        return GaloisElement(self.order, (self.residue * other.residue) % self.order)

    def apply(self, value: CycNumber) -> CycNumber:
        """
        Apply to a number whose order divides N

        :param value: element
        :return: image
        """
        return value.lift(lcm(value.order, self.order)).galois(self.residue)


def relative_trace(value: CycNumber, subgroup: Iterable[GaloisElement]) -> CycNumber:
    """
    Orbit sum of a number under a subgroup of Galois elements

    :param value: element
    :param subgroup: subgroup of (Z/N)^*
    :return: sum of images
    """
    total = CycNumber.rational(0)
    for element in subgroup:
        total = total + element.apply(value)
    return total


def _split_prime(order: int, p: int) -> tuple[int, int]:
    if order < 1:
        err = f"Order must be positive, got {order}"
        logger.error(err)
        raise ValueError(err)
    if not isprime(p):
        err = f"{p} is not a prime"
        logger.error(err)
        raise ValueError(err)
    p_part = 1
    rest = order
    while rest % p == 0:
        rest //= p
        p_part *= p
    return p_part, rest


def units(order: int) -> list[int]:
    """
    The residues coprime to N

    :param order: N
    :return: sorted list of units
    """
    return [c for c in range(order) if gcd(c, order) == 1] if order > 1 else [0]


def local_decomposition_group(order: int, p: int) -> frozenset[GaloisElement]:
    """
    Galois group of Q_p(zeta_N)/Q_p as a subgroup of (Z/N)^*: residues which are a
    power of p modulo the p'-part of N and arbitrary modulo the p-part.

    :param order: N
    :param p: prime
    :return: subgroup
    """
    _, p_prime = _split_prime(order, p)
    if p_prime > 1:
        powers = {pow(p, k, p_prime) for k in range(p_prime)}
    else:
        powers = {0}
    return frozenset(
        GaloisElement(order, c)
        for c in units(order)
        if p_prime == 1 or c % p_prime in powers
    )


def inertia_group(order: int, p: int) -> frozenset[GaloisElement]:
    """
    Inertia subgroup of the local decomposition group: residues which are 1
    modulo the p'-part of N

    :param order: N
    :param p: prime
    :return: subgroup
    """
    _, p_prime = _split_prime(order, p)
    return frozenset(
        GaloisElement(order, c)
        for c in units(order)
        if p_prime == 1 or c % p_prime == 1
    )


def _local_element(order: int, p: int, on_p_part: int, on_rest: int) -> GaloisElement:
    p_part, p_prime = _split_prime(order, p)
    moduli = [x for x in (p_part, p_prime) if x > 1]
    residues = [
        r for x, r in zip((p_part, p_prime), (on_p_part, on_rest)) if x > 1
    ]
    if len(moduli) == 0:
        return GaloisElement(order, 1 % order)
    return GaloisElement(order, int(crt(moduli, residues)[0]))


def inertia_generator(order: int, p: int) -> GaloisElement:
    """
    Generator of the inertia group: a primitive root modulo the p-part of N and
    1 modulo the p'-part

    :param order: N
    :param p: prime
    :return: GaloisElement
    """
    p_part, _ = _split_prime(order, p)
    root = primitive_root(p_part) if p_part > 1 else 1
    if root is None:
        err = f"The inertia group of Q_{p}(zeta_{order}) is not cyclic"
        logger.error(err)
        raise ValueError(err)
    return _local_element(order, p, root, 1)


def frobenius_element(order: int, p: int) -> GaloisElement:
    """
    The Frobenius: zeta -> zeta^p on p'-roots of unity, trivial on p-power roots.
    With the inertia generator it generates the local decomposition group.

    :param order: N
    :param p: prime
    :return: GaloisElement
    """
    return _local_element(order, p, 1, p)


def orbits(
    subgroup: Iterable[GaloisElement], exponents: Iterable[int]
) -> list[tuple[int, ...]]:
    """
    Orbits of a subgroup of (Z/N)^* acting on exponents mod N by multiplication.
    Each orbit is sorted, so its first entry is its least element, and orbits are
    ordered by that representative.

    :param subgroup: subgroup
    :param exponents: residues mod N, closed under the action
    :return: list of orbits
    """
    subgroup = list(subgroup)
    if len(subgroup) == 0:
        raise ValueError("Subgroup must contain at least the identity")
    order = subgroup[0].order
    remaining = sorted({k % order for k in exponents})
    seen: set[int] = set()
    result = []
    for k in remaining:
        if k in seen:
            continue
        orbit = tuple(sorted({(k * g.residue) % order for g in subgroup}))
        seen.update(orbit)
        result.append(orbit)
    return result


def exact_rational_sum(values: Iterable[CycNumber]) -> Fraction:
    """
    Sum numbers whose total is rational without lifting to a global order.
    Numbers are grouped so that orders in different groups share no prime; the
    fields of different groups are then linearly disjoint and each group sum is
    itself rational.

    :param values: numbers to add
    :return: rational sum
    """
    groups: list[tuple[set[int], CycNumber]] = []
    rational = Fraction(0)
    for value in values:
        if value.is_rational():
            rational += value.coeffs[0]
            continue
        primes = set(factorint(value.order))
        merged_primes, merged = set(primes), value
        keep = []
        for group_primes, group_sum in groups:
            if group_primes & primes:
                merged_primes |= group_primes
                merged = merged + group_sum
            else:
                keep.append((group_primes, group_sum))
        groups = keep + [(merged_primes, merged)]
    for _, group_sum in groups:
        rational += group_sum.as_rational()
    return rational


def gauss_sqrt(p: int) -> CycNumber:
    """
    Square root of p* = (-1)^((p-1)/2) p as the quadratic Gauss sum

    :param p: odd prime
    :return: sum_k (k/p) zeta_p^k
    """
    if p == 2 or not isprime(p):
        raise ValueError(f"Gauss sums need an odd prime, got {p}")
    return CycNumber.from_exponents(
        p, {k: legendre_symbol(k, p) for k in range(1, p)}
    )
