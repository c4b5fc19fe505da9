"""
Model for candidate torsion units, given by the partial augmentations of their powers
"""

import logging

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import divisors

from latticeunits.errors import DocumentValidationError

logger = logging.getLogger(__name__)


class UnitCandidate(BaseModel):
    """
    A normalized torsion unit of order n, known through the partial augmentations
    pa[d] of u^d for every proper divisor d of n
    """

    order: int = Field(title="Order n of the unit", ge=1, examples=[15, 10])
    pa: dict[int, dict[str, int]] = Field(
        default_factory=dict,
        title="Partial augmentations of u^d, keyed by d",
        examples=[{1: {"15c": -1, "15d": 2}, 3: {"5a": 1}, 5: {"3a": 1}}],
    )

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def validate_divisors(self):
        """
        Ensure that exactly the proper divisors of the order are present

        :return: self
        """
        expected = set(self.proper_divisors())
        given = set(self.pa.keys())
        if expected != given:
            raise DocumentValidationError(
                f"A unit of order {self.order} needs partial augmentations for the "
                f"powers {sorted(expected)}, got {sorted(given)}"
            )
        return self

    @model_validator(mode="after")
    def validate_normalized(self):
        """
        Ensure the partial augmentations of every power sum to 1

        :return: self
        """
        for d, vector in self.pa.items():
            total = sum(vector.values())
            if total != 1:
                raise DocumentValidationError(
                    f"Partial augmentations of u^{d} sum to {total}, not 1"
                )
        return self

    def proper_divisors(self) -> list[int]:
        """
        Divisors d of the order with d < n

        :return: sorted divisors
        """
        return [d for d in divisors(self.order) if d < self.order]

    def power(self, d: int) -> "UnitCandidate":
        """
        The candidate for u^d

        :param d: divisor of the order
        :return: UnitCandidate of order n/d
        """
        if self.order % d != 0:
            raise DocumentValidationError(f"{d} does not divide {self.order}")
        order = self.order // d
        return UnitCandidate(
            order=order,
            pa={e: dict(self.pa[d * e]) for e in divisors(order) if e < order},
        )

    def is_trivial_pattern(self) -> bool:
        """
        Whether all partial augmentations of all powers are non-negative,
        i.e. every power looks like a group element

        :return: boolean
        """
        return all(x >= 0 for vector in self.pa.values() for x in vector.values())
