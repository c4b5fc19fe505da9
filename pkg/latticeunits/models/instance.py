"""
Model for instance bundles: a table, the defect 1 blocks to test and a candidate unit
"""

from typing import Union

from pydantic import BaseModel, ConfigDict, Field, field_validator
from sympy import isprime

from latticeunits.errors import DocumentValidationError
from latticeunits.models.candidate import UnitCandidate


class InstanceBundle(BaseModel):
    """
    Bundle of references describing one decision problem
    """

    name: str = Field(default="instance", title="Name of the instance")
    p: int = Field(title="Prime", ge=2, examples=[3, 5])
    table: str = Field(
        title="Character table reference",
        examples=["psl2:16", "tables/psl2_19.json"],
    )
    trees: list[str] = Field(
        title="Brauer tree references, one per block",
        min_length=1,
        examples=[["psl2:19:5"], ["tree_p3_principal.json"]],
    )
    candidate: Union[str, UnitCandidate] = Field(
        title="Candidate unit, inline or as a reference"
    )
    skewfield_free: bool = Field(
        default=True,
        title="The blocks involve no matrix algebras over non-commutative skewfields",
    )

    model_config = ConfigDict(extra="forbid")

    @field_validator("p")
    @classmethod
    def validate_prime(cls, value: int) -> int:
        """
        Ensure p is prime

        :param value: p
        :return: p
        """
        if not isprime(value):
            raise DocumentValidationError(f"{value} is not a prime")
        return value
