"""
Model for the verdict of a decision run
"""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Verdict(BaseModel):
    """
    Outcome of deciding whether a unit exists in a block
    """

    status: Literal["SAT", "UNSAT"] = Field(title="Verdict")
    block: str = Field(default="B0", title="Name of the block")
    p: int = Field(title="Prime", ge=2)
    witness: Optional[dict[str, list[int]]] = Field(
        default=None,
        title="Module assignment in partition-array form, keyed 'M|chi|j' or 'S|psi|j'",
        examples=[{"M|chi10|0": [3, 1], "S|psi10|0": [3, 1]}],
    )
    nodes: int = Field(default=0, ge=0, title="Search nodes explored")
    failing_family: Optional[str] = Field(
        default=None,
        title="First constraint family which ruled out a candidate",
        examples=["dimension", "eigen_filtration", "gamma_bound", "tree_filtration"],
    )
    detail: Optional[str] = Field(default=None, title="Human-readable diagnostic")

    model_config = ConfigDict(extra="forbid")

    @property
    def sat(self) -> bool:
        """
        Whether the verdict is SAT

        :return: boolean
        """
        return self.status == "SAT"
