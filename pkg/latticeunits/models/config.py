"""
Model for run configuration
"""

import logging
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator
from sympy import isprime

from latticeunits.data import get_default_value
from latticeunits.errors import DocumentValidationError

logger = logging.getLogger(__name__)

GENERATED_PREFIX = "psl2:"


class RunConfig(BaseModel):
    """
    Options for one command-line run
    """

    command: str = Field(title="Command to run", examples=["decide", "help-check"])
    inputs: list[str] = Field(
        default_factory=lambda: list(get_default_value("inputs")),
        title="Input documents",
    )
    p: Optional[int] = Field(default=get_default_value("p"), title="Prime", ge=2)
    prune: bool = Field(
        default=get_default_value("prune"), title="Prune the search with gamma bounds"
    )
    threads: int = Field(
        default=get_default_value("threads"),
        ge=1,
        title="Threads used to build candidate domains",
    )
    emit_witness: bool = Field(
        default=get_default_value("emit_witness"), title="Print SAT witnesses"
    )
    output_format: Literal["text", "structured"] = Field(
        default=get_default_value("output_format"), title="Output format"
    )
    output: Optional[str] = Field(
        default=get_default_value("output"), title="Optional path for CSV reports"
    )

    model_config = ConfigDict(extra="forbid")

    @model_validator(mode="after")
    def validate_inputs(self):
        """
        Ensure the prime is prime and referenced files exist

        :return: self
        """
        if self.p is not None and not isprime(self.p):
            raise DocumentValidationError(f"{self.p} is not a prime")
        for path in self.inputs:
            if path.startswith(GENERATED_PREFIX):
                continue
            if not Path(path).exists():
                err = f"Input file {path} does not exist"
                logger.error(err)
                raise DocumentValidationError(err)
        return self
