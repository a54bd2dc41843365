"""Validated command-line configuration."""

import argparse
from typing import Literal, Optional

from pydantic import BaseModel, Field, model_validator

from fibwords.models.params import Params
from fibwords.models.report import IdentityId
from fibwords.schemas.word import WordName

Command = Literal["gen", "decompose", "verify", "stats"]
OutputFormat = Literal["plain", "structured"]

_NEEDS_N = {"gen", "decompose"}
_NEEDS_AB = {"gen", "decompose", "stats"}


class CliConfig(BaseModel):
    """One CLI invocation after argument parsing.

    Ranges are inclusive (lo, hi) pairs. Fields a command does not use keep
    their defaults.
    """

    command: Command
    a: Optional[int] = Field(default=None, ge=1)
    b: Optional[int] = Field(default=None, ge=1)
    n: Optional[int] = Field(default=None, ge=0)
    a_range: Optional[tuple[int, int]] = None
    b_range: Optional[tuple[int, int]] = None
    n_max: Optional[int] = Field(default=None, ge=0)
    classical: bool = False
    word: WordName = "f"
    length_only: bool = False
    depth: int = Field(default=0, ge=0)
    expand_i: bool = False
    compose_twice: bool = False
    ids: Optional[list[IdentityId]] = None
    workers: Optional[int] = Field(default=None, ge=1, le=32)
    output_format: OutputFormat = "plain"
    length_cap: Optional[int] = Field(default=None, ge=1)
    log_level: Optional[Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]] = None

    @model_validator(mode="after")
    def check_command_fields(self) -> "CliConfig":
        """Ensure the chosen command has the values it needs."""
        if self.command in _NEEDS_AB and (self.a is None or self.b is None):
            raise ValueError(f"{self.command} needs --a and --b")
        if self.command in _NEEDS_N and self.n is None:
            raise ValueError(f"{self.command} needs --n")
        for name in ("a_range", "b_range"):
            bounds = getattr(self, name)
            if bounds is not None and not 1 <= bounds[0] <= bounds[1]:
                raise ValueError(f"{name} must satisfy 1 <= lo <= hi, got {bounds}")
        if self.compose_twice and self.command != "decompose":
            raise ValueError("--compose-twice applies to decompose only")
        return self

    @classmethod
    def from_namespace(cls, namespace: argparse.Namespace) -> "CliConfig":
        values = {
            key: value
            for key, value in vars(namespace).items()
            if key in cls.model_fields and value is not None
        }
        return cls.model_validate(values)

    @property
    def params(self) -> Params:
        """Word family of gen, decompose and stats.

        Raises:
            InvalidParamsError: If --classical is used with (a, b) != (1, 1).
        """
        if self.classical:
            return Params(self.a or 1, self.b or 1, "classical-swapped")
        return Params(self.a or 1, self.b or 1)
