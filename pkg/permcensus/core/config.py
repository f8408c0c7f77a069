import os
from typing import Any, Dict, Mapping, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

DEFAULT_CENSUS_BUDGET = 11
DEFAULT_BLOCK_SIZE = 32768
DEFAULT_GUARD = 2

ENV_PREFIX = "PERMCENSUS_"


class Settings(BaseModel):
    """
    Runtime configuration.

    Resolution order: defaults, then PERMCENSUS_* environment variables,
    then command line flags.
    """
    census_budget: int = Field(default=DEFAULT_CENSUS_BUDGET, ge=0, le=100)
    jobs: int = Field(default=1, ge=1)
    block_size: int = Field(default=DEFAULT_BLOCK_SIZE, ge=1)
    guard: int = Field(default=DEFAULT_GUARD, ge=0)
    log_level: str = "WARNING"
    json_logs: bool = False

    model_config = ConfigDict(frozen=True)

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level {value!r}.")
        return level

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        environ = os.environ if environ is None else environ
        values: Dict[str, Any] = {}
        for name in cls.model_fields:
            raw = environ.get(ENV_PREFIX + name.upper())
            if raw is not None:
                values[name] = raw
        return cls.model_validate(values)

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Copy with every non-None override applied (and validated)."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if not changes:
            return self
        return type(self).model_validate({**self.model_dump(), **changes})
