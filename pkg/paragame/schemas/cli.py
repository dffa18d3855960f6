# paragame/schemas/cli.py

from typing import Optional

from pydantic import BaseModel, Field

from paragame.models.verdict import Algorithm


class CliConfig(BaseModel):
    """One parsed command line. Values left as None fall back to settings."""

    command: str
    subcommand: Optional[str] = None
    input: Optional[str] = None
    algorithm: Optional[Algorithm] = None
    start: Optional[str] = None
    output: Optional[str] = None
    csv: Optional[str] = None
    timeout: Optional[float] = Field(default=None, gt=0)
    seed: int = 0
    verbosity: int = Field(default=0, ge=0)
