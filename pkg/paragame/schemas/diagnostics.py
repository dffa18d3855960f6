# paragame/schemas/diagnostics.py

import enum
from typing import Optional

from pydantic import BaseModel


class Severity(str, enum.Enum):
    ERROR = "error"
    WARNING = "warning"


class Diagnostic(BaseModel):
    severity: Severity
    message: str
    vertex: Optional[str] = None
    action: Optional[str] = None

    def render(self) -> str:
        where = ""
        if self.vertex is not None:
            where = f" at ({self.vertex}" + (f", {self.action})" if self.action else ")")
        return f"{self.severity.value}{where}: {self.message}"
