# paragame/core/errors.py
from __future__ import annotations

from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from paragame.schemas.diagnostics import Diagnostic


class ParaGameError(Exception):
    """
    Base error. `detail` is the human-readable message (same role as
    HTTPException.detail), `exit_code` is what the CLI returns and
    `status_code` what the HTTP layer answers with.
    """

    exit_code: int = 2
    status_code: int = 400

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


# ─────────────────────────────────────────────
# Input errors (exit 2)
# ─────────────────────────────────────────────
class InputError(ParaGameError):
    exit_code = 2
    status_code = 400


class IntervalSyntaxError(InputError):
    pass


class ArenaSyntaxError(InputError):
    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class UnknownNameError(InputError):
    pass


class ArenaValidationError(InputError):
    def __init__(self, diagnostics: list["Diagnostic"]):
        errors = [d for d in diagnostics if d.severity == "error"]
        super().__init__("; ".join(d.message for d in errors) or "invalid arena")
        self.diagnostics = diagnostics


class MissingInitialVertexError(InputError):
    pass


class QdimacsError(InputError):
    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class GeneratorError(InputError):
    pass


class LatticeError(ParaGameError):
    pass


# ─────────────────────────────────────────────
# Resource limits (exit 3)
# ─────────────────────────────────────────────
class ResourceLimitError(ParaGameError):
    exit_code = 3
    status_code = 422


class LatticeCapExceeded(ResourceLimitError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"lattice exceeds {cap} elements (size={size})")
        self.size = size
        self.cap = cap


class SolveTimeout(ResourceLimitError):
    def __init__(self, elapsed: float):
        super().__init__(f"timed out after {elapsed:.3f}s")
        self.elapsed = elapsed


class GuardExceeded(ResourceLimitError):
    pass
