# paragame/core/deadline.py
import time
from typing import Optional

from paragame.core.errors import SolveTimeout


class Deadline:
    """Cooperative time budget; long loops call `check()`."""

    def __init__(self, seconds: Optional[float] = None):
        self.started = time.perf_counter()
        self.seconds = seconds
        self._limit = None if seconds is None else self.started + seconds

    @classmethod
    def unlimited(cls) -> "Deadline":
        return cls(None)

    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def expired(self) -> bool:
        return self._limit is not None and time.perf_counter() > self._limit

    def check(self) -> None:
        if self.expired():
            raise SolveTimeout(self.elapsed())
