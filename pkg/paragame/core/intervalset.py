# paragame/core/intervalset.py
"""
Finite unions of integer intervals over the opponent counts {1, 2, 3, ...}.

Values are kept in canonical form (sorted, disjoint, non-adjacent), so two
sets are equal iff their interval tuples are equal. That is what lets the
lattice deduplicate by dictionary lookup.

Text grammar:

    set  := '*' | item (',' item)*      ('' is the empty set)
    item := INT | INT '-' INT | INT '-' '*'
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Tuple

from paragame.core.errors import IntervalSyntaxError

INF = math.inf

Interval = Tuple[int, float]

_ITEM_RE = re.compile(r"^(\d+)(?:-(\d+|\*))?$")


def _canonical(pairs: Iterable[Interval]) -> tuple[Interval, ...]:
    items = sorted((lo, hi) for lo, hi in pairs if lo <= hi)
    out: list[Interval] = []
    for lo, hi in items:
        if lo < 1:
            raise ValueError(f"opponent counts start at 1, got {lo}")
        if out and lo <= out[-1][1] + 1:
            prev_lo, prev_hi = out[-1]
            out[-1] = (prev_lo, max(prev_hi, hi))
        else:
            out.append((lo, hi))
    return tuple(out)


@dataclass(frozen=True)
class IntervalSet:
    intervals: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", _canonical(self.intervals))

    # ─────────────────────────────────────────────
    # Constructors
    # ─────────────────────────────────────────────
    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def naturals(cls) -> "IntervalSet":
        return cls(((1, INF),))

    @classmethod
    def singleton(cls, k: int) -> "IntervalSet":
        return cls(((k, k),))

    @classmethod
    def closed(cls, lo: int, hi: int) -> "IntervalSet":
        return cls(((lo, hi),))

    @classmethod
    def at_least(cls, lo: int) -> "IntervalSet":
        return cls(((lo, INF),))

    @classmethod
    def of(cls, values: Iterable[int]) -> "IntervalSet":
        return cls(tuple((k, k) for k in values))

    @classmethod
    def parse(cls, text: str) -> "IntervalSet":
        s = (text or "").strip()
        if not s:
            return cls.empty()
        if s == "*":
            return cls.naturals()

        pairs: list[Interval] = []
        for raw in s.split(","):
            item = raw.strip()
            m = _ITEM_RE.match(item)
            if not m:
                raise IntervalSyntaxError(f"bad interval item {item!r} in {text!r}")
            lo = int(m.group(1))
            hi_text = m.group(2)
            if hi_text is None:
                hi: float = lo
            elif hi_text == "*":
                hi = INF
            else:
                hi = int(hi_text)
            if lo == 0 or hi == 0:
                raise IntervalSyntaxError(f"opponent counts start at 1: {item!r}")
            if lo > hi:
                raise IntervalSyntaxError(f"empty interval {item!r} (lo > hi)")
            pairs.append((lo, hi))
        return cls(tuple(pairs))

    # ─────────────────────────────────────────────
    # Algebra
    # ─────────────────────────────────────────────
    def union(self, other: "IntervalSet") -> "IntervalSet":
        if not other.intervals:
            return self
        if not self.intervals:
            return other
        return IntervalSet(self.intervals + other.intervals)

    def intersect(self, other: "IntervalSet") -> "IntervalSet":
        a, b = self.intervals, other.intervals
        out: list[Interval] = []
        i = j = 0
        while i < len(a) and j < len(b):
            lo = max(a[i][0], b[j][0])
            hi = min(a[i][1], b[j][1])
            if lo <= hi:
                out.append((lo, hi))
            if a[i][1] < b[j][1]:
                i += 1
            else:
                j += 1
        return IntervalSet(tuple(out))

    def complement(self) -> "IntervalSet":
        out: list[Interval] = []
        nxt: float = 1
        for lo, hi in self.intervals:
            if lo > nxt:
                out.append((int(nxt), lo - 1))
            nxt = hi + 1
        if nxt != INF:
            out.append((int(nxt), INF))
        return IntervalSet(tuple(out))

    def difference(self, other: "IntervalSet") -> "IntervalSet":
        if not other.intervals or not self.intervals:
            return self
        return self.intersect(other.complement())

    # ─────────────────────────────────────────────
    # Predicates
    # ─────────────────────────────────────────────
    def is_empty(self) -> bool:
        return not self.intervals

    def is_subset(self, other: "IntervalSet") -> bool:
        return self.difference(other).is_empty()

    def equals(self, other: "IntervalSet") -> bool:
        return self.intervals == other.intervals

    def is_naturals(self) -> bool:
        return self.intervals == ((1, INF),)

    def is_bounded(self) -> bool:
        return not self.intervals or self.intervals[-1][1] != INF

    def __contains__(self, k: int) -> bool:
        return any(lo <= k <= hi for lo, hi in self.intervals)

    # operator sugar
    __or__ = union
    __and__ = intersect
    __sub__ = difference

    def __le__(self, other: "IntervalSet") -> bool:
        return self.is_subset(other)

    def __lt__(self, other: "IntervalSet") -> bool:
        return self != other and self.is_subset(other)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    # ─────────────────────────────────────────────
    # Text
    # ─────────────────────────────────────────────
    def format(self) -> str:
        if self.is_naturals():
            return "*"
        parts = []
        for lo, hi in self.intervals:
            if hi == INF:
                parts.append(f"{lo}-*")
            elif lo == hi:
                parts.append(str(lo))
            else:
                parts.append(f"{lo}-{int(hi)}")
        return ",".join(parts)

    def sort_key(self) -> tuple:
        return self.intervals

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"IntervalSet({self.format()!r})"


EMPTY = IntervalSet.empty()
NATURALS = IntervalSet.naturals()
