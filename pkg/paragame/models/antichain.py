# paragame/models/antichain.py
"""
Antichains over Eve's vertices (v, K) of the knowledge game, ordered by
(v, K) ⪯ (v', K') iff v = v' and K ⊆ K'.

Knowledge sets are stored either as lattice ids (LatticeOrder) or as raw
IntervalSets (SetOrder). Both orders expose the same handful of
operations, so the antichain code is written once.
"""
from __future__ import annotations

from typing import Any, Hashable, Iterable, Iterator, Mapping, Protocol, Sequence

from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet
from paragame.models.lattice import Lattice

Knowledge = Hashable
Pair = tuple[str, Any]


class KnowledgeOrder(Protocol):
    top: Any
    bottom: Any

    def leq(self, a: Any, b: Any) -> bool: ...
    def meet(self, a: Any, b: Any) -> Any: ...
    def join(self, a: Any, b: Any) -> Any: ...
    def from_set(self, k: IntervalSet) -> Any: ...
    def to_set(self, a: Any) -> IntervalSet: ...


class SetOrder:
    top = NATURALS
    bottom = EMPTY

    def leq(self, a: IntervalSet, b: IntervalSet) -> bool:
        return a == b or a.is_subset(b)

    def meet(self, a: IntervalSet, b: IntervalSet) -> IntervalSet:
        return a & b

    def join(self, a: IntervalSet, b: IntervalSet) -> IntervalSet:
        return a | b

    def from_set(self, k: IntervalSet) -> IntervalSet:
        return k

    def to_set(self, a: IntervalSet) -> IntervalSet:
        return a

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SetOrder)

    def __hash__(self) -> int:
        return hash(SetOrder)


SET_ORDER = SetOrder()


class LatticeOrder:
    def __init__(self, lattice: Lattice):
        self.lattice = lattice
        self.top = lattice.top
        self.bottom = lattice.bottom

    def leq(self, a: int, b: int) -> bool:
        return self.lattice.leq(a, b)

    def meet(self, a: int, b: int) -> int:
        return self.lattice.meet(a, b)

    def join(self, a: int, b: int) -> int:
        return self.lattice.join(a, b)

    def from_set(self, k: IntervalSet) -> int:
        return self.lattice.id_of(k)

    def to_set(self, a: int) -> IntervalSet:
        return self.lattice.elem(a)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LatticeOrder) and other.lattice is self.lattice

    def __hash__(self) -> int:
        return id(self.lattice)


# ---------------------------
# Helpers on plain families
# ---------------------------

def reduce_family(order: KnowledgeOrder, items: Iterable[Any]) -> tuple[Any, ...]:
    """Maximal elements of a family of knowledge sets (duplicates collapse)."""
    unique = list(dict.fromkeys(items))
    kept = [
        x for x in unique
        if not any(y != x and order.leq(x, y) for y in unique)
    ]
    if not kept:
        kept = [order.bottom]
    return tuple(sorted(kept, key=lambda x: order.to_set(x).format()))


def leq_sim(order: KnowledgeOrder, left: Iterable[Pair], right: Iterable[Pair]) -> bool:
    """L ⊑̃ L': every element of L is below some element of L'.

    Every vertex implicitly holds the bottom element, so (v, bottom) is
    dominated even when L' has no entry at v.
    """
    by_vertex: dict[str, list[Any]] = {}
    for v, k in right:
        by_vertex.setdefault(v, []).append(k)
    return all(
        order.leq(k, order.bottom) or any(order.leq(k, other) for other in by_vertex.get(v, ()))
        for v, k in left
    )


class KnowledgeAntichain:
    def __init__(self, order: KnowledgeOrder, vertices: Sequence[str], entries: Mapping[str, Sequence[Any]]):
        self.order = order
        self.vertices: tuple[str, ...] = tuple(vertices)
        self._entries: dict[str, tuple[Any, ...]] = {
            v: tuple(entries.get(v, ())) or (order.bottom,) for v in self.vertices
        }

    # ─────────────────────────────────────────────
    # Construction
    # ─────────────────────────────────────────────
    @classmethod
    def reduce(cls, order: KnowledgeOrder, vertices: Sequence[str], pairs: Iterable[Pair]) -> "KnowledgeAntichain":
        grouped: dict[str, list[Any]] = {v: [] for v in vertices}
        for v, k in pairs:
            grouped.setdefault(v, []).append(k)
        return cls(order, vertices, {v: reduce_family(order, ks) for v, ks in grouped.items()})

    @classmethod
    def initial(cls, order: KnowledgeOrder, vertices: Sequence[str], target: str) -> "KnowledgeAntichain":
        """W^0: (t, ℕ) and (v, ∅) everywhere else."""
        return cls(order, vertices, {v: (order.top if v == target else order.bottom,) for v in vertices})

    # ─────────────────────────────────────────────
    # Access
    # ─────────────────────────────────────────────
    def at(self, v: str) -> tuple[Any, ...]:
        return self._entries[v]

    def pairs(self) -> Iterator[Pair]:
        for v in self.vertices:
            for k in self._entries[v]:
                yield v, k

    def stores(self, v: str, k: Any) -> bool:
        return k in self._entries[v]

    def dominated(self, v: str, k: Any) -> bool:
        """(v, K) is in the down-closure, answered on the stored maxima only."""
        leq = self.order.leq
        return any(leq(k, s) for s in self._entries[v])

    def changed_vertices(self, other: "KnowledgeAntichain") -> set[str]:
        return {v for v in self.vertices if set(self._entries[v]) != set(other._entries.get(v, ()))}

    # ─────────────────────────────────────────────
    # Lattice operations on antichains
    # ─────────────────────────────────────────────
    def join(self, other: "KnowledgeAntichain | Iterable[Pair]") -> "KnowledgeAntichain":
        extra = other.pairs() if isinstance(other, KnowledgeAntichain) else other
        return KnowledgeAntichain.reduce(self.order, self.vertices, [*self.pairs(), *extra])

    def meet(self, other: "KnowledgeAntichain") -> "KnowledgeAntichain":
        meet = self.order.meet
        pairs = [
            (v, meet(a, b))
            for v in self.vertices
            for a in self._entries[v]
            for b in other.at(v)
        ]
        return KnowledgeAntichain.reduce(self.order, self.vertices, pairs)

    def leq_sim(self, other: "KnowledgeAntichain") -> bool:
        return leq_sim(self.order, self.pairs(), other.pairs())

    def equals(self, other: "KnowledgeAntichain") -> bool:
        if self.order != other.order:
            return self.to_sets().equals(other.to_sets())
        return self.vertices == other.vertices and all(
            set(self._entries[v]) == set(other._entries[v]) for v in self.vertices
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, KnowledgeAntichain) and self.equals(other)

    __hash__ = None  # type: ignore[assignment]

    # ─────────────────────────────────────────────
    # Conversions
    # ─────────────────────────────────────────────
    def to_sets(self) -> "KnowledgeAntichain":
        if isinstance(self.order, SetOrder):
            return self
        to_set = self.order.to_set
        return KnowledgeAntichain(
            SET_ORDER, self.vertices, {v: tuple(to_set(k) for k in ks) for v, ks in self._entries.items()}
        )

    def to_lattice(self, lattice: Lattice) -> "KnowledgeAntichain":
        order = LatticeOrder(lattice)
        to_set = self.order.to_set
        return KnowledgeAntichain(
            order, self.vertices, {v: tuple(lattice.id_of(to_set(k)) for k in ks) for v, ks in self._entries.items()}
        )

    def down_closure(self, lattice: Lattice) -> set[tuple[str, int]]:
        """The down-closure restricted to the elements of `lattice`, as (vertex, id) pairs."""
        to_set = self.order.to_set
        closure = set()
        for v in self.vertices:
            maxima = [to_set(k) for k in self._entries[v]]
            for j, elem in enumerate(lattice.elements):
                if any(elem.is_subset(m) for m in maxima):
                    closure.add((v, j))
        return closure

    # ─────────────────────────────────────────────
    # Text
    # ─────────────────────────────────────────────
    def format_lines(self) -> list[str]:
        to_set = self.order.to_set
        lines = []
        for v in self.vertices:
            texts = sorted(to_set(k).format() for k in self._entries[v])
            lines.append(f"{v} : {' | '.join(texts)}".rstrip())
        return lines

    def format(self) -> str:
        return "\n".join(self.format_lines()) + "\n"

    def as_text_map(self) -> dict[str, list[str]]:
        to_set = self.order.to_set
        return {v: sorted(to_set(k).format() for k in self._entries[v]) for v in self.vertices}

    def __repr__(self) -> str:
        body = ", ".join(f"{v}: {ks}" for v, ks in self.as_text_map().items())
        return f"KnowledgeAntichain({body})"
