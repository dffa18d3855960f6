# paragame/models/lattice.py
"""
A finite family of knowledge sets ordered by inclusion, stored as an
append-only array (an element is referred to by its index) with the
Hasse diagram kept as explicit parent/child sets.

When the lattice is built from an arena (see controllers.lattice_controller)
every element is a union of *atoms* (the blocks of the partition of ℕ
generated by the constraints), and each element also carries the bitmask
of its atoms. Inclusion, meet and join are then integer operations.
Lattices created without atoms fall back to IntervalSet comparisons.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

from paragame.core.errors import LatticeError
from paragame.core.intervalset import EMPTY, NATURALS, IntervalSet


class Lattice:
    TOP = 0
    BOTTOM = 1

    def __init__(self, atoms: Optional[Sequence[IntervalSet]] = None):
        self.elements: list[IntervalSet] = []
        self.parents: list[set[int]] = []
        self.children: list[set[int]] = []
        self.index: dict[IntervalSet, int] = {}

        self.atoms: Optional[tuple[IntervalSet, ...]] = tuple(atoms) if atoms is not None else None
        self.masks: list[int] = []
        self.mask_index: dict[int, int] = {}
        self.frozen = False

        full = (1 << len(self.atoms)) - 1 if self.atoms is not None else None
        self._add(NATURALS, full)
        self._add(EMPTY, 0 if self.atoms is not None else None)
        self.children[self.TOP].add(self.BOTTOM)
        self.parents[self.BOTTOM].add(self.TOP)

    # ─────────────────────────────────────────────
    # Basic accessors
    # ─────────────────────────────────────────────
    @property
    def top(self) -> int:
        return self.TOP

    @property
    def bottom(self) -> int:
        return self.BOTTOM

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(range(len(self.elements)))

    def __contains__(self, knowledge: IntervalSet) -> bool:
        return knowledge in self.index

    def elem(self, i: int) -> IntervalSet:
        return self.elements[i]

    def id_of(self, knowledge: IntervalSet) -> int:
        try:
            return self.index[knowledge]
        except KeyError:
            raise LatticeError(f"{knowledge.format()!r} is not an element of the lattice") from None

    # ─────────────────────────────────────────────
    # Atom encoding
    # ─────────────────────────────────────────────
    def encode(self, knowledge: IntervalSet) -> int:
        """Bitmask of the atoms included in `knowledge` (which must be a union of atoms)."""
        assert self.atoms is not None
        mask = 0
        covered = EMPTY
        for bit, atom in enumerate(self.atoms):
            if atom.is_subset(knowledge):
                mask |= 1 << bit
                covered = covered | atom
        if covered != knowledge:
            raise LatticeError(f"{knowledge.format()!r} is not a union of atoms")
        return mask

    def decode(self, mask: int) -> IntervalSet:
        assert self.atoms is not None
        pairs = []
        for bit, atom in enumerate(self.atoms):
            if mask >> bit & 1:
                pairs.extend(atom.intervals)
        return IntervalSet(tuple(pairs))

    # ─────────────────────────────────────────────
    # Order
    # ─────────────────────────────────────────────
    def leq(self, i: int, j: int) -> bool:
        if i == j:
            return True
        if self.atoms is not None:
            return self.masks[i] & ~self.masks[j] == 0
        return self.elements[i].is_subset(self.elements[j])

    def _leq_set(self, knowledge: IntervalSet, mask: Optional[int], j: int) -> bool:
        if mask is not None:
            return mask & ~self.masks[j] == 0
        return knowledge.is_subset(self.elements[j])

    def _geq_set(self, knowledge: IntervalSet, mask: Optional[int], j: int) -> bool:
        if mask is not None:
            return self.masks[j] & ~mask == 0
        return self.elements[j].is_subset(knowledge)

    def meet(self, i: int, j: int) -> int:
        if self.atoms is not None:
            found = self.mask_index.get(self.masks[i] & self.masks[j])
            if found is None:
                raise LatticeError("meet is not an element (lattice not closed)")
            return found
        return self.id_of(self.elements[i] & self.elements[j])

    def join(self, i: int, j: int) -> int:
        if self.atoms is not None:
            found = self.mask_index.get(self.masks[i] | self.masks[j])
            if found is None:
                raise LatticeError("join is not an element (lattice not closed)")
            return found
        return self.id_of(self.elements[i] | self.elements[j])

    def dag_leq(self, i: int, j: int) -> bool:
        """Inclusion decided purely on the Hasse diagram (descend from j)."""
        if i == j:
            return True
        seen = {j}
        queue = deque([j])
        while queue:
            node = queue.popleft()
            for c in self.children[node]:
                if c == i:
                    return True
                if c not in seen:
                    seen.add(c)
                    queue.append(c)
        return False

    # ─────────────────────────────────────────────
    # Insertion with Hasse maintenance
    # ─────────────────────────────────────────────
    def _add(self, knowledge: IntervalSet, mask: Optional[int]) -> int:
        i = len(self.elements)
        self.elements.append(knowledge)
        self.parents.append(set())
        self.children.append(set())
        self.index[knowledge] = i
        if self.atoms is not None:
            self.masks.append(mask if mask is not None else self.encode(knowledge))
            self.mask_index[self.masks[i]] = i
        return i

    def insert(self, knowledge: IntervalSet, *, mask: Optional[int] = None) -> int:
        existing = self.index.get(knowledge)
        if existing is not None:
            return existing
        if self.frozen:
            raise LatticeError("lattice is frozen")
        if self.atoms is not None and mask is None:
            mask = self.encode(knowledge)

        # supersets of K: descend from ℕ through elements that include K
        above: set[int] = {self.TOP}
        queue = deque([self.TOP])
        while queue:
            node = queue.popleft()
            for c in self.children[node]:
                if c not in above and self._leq_set(knowledge, mask, c):
                    above.add(c)
                    queue.append(c)
        new_parents = {u for u in above if not (self.children[u] & above)}

        # subsets of K: climb from ∅ through elements included in K
        below: set[int] = {self.BOTTOM}
        queue = deque([self.BOTTOM])
        while queue:
            node = queue.popleft()
            for p in self.parents[node]:
                if p not in below and self._geq_set(knowledge, mask, p):
                    below.add(p)
                    queue.append(p)
        new_children = {d for d in below if not (self.parents[d] & below)}

        k = self._add(knowledge, mask)
        for p in new_parents:
            for c in new_children & self.children[p]:
                self.children[p].discard(c)
                self.parents[c].discard(p)
            self.children[p].add(k)
        for c in new_children:
            self.parents[c].add(k)
        self.parents[k] = new_parents
        self.children[k] = new_children
        return k

    def freeze(self) -> "Lattice":
        self.frozen = True
        return self

    # ─────────────────────────────────────────────
    # Queries used by solvers and reports
    # ─────────────────────────────────────────────
    def height(self) -> int:
        """Number of covers on the longest chain from ∅ to ℕ."""
        # topological pass upwards from ∅; an element is ready once all its children are done
        pending = [len(c) for c in self.children]
        depth = [0] * len(self.elements)
        queue = deque([self.BOTTOM])
        while queue:
            node = queue.popleft()
            for p in self.parents[node]:
                depth[p] = max(depth[p], depth[node] + 1)
                pending[p] -= 1
                if pending[p] == 0:
                    queue.append(p)
        return depth[self.TOP]

    def below(self, i: int) -> list[int]:
        """All element ids included in elem(i) (the downward closure of one element)."""
        return [j for j in range(len(self.elements)) if self.leq(j, i)]

    def covers(self) -> set[tuple[int, int]]:
        return {(p, c) for p in range(len(self.elements)) for c in self.children[p]}

    def element_set(self) -> set[IntervalSet]:
        return set(self.elements)

    @classmethod
    def from_elements(cls, elements: Iterable[IntervalSet]) -> "Lattice":
        lattice = cls()
        for k in elements:
            lattice.insert(k)
        return lattice
