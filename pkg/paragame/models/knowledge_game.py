# paragame/models/knowledge_game.py
"""
Explicit knowledge game: Eve nodes (v, K) record what Eve knows about the
number of opponents, Adam nodes (v, K, a) are the moment after Eve picked
action a, and Adam answers with a successor v' consistent with K, which
refines Eve's knowledge to K ∩ ∇(v, a, v').
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from paragame.core.intervalset import IntervalSet


@dataclass(frozen=True)
class EveNode:
    vertex: str
    knowledge: IntervalSet

    def label(self) -> str:
        return f"{self.vertex} | {self.knowledge.format() or '{}'}"


@dataclass(frozen=True)
class AdamNode:
    vertex: str
    knowledge: IntervalSet
    action: str

    def label(self) -> str:
        return f"{self.vertex} | {self.knowledge.format() or '{}'} | {self.action}"


Node = Union[EveNode, AdamNode]


class KnowledgeGame:
    def __init__(self, root: EveNode, target: str):
        self.root = root
        self.target = target
        # dicts as ordered sets: DOT output follows discovery order
        self.eve_nodes: dict[EveNode, None] = {}
        self.adam_nodes: dict[AdamNode, None] = {}
        self.edges: dict[Node, list[Node]] = {}
        self.add_eve(root)

    def add_eve(self, node: EveNode) -> bool:
        if node in self.eve_nodes:
            return False
        self.eve_nodes[node] = None
        self.edges[node] = []
        return True

    def add_adam(self, node: AdamNode) -> bool:
        if node in self.adam_nodes:
            return False
        self.adam_nodes[node] = None
        self.edges[node] = []
        return True

    def add_edge(self, src: Node, dst: Node) -> None:
        self.edges[src].append(dst)

    def is_target(self, node: Node) -> bool:
        return isinstance(node, EveNode) and node.vertex == self.target

    @property
    def targets(self) -> set[EveNode]:
        return {n for n in self.eve_nodes if n.vertex == self.target}

    def successors(self, node: Node) -> list[Node]:
        return self.edges[node]

    def predecessors(self) -> dict[Node, list[Node]]:
        preds: dict[Node, list[Node]] = {n: [] for n in self.edges}
        for src, dsts in self.edges.items():
            for dst in dsts:
                preds[dst].append(src)
        return preds

    def nodes(self) -> Iterator[Node]:
        yield from self.eve_nodes
        yield from self.adam_nodes

    def __contains__(self, node: Node) -> bool:
        return node in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def edge_count(self) -> int:
        return sum(len(d) for d in self.edges.values())

    def to_dot(self, name: str = "knowledge_game") -> str:
        ids = {node: f"n{i}" for i, node in enumerate(self.nodes())}
        lines = [f"digraph {name} {{"]
        for node, nid in ids.items():
            if isinstance(node, AdamNode):
                shape = "box"
                label = node.action
            else:
                shape = "doublecircle" if self.is_target(node) else "ellipse"
                label = node.label()
            extra = ", style=bold" if node == self.root else ""
            lines.append(f'  {nid} [label="{label}", shape={shape}{extra}];')
        for src, dsts in self.edges.items():
            for dst in dsts:
                lines.append(f"  {ids[src]} -> {ids[dst]};")
        lines.append("}")
        return "\n".join(lines) + "\n"
