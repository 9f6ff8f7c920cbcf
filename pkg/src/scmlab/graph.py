"""Immutable labeled DAGs: relatives, topological order, and edge surgery.

Node declaration order is the canonical order everywhere in this package:
topological ties break by it, set-valued results are reported sorted by it,
and serializers emit it. `Dag` instances are immutable after construction;
surgery returns new graphs, so values are safe to share across threads.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable

from .errors import CycleError, GraphError, UnknownNodeError

Labels = Iterable[str]


def as_labels(value: str | Labels) -> tuple[str, ...]:
    """Normalize a single label or an iterable of labels to a tuple."""
    if isinstance(value, str):
        return (value,)
    return tuple(value)


class Dag:
    """Directed acyclic graph over uniquely labeled nodes.

    Args:
        nodes: node labels in declaration (canonical) order.
        edges: ``(tail, head)`` pairs over declared labels.

    Raises:
        GraphError: bad labels, undeclared endpoints, self-loops, duplicates.
        CycleError: the edges admit no topological order.
    """

    __slots__ = ("nodes", "edges", "_index", "_parents", "_children", "_neighbors", "_topo", "_desc", "_anc")

    def __init__(self, nodes: Labels, edges: Iterable[tuple[str, str]] = ()):
        node_tuple = tuple(nodes)
        for label in node_tuple:
            if not isinstance(label, str) or not label:
                raise GraphError(f"node labels must be non-empty strings, got {label!r}")
        index: dict[str, int] = {}
        for i, label in enumerate(node_tuple):
            if label in index:
                raise GraphError(f"duplicate node label {label!r}")
            index[label] = i

        edge_list = [tuple(edge) for edge in edges]
        edge_set = set(edge_list)
        if len(edge_set) != len(edge_list):
            raise GraphError("duplicate edges are not allowed")
        parents: dict[str, list[str]] = {label: [] for label in node_tuple}
        children: dict[str, list[str]] = {label: [] for label in node_tuple}
        for edge in edge_list:
            if len(edge) != 2:
                raise GraphError(f"edges must be (tail, head) pairs, got {edge!r}")
            tail, head = edge
            for endpoint in (tail, head):
                if endpoint not in index:
                    raise UnknownNodeError(endpoint)
            if tail == head:
                raise GraphError(f"self-loop on {tail!r}")
            parents[head].append(tail)
            children[tail].append(head)

        self.nodes = node_tuple
        self.edges = frozenset(edge_set)
        self._index = index
        self._parents = {v: tuple(sorted(ps, key=index.__getitem__)) for v, ps in parents.items()}
        self._children = {v: tuple(sorted(cs, key=index.__getitem__)) for v, cs in children.items()}
        self._neighbors = {
            v: tuple(sorted(set(self._parents[v]) | set(self._children[v]), key=index.__getitem__))
            for v in node_tuple
        }
        self._topo = self._toposort()
        self._desc: dict[str, frozenset[str]] = {}
        self._anc: dict[str, frozenset[str]] = {}

    # -- basic protocol ----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dag):
            return NotImplemented
        return self.nodes == other.nodes and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.nodes, self.edges))

    def __contains__(self, label: str) -> bool:
        return label in self._index

    def __repr__(self) -> str:
        return f"Dag(nodes={list(self.nodes)!r}, edges={sorted(self.edges)!r})"

    # -- queries -----------------------------------------------------------

    def index(self, label: str) -> int:
        """Position of a label in declaration order."""
        try:
            return self._index[label]
        except KeyError:
            raise UnknownNodeError(label) from None

    def has_edge(self, tail: str, head: str) -> bool:
        return (tail, head) in self.edges

    def parents(self, label: str) -> tuple[str, ...]:
        """Tails of edges into `label`, in canonical order."""
        self.index(label)
        return self._parents[label]

    def children(self, label: str) -> tuple[str, ...]:
        """Heads of edges out of `label`, in canonical order."""
        self.index(label)
        return self._children[label]

    def neighbors(self, label: str) -> tuple[str, ...]:
        """Parents and children of `label`, in canonical order."""
        self.index(label)
        return self._neighbors[label]

    def sort_labels(self, labels: str | Labels) -> tuple[str, ...]:
        """Deduplicate and sort labels into canonical order."""
        return tuple(sorted(set(as_labels(labels)), key=self.index))

    def sorted_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.edges, key=lambda e: (self._index[e[0]], self._index[e[1]])))

    def ancestors(self, labels: str | Labels) -> tuple[str, ...]:
        """Nodes with a directed path of length >= 1 into any of `labels`.

        A node is never its own ancestor, but a member of `labels` that is a
        proper ancestor of another member is included.
        """
        return self._closure(labels, self._anc, self._parents)

    def descendants(self, labels: str | Labels) -> tuple[str, ...]:
        """Nodes reachable from any of `labels` by a directed path of length >= 1."""
        return self._closure(labels, self._desc, self._children)

    def _closure(
        self,
        labels: str | Labels,
        cache: dict[str, frozenset[str]],
        step: dict[str, tuple[str, ...]],
    ) -> tuple[str, ...]:
        result: set[str] = set()
        for label in as_labels(labels):
            self.index(label)
            hit = cache.get(label)
            if hit is None:
                reached: set[str] = set()
                frontier = deque(step[label])
                while frontier:
                    node = frontier.popleft()
                    if node not in reached:
                        reached.add(node)
                        frontier.extend(step[node])
                hit = frozenset(reached)
                cache[label] = hit
            result |= hit
        return tuple(sorted(result, key=self.index))

    def topological_sort(self) -> tuple[str, ...]:
        """Edge-respecting order of all nodes; ties break by declaration order."""
        return self._topo

    def _toposort(self) -> tuple[str, ...]:
        indegree = {v: len(self._parents[v]) for v in self.nodes}
        emitted: list[str] = []
        remaining = list(self.nodes)
        while remaining:
            pick = next((v for v in remaining if indegree[v] == 0), None)
            if pick is None:
                raise CycleError(self._find_cycle(set(remaining)))
            remaining.remove(pick)
            emitted.append(pick)
            for child in self._children[pick]:
                indegree[child] -= 1
        return tuple(emitted)

    def _find_cycle(self, pool: set[str]) -> tuple[str, ...]:
        # Every node in `pool` has an in-pool parent, so walking children
        # inside the pool must revisit a node.
        start = next(v for v in self.nodes if v in pool)
        trail = [start]
        seen = {start: 0}
        while True:
            node = next(c for c in self._children[trail[-1]] if c in pool)
            if node in seen:
                return tuple(trail[seen[node]:]) + (node,)
            seen[node] = len(trail)
            trail.append(node)

    # -- surgery -----------------------------------------------------------

    def remove_outgoing(self, labels: str | Labels) -> "Dag":
        """Copy of the graph with every edge leaving any of `labels` deleted."""
        cut = set(self.sort_labels(labels))
        return Dag(self.nodes, (e for e in self.sorted_edges() if e[0] not in cut))
