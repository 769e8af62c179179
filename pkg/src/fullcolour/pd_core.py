"""Twins, point-determining graphs, full-cores and linear forests."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import DomainError, NotALinearForest
from .graph_core import (
    Graph,
    connected_components,
    delete_vertex,
    disjoint_union,
    induced_subgraph,
    path,
)


def false_twins(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``(u, v)``, ``u < v``, with N(u) = N(v), in lexicographic order."""
    rows = g.rows
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if rows[u] == rows[v]]


def true_twins(g: Graph) -> list[tuple[int, int]]:
    """Pairs ``(u, v)``, ``u < v``, with N[u] = N[v]."""
    closed = [r | (1 << v) for v, r in enumerate(g.rows)]
    return [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if closed[u] == closed[v]]


def is_point_determining(g: Graph) -> bool:
    return len(set(g.rows)) == g.n


@dataclass(frozen=True)
class CollapseMap:
    """``assignment[v]`` is the core vertex that source vertex ``v`` maps to."""

    source_order: int
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source_order:
            raise ValueError("assignment must cover every source vertex")

    def is_identity(self) -> bool:
        return self.assignment == tuple(range(self.source_order))


def full_core(g: Graph) -> tuple[Graph, CollapseMap]:
    """Collapse false twins until none remain.

    The lexicographically least twin pair is merged first and the lower
    label survives, so the returned map is reproducible.
    """
    assignment = list(range(g.n))
    core = g
    while True:
        pairs = false_twins(core)
        if not pairs:
            break
        u, v = pairs[0]
        # u and v are false twins, so deleting v is the merge
        core = delete_vertex(core, v)
        for s, c in enumerate(assignment):
            if c == v:
                assignment[s] = u
            elif c > v:
                assignment[s] = c - 1
    return core, CollapseMap(g.n, tuple(assignment))


def removable_vertices(g: Graph) -> list[int]:
    """Vertices whose deletion leaves the graph point-determining."""
    if not is_point_determining(g):
        raise DomainError("removable_vertices needs a point-determining graph")
    if g.n == 1:
        return []
    # in a point-determining graph, deleting v creates twins x, y exactly
    # when N(x) and N(y) differ only in v
    bad = 0
    rows = g.rows
    for x in range(g.n):
        for y in range(x + 1, g.n):
            d = rows[x] ^ rows[y]
            if d & (d - 1) == 0:
                bad |= d
    return [v for v in range(g.n) if not (bad >> v) & 1]


# ---------------------------------------------------------------------------
# linear forests


@dataclass(frozen=True)
class LinearForestSpec:
    """Multiset of path sizes: ``multiplicities`` holds ``(i, m_i)`` with ``m_i > 0``."""

    multiplicities: tuple[tuple[int, int], ...]

    def __post_init__(self):
        last = 0
        for i, m in self.multiplicities:
            if i <= last or m <= 0:
                raise ValueError("multiplicities must be sorted by size with positive counts")
            last = i
        if not self.multiplicities:
            raise ValueError("a linear forest has at least one vertex")

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> LinearForestSpec:
        return cls(tuple(sorted((i, m) for i, m in counts.items() if m)))

    @classmethod
    def from_sizes(cls, sizes: Iterable[int]) -> LinearForestSpec:
        counts: dict[int, int] = {}
        for s in sizes:
            if s < 1:
                raise ValueError("path sizes are positive")
            counts[s] = counts.get(s, 0) + 1
        return cls.from_counts(counts)

    def m(self, i: int) -> int:
        return dict(self.multiplicities).get(i, 0)

    @property
    def order(self) -> int:
        return sum(i * m for i, m in self.multiplicities)

    @property
    def components(self) -> int:
        return sum(m for _, m in self.multiplicities)

    def sizes(self) -> list[int]:
        return [i for i, m in self.multiplicities for _ in range(m)]

    def to_graph(self) -> Graph:
        return disjoint_union([path(i) for i in self.sizes()])

    def __str__(self):
        def term(i, m):
            name = "K_1" if i == 1 else "K_2" if i == 2 else f"P_{i}"
            return name if m == 1 else f"{m}{name}"

        return "+".join(term(i, m) for i, m in self.multiplicities)


def linear_forest_spec(g: Graph) -> LinearForestSpec:
    """Path-size multiset of ``g``; raises :class:`NotALinearForest` otherwise."""
    sizes = []
    for comp in connected_components(g):
        h = induced_subgraph(g, comp)
        if h.edge_count != h.n - 1 or max(h.degrees()) > 2:
            raise NotALinearForest(comp)
        sizes.append(h.n)
    return LinearForestSpec.from_sizes(sizes)


def is_linear_forest(g: Graph) -> bool:
    try:
        linear_forest_spec(g)
    except NotALinearForest:
        return False
    return True


def mu(spec: LinearForestSpec) -> int:
    """Smallest path order admitting an injective full-homomorphism from the forest."""
    return spec.order + spec.components - 1
