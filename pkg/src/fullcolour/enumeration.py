"""Isomorph-free generation of small graphs by canonical augmentation.

A child is a parent plus one new vertex joined to some subset of the old
ones.  It is kept iff the new vertex is the child's canonical deletion
vertex: among the eligible vertices of maximum invariant (degree, then sum
of neighbour degrees), the one whose deletion has the least canonical key.
Two kept children can only coincide when they come from the same parent,
so a per-parent set of keys replaces any global seen-table.

For the point-determining tree a vertex is eligible only if deleting it
keeps the graph point-determining; every non-trivial point-determining
graph has such a vertex, so the tree still reaches all of them.
"""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from .errors import UnsupportedOrder
from .graph_core import CanonicalForm, Graph, canonical_form, is_connected
from .pd_core import is_point_determining

log = logging.getLogger(__name__)

FILTERS = ("all", "point_determining", "connected", "connected_regular")
SUPPORTED_ORDER = 10
BEST_EFFORT_ORDER = 11


@dataclass(frozen=True)
class EnumerationRequest:
    max_order: int
    filter: str = "all"
    best_effort: bool = False

    def __post_init__(self):
        if self.filter not in FILTERS:
            raise ValueError(f"unknown filter {self.filter!r}; expected one of {FILTERS}")
        if self.max_order < 1:
            raise UnsupportedOrder("max_order must be at least 1")
        limit = BEST_EFFORT_ORDER if self.best_effort else SUPPORTED_ORDER
        if self.max_order > limit:
            hint = "" if self.best_effort else " (order 11 needs best_effort=True)"
            raise UnsupportedOrder(f"enumeration supports max_order <= {limit}{hint}")


def _trusted(n: int, rows) -> Graph:
    # rows are built here from a valid graph; skip re-validation
    g = object.__new__(Graph)
    object.__setattr__(g, "n", n)
    object.__setattr__(g, "rows", tuple(rows))
    return g


def _without(rows: list[int], v: int) -> Graph:
    low = (1 << v) - 1
    out = [(r & low) | ((r >> (v + 1)) << v) for u, r in enumerate(rows) if u != v]
    return _trusted(len(out), out)


def _non_removable(rows: list[int]) -> int:
    bad = 0
    n = len(rows)
    for x in range(n):
        rx = rows[x]
        for y in range(x + 1, n):
            d = rx ^ rows[y]
            if d & (d - 1) == 0:
                bad |= d
    return bad


def _accept(rows: list[int], parent_key: CanonicalForm, point_determining: bool) -> bool:
    new = len(rows) - 1
    deg = [r.bit_count() for r in rows]
    inv = []
    for r, d in zip(rows, deg):
        s = 0
        while r:
            low = r & -r
            s += deg[low.bit_length() - 1]
            r ^= low
        inv.append((d << 10) | s)
    f0 = inv[new]
    higher = [v for v in range(new) if inv[v] > f0]
    ties = [v for v in range(new) if inv[v] == f0]
    if point_determining and (higher or ties):
        bad = _non_removable(rows)
        higher = [v for v in higher if not (bad >> v) & 1]
        ties = [v for v in ties if not (bad >> v) & 1]
    if higher:
        return False
    for w in ties:
        if canonical_form(_without(rows, w)) < parent_key:
            return False
    return True


def augment(parent: Graph, parent_key: CanonicalForm | None = None,
            point_determining: bool = False) -> list[tuple[CanonicalForm, Graph]]:
    """Canonical children of ``parent``, as ``(key, graph)`` sorted by key."""
    if parent_key is None:
        parent_key = canonical_form(parent)
    n = parent.n
    rows = parent.rows
    bit = 1 << n
    taken = set(rows) if point_determining else ()
    kept: dict[CanonicalForm, Graph] = {}
    for s in range(1 << n):
        # the new vertex would be a false twin of some x
        if s in taken:
            continue
        crow = [r | bit if (s >> x) & 1 else r for x, r in enumerate(rows)]
        crow.append(s)
        if _accept(crow, parent_key, point_determining):
            child = _trusted(n + 1, crow)
            kept.setdefault(canonical_form(child), child)
    return sorted(kept.items())


def _augment_chunk(args):
    chunk, point_determining = args
    out = []
    for key, g in chunk:
        out.extend(augment(g, key, point_determining))
    return out


def generate_levels(max_order: int, point_determining: bool = False, workers: int = 1
                    ) -> Iterator[tuple[int, list[tuple[CanonicalForm, Graph]]]]:
    """Yield ``(order, classes)`` for orders 1..max_order, classes sorted by key."""
    k1 = Graph(1, (0,))
    level = [(canonical_form(k1), k1)]
    yield 1, level
    pool = ProcessPoolExecutor(workers) if workers > 1 else None
    try:
        for order in range(2, max_order + 1):
            if pool is None:
                children = _augment_chunk((level, point_determining))
            else:
                size = max(1, len(level) // (workers * 8))
                chunks = [(level[i:i + size], point_determining) for i in range(0, len(level), size)]
                children = [c for part in pool.map(_augment_chunk, chunks) for c in part]
            children.sort(key=lambda kg: kg[0])
            log.debug("order %d: %d classes", order, len(children))
            yield order, children
            level = children
    finally:
        if pool is not None:
            pool.shutdown()


def matches_filter(g: Graph, flt: str) -> bool:
    """Whether ``g`` satisfies the named filter predicate."""
    if flt == "all":
        return True
    if flt == "point_determining":
        return is_point_determining(g)
    if not is_connected(g):
        return False
    return flt == "connected" or g.is_regular()


def enumerate_graphs(max_order: int | EnumerationRequest, filter: str = "all", *,
                     workers: int = 1, best_effort: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class, by ascending order then canonical key."""
    req = max_order if isinstance(max_order, EnumerationRequest) else \
        EnumerationRequest(max_order, filter, best_effort)
    pd = req.filter == "point_determining"
    for _, classes in generate_levels(req.max_order, pd, workers):
        for _, g in classes:
            # the point-determining tree needs no post-filter
            if pd or matches_filter(g, req.filter):
                yield g


def enumerate_regular_connected(max_order: int, *, workers: int = 1) -> Iterator[Graph]:
    """Connected k-regular classes (every k) up to ``max_order``."""
    return enumerate_graphs(max_order, "connected_regular", workers=workers)
