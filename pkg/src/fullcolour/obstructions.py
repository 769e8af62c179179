"""Minimal obstructions computed by exhaustive search.

``obs_oracle(h)`` lists every minimal H-obstruction. Such a graph is
point-determining and has at most ``|V(h)| + 1`` vertices, so a search over
point-determining graphs of that order is complete. There are three ways
to run it:

* ``"exhaustive"``: filter the whole point-determining enumeration.
* ``"pruned"`` (default): walk the same augmentation tree but only expand
  nodes that are themselves H-colourable.  The canonical parent of a
  minimal obstruction is a proper induced subgraph, hence colourable, and
  so are all its ancestors; nothing is lost.
* a ``catalog`` of graphs (e.g. read from graph6) replaces the generator.
"""
from __future__ import annotations

import functools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .enumeration import SUPPORTED_ORDER, augment, enumerate_graphs
from .errors import PreconditionError, UnsupportedOrder
from .fullhom import full_hom_exists
from .graph_core import (
    CanonicalForm,
    Graph,
    canonical_form,
    delete_vertex,
    disjoint_union,
    is_connected,
    is_isomorphic,
)
from .pd_core import full_core, is_point_determining

MAX_ORACLE_HOST = SUPPORTED_ORDER - 1
STRATEGIES = ("pruned", "exhaustive")


@dataclass(frozen=True)
class ObstructionSet:
    """Pairwise non-isomorphic graphs sorted by canonical key."""

    host: Graph
    members: tuple[tuple[CanonicalForm, Graph], ...]

    @classmethod
    def from_graphs(cls, host: Graph, graphs: Iterable[Graph]) -> ObstructionSet:
        by_key: dict[CanonicalForm, Graph] = {}
        for g in graphs:
            by_key.setdefault(canonical_form(g), g)
        return cls(host, tuple(sorted(by_key.items(), key=lambda kg: kg[0])))

    def keys(self) -> frozenset[CanonicalForm]:
        return frozenset(k for k, _ in self.members)

    def graphs(self) -> list[Graph]:
        return [g for _, g in self.members]

    def __len__(self):
        return len(self.members)

    def __iter__(self) -> Iterator[Graph]:
        return iter(self.graphs())

    def __contains__(self, g: Graph) -> bool:
        return canonical_form(g) in self.keys()

    def same_members(self, other: ObstructionSet) -> bool:
        return self.keys() == other.keys()


def is_minimal_obstruction(g: Graph, h: Graph) -> bool:
    """Not full H-colourable, while every one-vertex deletion is.

    One-vertex deletions suffice: colourability passes to induced subgraphs.
    """
    if full_hom_exists(g, h):
        return False
    if g.n == 1:
        return True
    return all(full_hom_exists(delete_vertex(g, v), h) for v in range(g.n))


def _check_host(h: Graph):
    if h.n > MAX_ORACLE_HOST:
        raise UnsupportedOrder(
            f"oracle needs graphs of order {h.n + 1}; enumeration supports <= {SUPPORTED_ORDER}")


@functools.lru_cache(maxsize=4)
def _pd_catalog(max_order: int) -> tuple[Graph, ...]:
    return tuple(enumerate_graphs(max_order, "point_determining"))


def _filter_chunk(args):
    chunk, h = args
    return [g for g in chunk if is_minimal_obstruction(g, h)]


def _filter(candidates: list[Graph], h: Graph, workers: int) -> list[Graph]:
    if workers <= 1:
        return [g for g in candidates if is_minimal_obstruction(g, h)]
    size = max(1, len(candidates) // (workers * 8))
    chunks = [(candidates[i:i + size], h) for i in range(0, len(candidates), size)]
    with ProcessPoolExecutor(workers) as pool:
        return [g for part in pool.map(_filter_chunk, chunks) for g in part]


def _pruned_walk(h: Graph, top: int) -> list[Graph]:
    k1 = Graph(1, (0,))
    level = [(canonical_form(k1), k1)]
    found = []
    for order in range(1, top + 1):
        nxt = []
        for key, g in level:
            if full_hom_exists(g, h):
                if order < top:
                    nxt.extend(augment(g, key, point_determining=True))
            elif is_minimal_obstruction(g, h):
                found.append(g)
        level = nxt
    return found


def _search(h: Graph, strategy: str, catalog, workers: int, star: bool) -> ObstructionSet:
    top = h.n + 1
    if catalog is not None:
        cands = [g for g in catalog
                 if g.n <= top and (not star or g.n == top) and is_point_determining(g)]
        return ObstructionSet.from_graphs(h, _filter(cands, h, workers))
    _check_host(h)
    if strategy == "pruned":
        found = _pruned_walk(h, top)
    elif strategy == "exhaustive":
        cands = [g for g in _pd_catalog(top) if not star or g.n == top]
        found = _filter(cands, h, workers)
    else:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    if star:
        found = [g for g in found if g.n == top]
    return ObstructionSet.from_graphs(h, found)


def obs_oracle(h: Graph, *, strategy: str = "pruned", catalog: Iterable[Graph] | None = None,
               workers: int = 1) -> ObstructionSet:
    """All minimal H-obstructions, by search."""
    return _search(h, strategy, catalog, workers, star=False)


def obs_star_oracle(h: Graph, *, strategy: str = "pruned",
                    catalog: Iterable[Graph] | None = None, workers: int = 1) -> ObstructionSet:
    """Minimal H-obstructions with exactly ``|V(h)| + 1`` vertices."""
    return _search(h, strategy, catalog, workers, star=True)


# ---------------------------------------------------------------------------
# structural checks


@dataclass(frozen=True)
class TransferReport:
    """Both sides of obs(G) = (obs(H) - {G}) + obs*(G), as canonical keys."""

    host: Graph
    graph: Graph
    lhs: tuple[CanonicalForm, ...]
    rhs: tuple[CanonicalForm, ...]

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def check_obs_transfer(h: Graph, g: Graph, **oracle_kw) -> TransferReport:
    """Compare obs(g) with (obs(h) minus g) plus obs*(g), entirely by oracle."""
    if g not in obs_star_oracle(h, **oracle_kw):
        raise PreconditionError("g is not a minimal h-obstruction on |V(h)|+1 vertices")
    _check_host(g)
    lhs = obs_oracle(g, **oracle_kw).keys()
    rhs = (obs_oracle(h, **oracle_kw).keys() - {canonical_form(g)}) \
        | obs_star_oracle(g, **oracle_kw).keys()
    return TransferReport(h, g, tuple(sorted(lhs)), tuple(sorted(rhs)))


def construct_witness_host(g: Graph) -> Graph:
    """Disjoint union of the full-cores of all ``g - x``, in vertex order.

    ``g`` is then a minimal obstruction of the result; this is checked before
    returning.
    """
    if g.n < 2 or not is_connected(g) or not is_point_determining(g):
        raise PreconditionError("need a connected point-determining graph on >= 2 vertices")
    host = disjoint_union([full_core(delete_vertex(g, x))[0] for x in range(g.n)])
    if not is_minimal_obstruction(g, host):
        raise AssertionError("constructed host does not have g as a minimal obstruction")
    return host


def obs_star_existence_regular(g: Graph) -> bool:
    """Whether g is in obs*(h) for some h, for regular point-determining g.

    Any such h is isomorphic to some ``g - x``, and membership in obs*(g - x)
    is the same as being a minimal (g - x)-obstruction.
    """
    if g.n < 2 or not g.is_regular() or not is_point_determining(g):
        raise PreconditionError("need a regular point-determining graph on >= 2 vertices")
    return any(is_minimal_obstruction(g, delete_vertex(g, x)) for x in range(g.n))


def obs_star_hosts(g: Graph) -> list[Graph]:
    """Pairwise non-isomorphic h of order ``|V(g)| - 1`` with g in obs*(h).

    A colourable point-determining graph on ``|V(h)|`` vertices embeds onto
    h, and g has a vertex whose deletion stays point-determining, so the
    vertex-deleted subgraphs of g are the only candidates.
    """
    hosts: list[Graph] = []
    for x in range(g.n):
        h = delete_vertex(g, x)
        if any(is_isomorphic(h, k) for k in hosts):
            continue
        if is_minimal_obstruction(g, h):
            hosts.append(h)
    return hosts
