"""Full-homomorphism decisions, witnesses and blow-up recognition.

A full-homomorphism keeps both edges and non-edges.  Its image of a
point-determining graph is an induced copy, so deciding ``g -> h`` amounts
to collapsing ``g`` to its full-core and looking for the core as an induced
subgraph of ``h``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError
from .graph_core import (
    Graph,
    contains_induced,
    cycle,
    find_induced_embedding,
    make_named,
)
from .pd_core import full_core, is_linear_forest

BRUTE_MAX_SOURCE = 7
BRUTE_MAX_TARGET = 6


@dataclass(frozen=True)
class FullHomWitness:
    """``assignment[v]`` is the image in the host of source vertex ``v``."""

    assignment: tuple[int, ...]

    def is_valid(self, g: Graph, h: Graph) -> bool:
        return is_full_homomorphism(g, h, self.assignment)


def is_full_homomorphism(g: Graph, h: Graph, assignment: Sequence[int]) -> bool:
    if len(assignment) != g.n or any(not 0 <= a < h.n for a in assignment):
        return False
    for u in range(g.n):
        au = assignment[u]
        for v in range(u + 1, g.n):
            av = assignment[v]
            if g.adjacent(u, v):
                if au == av or not h.adjacent(au, av):
                    return False
            elif au != av and h.adjacent(au, av):
                return False
    return True


def full_hom_witness(g: Graph, h: Graph) -> FullHomWitness | None:
    """First full-homomorphism ``g -> h`` found through the full-core, or None."""
    core, collapse = full_core(g)
    emb = find_induced_embedding(core, h)
    if emb is None:
        return None
    w = FullHomWitness(tuple(emb[c] for c in collapse.assignment))
    if not w.is_valid(g, h):
        raise AssertionError("core embedding did not lift to a full-homomorphism")
    return w


def full_hom_exists(g: Graph, h: Graph) -> bool:
    core, _ = full_core(g)
    return find_induced_embedding(core, h) is not None


def full_hom_brute(g: Graph, h: Graph) -> bool:
    """Exhaustive assignment search, independent of cores and embeddings.

    Assignments are extended vertex by vertex and a branch is abandoned as
    soon as a placed pair breaks the edge/non-edge condition.
    """
    if g.n > BRUTE_MAX_SOURCE or h.n > BRUTE_MAX_TARGET:
        raise DomainError(
            f"brute force limited to |V(g)| <= {BRUTE_MAX_SOURCE}, |V(h)| <= {BRUTE_MAX_TARGET}")
    n, m = g.n, h.n
    img = [0] * n

    def place(i):
        if i == n:
            return True
        for a in range(m):
            for j in range(i):
                b = img[j]
                if g.adjacent(i, j):
                    if a == b or not h.adjacent(a, b):
                        break
                elif a != b and h.adjacent(a, b):
                    break
            else:
                img[i] = a
                if place(i + 1):
                    return True
        return False

    return place(0)


# ---------------------------------------------------------------------------
# blow-ups of linear forests


@dataclass(frozen=True)
class BlowupCheck:
    is_blowup: bool
    obstruction: Graph | None = None

    def __bool__(self):
        return self.is_blowup


def forbidden_for_blowups(n: int) -> list[Graph]:
    """A, B, E and the cycles C_3, C_5..C_n (those that fit in ``n`` vertices)."""
    out = [cycle(3)] if n >= 3 else []
    out += [cycle(m) for m in range(5, n + 1)]
    if n >= 6:
        out += [make_named(x) for x in "ABE"]
    return out


def _first_forbidden(g: Graph) -> Graph | None:
    for f in forbidden_for_blowups(g.n):
        if contains_induced(g, f):
            return f
    return None


def is_blowup_of_linear_forest(g: Graph) -> BlowupCheck:
    """Decide via the full-core; on failure report an induced forbidden graph."""
    core, _ = full_core(g)
    if is_linear_forest(core):
        return BlowupCheck(True)
    return BlowupCheck(False, _first_forbidden(g))


def is_blowup_by_forbidden(g: Graph) -> bool:
    """Same question answered by forbidden induced subgraphs only."""
    return _first_forbidden(g) is None
