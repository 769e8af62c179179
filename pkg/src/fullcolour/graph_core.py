"""Small simple graphs as tuples of adjacency bitmasks.

Every graph in the package is a :class:`Graph`: ``rows[v]`` is an int whose
bit ``u`` is set iff ``u`` and ``v`` are adjacent.  Graphs are immutable
values, so all functions here are pure.

Canonical forms are computed by individualization/refinement: the ordered
partition of the vertices is refined to an equitable one, a vertex of the
first smallest non-singleton cell is individualized, and so on down to
discrete partitions.  The canonical key is the least adjacency bit-string
over the leaves of that search tree; subtrees are skipped when an
automorphism found so far (or a cell of mutual twins) makes them redundant.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError, Graph6ParseError

MAX_ORDER = 32

CanonicalForm = bytes


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Graph:
    """Loopless simple graph on vertices ``0..n-1``."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if not 1 <= n <= MAX_ORDER:
            if n > MAX_ORDER:
                raise CapacityError(f"graph order {n} exceeds capacity {MAX_ORDER}")
            raise DomainError("graphs must have at least one vertex")
        if len(self.rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << n) - 1
        for v, r in enumerate(self.rows):
            if r & ~full:
                raise ValueError(f"row {v} refers to a vertex outside 0..{n - 1}")
            if (r >> v) & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in _bits(r):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n > MAX_ORDER:
            raise CapacityError(f"graph order {n} exceeds capacity {MAX_ORDER}")
        rows = [0] * max(n, 0)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @property
    def order(self) -> int:
        return self.n

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbours(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in _bits(self.rows[v]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph whose vertex ``i`` is the old vertex ``perm[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(perm):
            pos[v] = i
        rows = []
        for v in perm:
            r = 0
            for u in _bits(self.rows[v]):
                r |= 1 << pos[u]
            rows.append(r)
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph({graph6_encode(self)!r})"


# ---------------------------------------------------------------------------
# construction


def make_standard(kind: str, n: int) -> Graph:
    """Path, cycle, complete or empty graph on ``n`` vertices."""
    if n < 1:
        raise DomainError("n must be positive")
    if n > MAX_ORDER:
        raise CapacityError(f"graph order {n} exceeds capacity {MAX_ORDER}")
    if kind == "path":
        return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        if n < 3:
            raise DomainError("a cycle needs at least 3 vertices")
        return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        full = (1 << n) - 1
        return Graph(n, tuple(full & ~(1 << v) for v in range(n)))
    if kind == "empty":
        return Graph(n, (0,) * n)
    raise DomainError(f"unknown graph kind {kind!r}")


def path(n: int) -> Graph:
    return make_standard("path", n)


def cycle(n: int) -> Graph:
    return make_standard("cycle", n)


def complete(n: int) -> Graph:
    return make_standard("complete", n)


def empty(n: int) -> Graph:
    return make_standard("empty", n)


_NAMED_EDGES = {
    "A": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)],
    "B": [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4), (0, 5)],
    "E": [(0, 1), (1, 2), (0, 5), (1, 4), (2, 3)],
}


def make_named(which: str) -> Graph:
    """The six-vertex graphs A, B and E, labelled v0..v5 as drawn.

    A is the path v0..v5 plus the chord v1v4, B adds v0v5, and E is the tree
    whose claw is centred at v1.
    """
    try:
        return Graph.from_edges(6, _NAMED_EDGES[which])
    except KeyError:
        raise DomainError(f"unknown named graph {which!r}; expected A, B or E") from None


def disjoint_union(parts: Sequence[Graph]) -> Graph:
    if not parts:
        raise DomainError("disjoint union of nothing")
    total = sum(p.n for p in parts)
    if total > MAX_ORDER:
        raise CapacityError(f"graph order {total} exceeds capacity {MAX_ORDER}")
    rows: list[int] = []
    for p in parts:
        shift = len(rows)
        rows.extend(r << shift for r in p.rows)
    return Graph(total, tuple(rows))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``; labels are compacted in increasing order."""
    keep = sorted(set(vertices))
    if not keep:
        raise DomainError("induced subgraph on an empty vertex set")
    for v in keep:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} not in graph of order {g.n}")
    pos = {v: i for i, v in enumerate(keep)}
    rows = []
    for v in keep:
        r = 0
        for u in _bits(g.rows[v]):
            if u in pos:
                r |= 1 << pos[u]
        rows.append(r)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.n:
        raise DomainError(f"vertex {v} not in graph of order {g.n}")
    if g.n == 1:
        raise DomainError("deleting the only vertex leaves no graph")
    low = (1 << v) - 1
    rows = []
    for u, r in enumerate(g.rows):
        if u != v:
            rows.append((r & low) | ((r >> (v + 1)) << v))
    return Graph(g.n - 1, tuple(rows))


def connected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the components, ordered by least vertex."""
    seen = 0
    comps = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = frontier = 1 << start
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(_bits(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# ---------------------------------------------------------------------------
# canonical forms


def _refine(rows: Sequence[int], n: int, cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of the ordered partition ``cells``.

    Fragments of a split cell stay in place, ordered by their neighbour count
    into the splitting set, so the result is label-equivariant.
    """
    queue = deque()
    for c in cells:
        m = 0
        for v in c:
            m |= 1 << v
        queue.append(m)
    while queue and len(cells) < n:
        w = queue.popleft()
        out = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[int, list[int]] = {}
            for v in c:
                groups.setdefault((rows[v] & w).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(c)
                continue
            for k in sorted(groups):
                frag = groups[k]
                out.append(frag)
                m = 0
                for v in frag:
                    m |= 1 << v
                queue.append(m)
        cells = out
    return cells


def _leaf_code(rows: Sequence[int], perm: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(perm)):
        rj = rows[perm[j]]
        for i in range(j):
            code = (code << 1) | ((rj >> perm[i]) & 1)
    return code


def _mutual_twins(rows: Sequence[int], cell: Sequence[int]) -> bool:
    first = cell[0]
    r0 = rows[first]
    if all(rows[u] == r0 for u in cell):
        return True
    c0 = r0 | (1 << first)
    return all(rows[u] | (1 << u) == c0 for u in cell)


def _orbit_roots(n: int, gens: list[tuple[int, ...]]) -> list[int]:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(x) for x in range(n)]


def _canon_search(rows: Sequence[int], n: int, cells: list[list[int]]):
    """Least leaf code and a labelling achieving it."""
    best: list = [None, None]
    autos: list[tuple[int, ...]] = []

    def visit(cells, fixed):
        cells = _refine(rows, n, cells)
        if len(cells) == n:
            perm = [c[0] for c in cells]
            code = _leaf_code(rows, perm)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, perm
            elif code == best[0]:
                gamma = [0] * n
                for a, b in zip(best[1], perm):
                    gamma[a] = b
                gamma = tuple(gamma)
                if gamma != tuple(range(n)):
                    autos.append(gamma)
            return
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i))
        target = cells[ti]
        choices = target[:1] if _mutual_twins(rows, target) else target
        done: list[int] = []
        for v in choices:
            if done:
                gens = [g for g in autos if all(g[x] == x for x in fixed)]
                if gens:
                    root = _orbit_roots(n, gens)
                    if root[v] in {root[d] for d in done}:
                        continue
            rest = [u for u in target if u != v]
            visit(cells[:ti] + [[v], rest] + cells[ti + 1:], fixed + (v,))
            done.append(v)

    visit(cells, ())
    return best[0], best[1]


def _key(n: int, code: int) -> bytes:
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_labeling(g: Graph) -> tuple[CanonicalForm, list[int]]:
    """Canonical key and a permutation ``perm`` (new label i = old vertex perm[i])."""
    deg = g.degrees()
    # initial cells ordered by degree
    by_deg: dict[int, list[int]] = {}
    for v in range(g.n):
        by_deg.setdefault(deg[v], []).append(v)
    cells = [by_deg[d] for d in sorted(by_deg)]
    code, perm = _canon_search(g.rows, g.n, cells)
    return _key(g.n, code), perm


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g)[1])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)


def _rooted_code(g: Graph, v: int) -> int:
    rest = [u for u in range(g.n) if u != v]
    cells = [[v], rest] if rest else [[v]]
    return _canon_search(g.rows, g.n, cells)[0]


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of Aut(g), each sorted, ordered by least vertex.

    Two vertices share an orbit iff the graph rooted at one is isomorphic to
    the graph rooted at the other.
    """
    deg = g.degrees()
    by_class: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        by_class.setdefault((deg[v], _rooted_code(g, v)), []).append(v)
    return sorted(by_class.values())


def is_vertex_transitive(g: Graph) -> bool:
    return len(automorphism_orbits(g)) == 1


# ---------------------------------------------------------------------------
# induced subgraph search


def _search_order(pattern: Graph) -> list[int]:
    """Pattern vertices ordered so each one is as constrained as possible."""
    n = pattern.n
    deg = pattern.degrees()
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = max(remaining, key=lambda u: ((pattern.rows[u] & placed).bit_count(), deg[u], -u))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    return order


def find_induced_embedding(pattern: Graph, host: Graph) -> list[int] | None:
    """First injective map ``pattern -> host`` onto an induced copy, or None.

    Returns ``emb`` with ``emb[p]`` the host vertex for pattern vertex ``p``.
    The search is deterministic: pattern vertices in a fixed constraint order,
    host candidates in increasing label order.
    """
    k, n = pattern.n, host.n
    if k > n or pattern.edge_count > host.edge_count:
        return None
    pnon = k * (k - 1) // 2 - pattern.edge_count
    if pnon > n * (n - 1) // 2 - host.edge_count:
        return None
    hrows = host.rows
    hfull = (1 << n) - 1
    hdeg = host.degrees()
    order = _search_order(pattern)
    prow = pattern.rows
    pdeg = pattern.degrees()
    # host vertices able to carry each pattern vertex by degree alone
    ok_deg = []
    for p in order:
        m = 0
        for x in range(n):
            if hdeg[x] >= pdeg[p] and (n - 1 - hdeg[x]) >= (k - 1 - pdeg[p]):
                m |= 1 << x
        ok_deg.append(m)
    emb = [-1] * k

    def extend(i, used):
        if i == k:
            return True
        p = order[i]
        cand = ok_deg[i] & ~used
        for j in range(i):
            q = order[j]
            hr = hrows[emb[q]]
            cand &= hr if (prow[p] >> q) & 1 else (hfull & ~hr)
            if not cand:
                return False
        while cand:
            low = cand & -cand
            cand ^= low
            emb[p] = low.bit_length() - 1
            if extend(i + 1, used | low):
                return True
        emb[p] = -1
        return False

    return list(emb) if extend(0, 0) else None


def contains_induced(g: Graph, pattern: Graph) -> bool:
    return find_induced_embedding(pattern, g) is not None


# ---------------------------------------------------------------------------
# graph6


def graph6_encode(g: Graph) -> str:
    n = g.n
    out = [chr(n + 63)]
    bits = []
    for j in range(1, n):
        rj = g.rows[j]
        for i in range(j):
            bits.append((rj >> i) & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    base = 0
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
        base = len(">>graph6<<")
    if not s:
        raise Graph6ParseError("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range", base + i)
    if s[0] == "~":
        if len(s) >= 2 and s[1] == "~":
            if len(s) < 8:
                raise Graph6ParseError("truncated 36-bit order header", base + len(s))
            n = 0
            for ch in s[2:8]:
                n = (n << 6) | (ord(ch) - 63)
        else:
            if len(s) < 4:
                raise Graph6ParseError("truncated 18-bit order header", base + len(s))
            n = 0
            for ch in s[1:4]:
                n = (n << 6) | (ord(ch) - 63)
        raise CapacityError(f"graph order {n} exceeds capacity {MAX_ORDER}")
    n = ord(s[0]) - 63
    if n == 0:
        raise DomainError("graph6 string encodes the graph with no vertices")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = s[1:]
    if len(body) != need:
        off = base + 1 + min(len(body), need)
        raise Graph6ParseError(f"expected {need} data bytes for n={n}, got {len(body)}", off)
    if n > MAX_ORDER:
        raise CapacityError(f"graph order {n} exceeds capacity {MAX_ORDER}")
    rows = [0] * n
    k = 0
    vals = [ord(ch) - 63 for ch in body]
    for j in range(1, n):
        for i in range(j):
            if (vals[k // 6] >> (5 - k % 6)) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def read_graph6_lines(lines: Iterable[str]) -> Iterable[Graph]:
    for line in lines:
        line = line.strip()
        if line:
            yield graph6_decode(line)


# ---------------------------------------------------------------------------
# names such as "C_5", "2K_2", "K_1+P_4", "A"

_TERM = re.compile(r"^(\d*)([PCK])_?(\d+)$")


def parse_graph_name(text: str) -> Graph:
    """Graph for a ``+``-separated name like ``K_1+2K_2`` or ``C6``.

    ``K_1`` and ``K_2`` are complete graphs (equally paths); ``A``, ``B`` and
    ``E`` are the named six-vertex graphs.
    """
    parts: list[Graph] = []
    for term in text.replace(" ", "").split("+"):
        if term in ("A", "B", "E"):
            parts.append(make_named(term))
            continue
        m = _TERM.match(term)
        if not m:
            raise DomainError(f"cannot parse graph name {term!r}")
        mult = int(m.group(1) or 1)
        kind = {"P": "path", "C": "cycle", "K": "complete"}[m.group(2)]
        parts.extend([make_standard(kind, int(m.group(3)))] * mult)
    return disjoint_union(parts)
