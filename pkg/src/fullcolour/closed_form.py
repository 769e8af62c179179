"""Explicit obstruction lists for paths and cycles.

obs(P_n) is the union of three families:

* cycles C_3 and C_5..C_{n+1};
* the six-vertex graphs: none for n <= 4, B at 5, A and B at 6, A, B, E from 7;
* linear forests, one per non-negative solution of
  ``3a = n + 2``            -> a K_2,
  ``3a + 5b = n + 1``       -> K_1 + a K_2 + b P_4,
  ``3a + 5b + 7c = n``      -> K_1 + a K_2 + b P_4 + c P_6.

obs(C_n) for n >= 5 is obs(P_{n-1}) without C_n.

Members can be listed symbolically (cycle lengths, names, forest specs) for
any n; building them as graphs is bounded by the 32-vertex capacity.
"""
from __future__ import annotations

from .errors import DomainError
from .graph_core import Graph, cycle, make_named, path
from .obstructions import ObstructionSet
from .pd_core import LinearForestSpec

LF_EQUATIONS = {
    "LF1": ((3,), 2),
    "LF2": ((3, 5), 1),
    "LF3": ((3, 5, 7), 0),
}


def solve_linear(coeffs: list[int] | tuple[int, ...], target: int) -> list[tuple[int, ...]]:
    """All non-negative integer solutions of ``sum(c*x) == target``, sorted."""
    if not coeffs or any(c < 1 for c in coeffs):
        raise ValueError("coefficients must be a non-empty list of positive integers")
    if target < 0:
        return []
    out: list[tuple[int, ...]] = []

    def rec(i, rest, prefix):
        c = coeffs[i]
        if i == len(coeffs) - 1:
            if rest % c == 0:
                out.append(prefix + (rest // c,))
            return
        for x in range(rest // c + 1):
            rec(i + 1, rest - c * x, prefix + (x,))

    rec(0, target, ())
    return out


def count_solutions(coeffs: list[int] | tuple[int, ...], target: int) -> int:
    """Number of non-negative solutions, by the coin-change recurrence."""
    if target < 0:
        return 0
    ways = [1] + [0] * target
    for c in coeffs:
        for t in range(c, target + 1):
            ways[t] += ways[t - c]
    return ways[target]


def _need(n: int):
    if n < 2:
        raise DomainError("closed forms for paths are stated here for n >= 2; use the oracle at n = 1")


def cycle_lengths(n: int) -> list[int]:
    _need(n)
    return [3] + list(range(5, n + 2))


def other_names(n: int) -> list[str]:
    _need(n)
    if n <= 4:
        return []
    if n == 5:
        return ["B"]
    if n == 6:
        return ["A", "B"]
    return ["A", "B", "E"]


def lf_specs(n: int) -> list[LinearForestSpec]:
    """Linear forests of obs(P_n), one per diophantine solution, deduplicated."""
    _need(n)
    specs: list[LinearForestSpec] = []
    for name, (coeffs, shift) in LF_EQUATIONS.items():
        for sol in solve_linear(coeffs, n + shift):
            if name == "LF1":
                counts = {2: sol[0]}
            else:
                counts = {1: 1, 2: sol[0], 4: sol[1]}
                if name == "LF3":
                    counts[6] = sol[2]
            spec = LinearForestSpec.from_counts(counts)
            if spec not in specs:
                specs.append(spec)
    return specs


def set_C(n: int) -> list[Graph]:
    return [cycle(m) for m in cycle_lengths(n)]


def set_O(n: int) -> list[Graph]:
    return [make_named(x) for x in other_names(n)]


def set_LF(n: int) -> list[Graph]:
    return [s.to_graph() for s in lf_specs(n)]


def obs_paths_closed(n: int) -> ObstructionSet:
    _need(n)
    return ObstructionSet.from_graphs(path(n), set_C(n) + set_LF(n) + set_O(n))


def obs_cycles_closed(n: int) -> ObstructionSet:
    if n < 5:
        raise DomainError("closed form for cycles needs n >= 5")
    members = set_C(n - 2) + set_LF(n - 1) + set_O(n - 1)
    return ObstructionSet.from_graphs(cycle(n), members)


def describe_obs_paths(n: int) -> list[str]:
    """Human-readable member names, e.g. ``['C_3', 'C_5', 'B', 'K_1+P_4']``."""
    return ([f"C_{m}" for m in cycle_lengths(n)] + other_names(n)
            + [str(s) for s in lf_specs(n)])


def describe_obs_cycles(n: int) -> list[str]:
    if n < 5:
        raise DomainError("closed form for cycles needs n >= 5")
    return [x for x in describe_obs_paths(n - 1) if x != f"C_{n}"]


def _count_lf(n: int) -> int:
    return sum(count_solutions(c, n + s) for c, s in LF_EQUATIONS.values())


def _count_c(n: int) -> int:
    return 1 + max(0, n - 3)


def _count_o(n: int) -> int:
    return 0 if n <= 4 else 1 if n == 5 else 2 if n == 6 else 3


def count_obs_paths(n: int) -> int:
    """Size of obs(P_n) from solution counts alone."""
    _need(n)
    return _count_c(n) + _count_o(n) + _count_lf(n)


def count_obs_cycles(n: int) -> int:
    if n < 5:
        raise DomainError("closed form for cycles needs n >= 5")
    return _count_c(n - 2) + _count_o(n - 1) + _count_lf(n - 1)
