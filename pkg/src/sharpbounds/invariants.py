"""Exact solvers for the numerical graph invariants fed to the engine.

Every solver returns the exact optimum as a nonnegative integer; none of
them is a heuristic. NP-hard quantities are computed by pruned exact search,
which is comfortably fast at corpus scale (roughly order <= 16 for the
zero forcing and total domination searches, order <= 20 for independence,
matching and vertex cover). Solvers return only the cardinality, never a
witness set, so branching order cannot leak into results.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from .errors import UndefinedInvariantError
from .graphs import Graph


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# Trivial invariants
# ---------------------------------------------------------------------------

def order(g: Graph) -> int:
    """Number of vertices."""
    return g.order


def size(g: Graph) -> int:
    """Number of edges."""
    return g.size


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


# ---------------------------------------------------------------------------
# Independence and covering
# ---------------------------------------------------------------------------

def independence_number(g: Graph) -> int:
    """Maximum size of a pairwise non-adjacent vertex set.

    Branch and bound: pick a maximum-degree vertex of the remaining graph,
    then either exclude it or include it and delete its closed neighborhood.
    """
    rows = g.adjacency
    best = 0

    def grow(avail: int, have: int) -> None:
        nonlocal best
        if have + avail.bit_count() <= best:
            return
        if avail == 0:
            best = max(best, have)
            return
        v = max(_bit_indices(avail), key=lambda u: (rows[u] & avail).bit_count())
        # include v first so the bound tightens quickly
        grow(avail & ~(rows[v] | (1 << v)), have + 1)
        grow(avail & ~(1 << v), have)

    grow((1 << g.order) - 1, 0)
    return best


def vertex_cover_number(g: Graph) -> int:
    """Minimum size of a vertex set meeting every edge.

    Direct branch and bound on an uncovered edge (u, v): every cover
    contains u or v. Computed independently of the independence solver so
    the two can cross-check each other.
    """
    rows = g.adjacency
    n = g.order
    best = n

    def cover(chosen: int, have: int) -> None:
        nonlocal best
        if have >= best:
            return
        for u in range(n):
            if chosen >> u & 1:
                continue
            white = rows[u] & ~chosen
            if white:
                v = (white & -white).bit_length() - 1
                cover(chosen | (1 << u), have + 1)
                cover(chosen | (1 << v), have + 1)
                return
        best = have

    cover(0, 0)
    return best


# ---------------------------------------------------------------------------
# Matchings
# ---------------------------------------------------------------------------

def matching_number(g: Graph) -> int:
    """Maximum size of a set of pairwise disjoint edges.

    Memoized recursion over the set of still-unmatched vertices: the lowest
    vertex is either left unmatched or matched to one of its neighbors.
    """
    rows = g.adjacency
    memo: dict[int, int] = {0: 0}

    def best(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        result = best(rest)
        for u in _bit_indices(rows[v] & rest):
            result = max(result, 1 + best(rest ^ (1 << u)))
        memo[mask] = result
        return result

    return best((1 << g.order) - 1)


def min_maximal_matching(g: Graph) -> int:
    """Minimum size of a matching that no edge can extend.

    A matching is maximal exactly when its endpoints meet every edge, so the
    search looks for the smallest disjoint edge set whose endpoint set is a
    vertex cover.
    """
    edges = g.edges()
    if not edges:
        return 0
    masks = [(1 << u) | (1 << v) for u, v in edges]
    start = -(-len(edges) // (2 * max_degree(g) - 1))  # each edge covers <= 2D-1 edges
    for k in range(max(1, start), len(edges) + 1):
        for combo in combinations(masks, k):
            used = 0
            for em in combo:
                if used & em:
                    break
                used |= em
            else:
                if all(em & used for em in masks):
                    return k
    raise AssertionError("unreachable: the full matching closure is maximal")


# ---------------------------------------------------------------------------
# Domination
# ---------------------------------------------------------------------------

def domination_number(g: Graph) -> int:
    """Minimum size of a set whose closed neighborhoods cover all vertices."""
    n = g.order
    closed = [g.adjacency[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    start = -(-n // (max_degree(g) + 1))  # a vertex covers at most D+1 vertices
    for k in range(max(1, start), n + 1):
        for combo in combinations(range(n), k):
            covered = 0
            for v in combo:
                covered |= closed[v]
            if covered == full:
                return k
    raise AssertionError("unreachable: V dominates itself")


def total_domination_number(g: Graph) -> int:
    """Minimum size of a set whose open neighborhoods cover all vertices.

    Undefined when the graph has an isolated vertex; raises
    :class:`UndefinedInvariantError` in that case.
    """
    n = g.order
    if any(row == 0 for row in g.adjacency):
        raise UndefinedInvariantError(
            "total domination is undefined with an isolated vertex")
    full = (1 << n) - 1
    start = max(2, -(-n // max_degree(g)))
    for k in range(start, n + 1):
        for combo in combinations(range(n), k):
            covered = 0
            for v in combo:
                covered |= g.adjacency[v]
            if covered == full:
                return k
    raise AssertionError("unreachable: V totally dominates itself when delta >= 1")


def independent_domination_number(g: Graph) -> int:
    """Minimum size over all maximal independent sets.

    A maximal independent set is exactly an independent dominating set, so
    the search ascends through independent sets until one dominates.
    """
    n = g.order
    closed = [g.adjacency[v] | (1 << v) for v in range(n)]
    full = (1 << n) - 1
    start = -(-n // (max_degree(g) + 1))
    for k in range(max(1, start), n + 1):
        for combo in combinations(range(n), k):
            picked = 0
            covered = 0
            for v in combo:
                if g.adjacency[v] & picked:
                    break
                picked |= 1 << v
                covered |= closed[v]
            else:
                if covered == full:
                    return k
    raise AssertionError("unreachable: greedy maximal independent sets exist")


# ---------------------------------------------------------------------------
# Zero forcing
# ---------------------------------------------------------------------------

def forcing_closure(g: Graph, blue: Iterable[int]) -> frozenset[int]:
    """Least fixed point of the color change rule from an initial blue set.

    Rule: a blue vertex with exactly one non-blue neighbor colors that
    neighbor blue. The closure is monotone in the input and idempotent.
    """
    mask = 0
    for v in blue:
        if not 0 <= v < g.order:
            raise ValueError(f"vertex {v} outside 0..{g.order - 1}")
        mask |= 1 << v
    mask = _closure_mask(g.adjacency, mask)
    return frozenset(_bit_indices(mask))


def _closure_mask(rows: tuple[int, ...], blue: int) -> int:
    changed = True
    while changed:
        changed = False
        scan = blue
        while scan:
            low = scan & -scan
            scan ^= low
            white = rows[low.bit_length() - 1] & ~blue
            if white and white & (white - 1) == 0:  # exactly one white neighbor
                blue |= white
                changed = True
    return blue


def zero_forcing_number(g: Graph) -> int:
    """Minimum size of a blue set whose forcing closure is every vertex."""
    n = g.order
    rows = g.adjacency
    full = (1 << n) - 1
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if _closure_mask(rows, mask) == full:
                return k
    raise AssertionError("unreachable: the full vertex set forces itself")


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------

def standard_invariants() -> dict[str, Callable[[Graph], int]]:
    """The built-in invariant registry, in canonical column order."""
    return {
        "order": order,
        "size": size,
        "min_degree": min_degree,
        "max_degree": max_degree,
        "independence_number": independence_number,
        "matching_number": matching_number,
        "domination_number": domination_number,
        "total_domination_number": total_domination_number,
        "independent_domination_number": independent_domination_number,
        "min_maximal_matching": min_maximal_matching,
        "zero_forcing_number": zero_forcing_number,
        "vertex_cover_number": vertex_cover_number,
    }


# Short math-style aliases accepted on the command line and in config files.
COLUMN_ALIASES = {
    "n": "order",
    "m": "size",
    "delta": "min_degree",
    "Delta": "max_degree",
    "alpha": "independence_number",
    "mu": "matching_number",
    "gamma": "domination_number",
    "gamma_t": "total_domination_number",
    "i": "independent_domination_number",
    "mu_star": "min_maximal_matching",
    "z": "zero_forcing_number",
    "Z": "zero_forcing_number",
    "beta": "vertex_cover_number",
    "claw_free": "claw-free",
}

# Compact symbols used when rendering conjecture statements.
DISPLAY_SYMBOLS = {
    "order": "n",
    "min_degree": "δ",
    "max_degree": "Δ",
    "independence_number": "α",
    "matching_number": "μ",
    "domination_number": "γ",
    "total_domination_number": "γ_t",
    "independent_domination_number": "i",
    "min_maximal_matching": "μ*",
    "zero_forcing_number": "Z",
    "vertex_cover_number": "β",
}


def resolve_column(name: str) -> str:
    """Map a user-supplied column name or alias to its canonical name."""
    return COLUMN_ALIASES.get(name, name)
