"""Brute-force reference implementations for testing.

Deliberately independent of the fast paths in ``balance`` and ``uniform``:
cycles are found by edge-subset sweep, antibalance by checking every cycle's
parity, and uniformizability by trying every reorientation subset.  Only
the plain data types from ``core`` (plus the cycle record) are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Optional

from .core import (
    MINUS,
    PLUS,
    BidirectedGraph,
    EdgeId,
    Graph,
    Sign,
    SignedGraph,
    build_graph,
)
from .balance import CycleWitness


@dataclass(frozen=True)
class GraphEnumeration:
    """Bounds for sweeping every labeled multigraph (not isomorphism-reduced)."""

    max_vertices: int
    max_edges: int
    allow_loops: bool = True
    allow_parallel: bool = True


def enumerate_multigraphs(spec: GraphEnumeration) -> Iterator[Graph]:
    """Every multigraph within the bounds, each labeled graph exactly once.

    Edges are kept as nondecreasing (u, v) pairs in sorted order, so two
    listings of the same edge multiset are not produced twice.
    """
    for n in range(spec.max_vertices + 1):
        pairs = [
            (u, v)
            for u in range(n)
            for v in range(u, n)
            if spec.allow_loops or u != v
        ]
        for m in range(spec.max_edges + 1):
            chooser = (
                combinations_with_replacement if spec.allow_parallel else combinations
            )
            for combo in chooser(pairs, m):
                yield build_graph(n, list(combo))


def _is_cycle_subset(g: Graph, edges: tuple[EdgeId, ...]) -> bool:
    """True when the edge subset is a single cycle: every touched vertex has
    degree exactly 2 (loops count twice) and the subset is connected."""
    degree: dict[int, int] = {}
    for e in edges:
        u, v = g.edges[e]
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    if any(d != 2 for d in degree.values()):
        return False
    # connectivity over the touched vertices
    touched = set(degree)
    start = next(iter(touched))
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for e in edges:
            u, v = g.edges[e]
            if u == x and v not in seen:
                seen.add(v)
                frontier.append(v)
            elif v == x and u not in seen:
                seen.add(u)
                frontier.append(u)
    return seen == touched


def _order_cycle(g: Graph, edges: tuple[EdgeId, ...]) -> tuple[EdgeId, ...]:
    """Order a cycle edge set into a closed walk, canonically: the lowest
    edge id first, then the lexicographically smaller of the two
    traversal directions."""
    if len(edges) <= 2:
        return tuple(sorted(edges))
    rest = sorted(edges[1:] if edges[0] == min(edges) else set(edges) - {min(edges)})
    first = min(edges)
    best: Optional[tuple[EdgeId, ...]] = None
    for start_side in (0, 1):
        walk = [first]
        cur = g.edges[first][1 - start_side]
        stop = g.edges[first][start_side]
        remaining = set(rest)
        while remaining:
            nxt = None
            for e in sorted(remaining):
                u, v = g.edges[e]
                if u == cur or v == cur:
                    nxt = e
                    break
            assert nxt is not None
            remaining.remove(nxt)
            u, v = g.edges[nxt]
            cur = v if u == cur else u
            walk.append(nxt)
        assert cur == stop
        t = tuple(walk)
        if best is None or t < best:
            best = t
    assert best is not None
    return best


def enumerate_cycles(g: Graph) -> list[CycleWitness]:
    """Every cycle of g exactly once up to rotation and reflection.

    Found by sweeping all edge subsets: a subset is a cycle iff every
    touched vertex has degree 2 in it and it is connected.  Sign fields are
    filled with + (the callers below re-sign against a signed graph).
    """
    m = g.edge_count
    found: list[tuple[EdgeId, ...]] = []
    for size in range(1, m + 1):
        for subset in combinations(range(m), size):
            if _is_cycle_subset(g, subset):
                found.append(_order_cycle(g, subset))
    found.sort()
    return [CycleWitness(edges, PLUS) for edges in found]


def _subset_sign(s: SignedGraph, edges: tuple[EdgeId, ...]) -> Sign:
    sign = 1
    for e in edges:
        sign *= s.sigma[e].value
    return PLUS if sign > 0 else MINUS


def balanced_by_cycles(s: SignedGraph) -> bool:
    """True iff every cycle has positive sign product."""
    return all(
        _subset_sign(s, c.edges) is PLUS for c in enumerate_cycles(s.graph)
    )


def antibalanced_by_cycles(s: SignedGraph) -> bool:
    """True iff every even cycle is positive and every odd cycle negative."""
    for c in enumerate_cycles(s.graph):
        want = PLUS if len(c.edges) % 2 == 0 else MINUS
        if _subset_sign(s, c.edges) is not want:
            return False
    return True


def uniformizable_by_enumeration(
    b: BidirectedGraph, max_edges: int = 20
) -> Optional[frozenset[EdgeId]]:
    """Try every reorientation subset; return the first one that makes every
    vertex a source, sink, or isolated, or None.

    Subsets are swept in increasing-bitmask order (bit i = edge i), so the
    empty set comes first.
    """
    g = b.graph
    m = g.edge_count
    if m > max_edges:
        raise ValueError(f"edge count {m} exceeds enumeration bound {max_edges}")
    incidence = g.incidence
    beta = b.beta
    for mask in range(1 << m):
        ok = True
        for hes in incidence:
            first: Optional[Sign] = None
            for e, side in hes:
                sign = beta[e][side]
                if mask >> e & 1:
                    sign = -sign
                if first is None:
                    first = sign
                elif sign is not first:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return frozenset(e for e in range(m) if mask >> e & 1)
    return None


class SplitMix64:
    """Fixed 64-bit pseudorandom generator so seeded corpora reproduce
    across runs, platforms, and implementations.

    state' = state + 0x9E3779B97F4A7C15 (mod 2^64); the output mixes the
    state with xor-shifts by 30/27/31 and the multipliers
    0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.  Bounded draws use the
    (documented) simple modulo reduction.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % n

    def sign(self) -> Sign:
        return PLUS if self.below(2) == 0 else MINUS


def random_bidirected(
    vertex_count: int,
    edge_count: int,
    allow_loops: bool,
    allow_parallel: bool,
    seed: int,
) -> BidirectedGraph:
    """Deterministic pseudorandom multigraph with a pseudorandom bidirection.

    Same arguments always give the same graph.  Raises on impossible
    constraints (no vertices to attach edges to, or more distinct edges
    demanded than exist).
    """
    if vertex_count < 0 or edge_count < 0:
        raise ValueError("counts must be nonnegative")
    if edge_count > 0:
        if vertex_count == 0 or (not allow_loops and vertex_count < 2):
            raise ValueError("no room for any edge under these constraints")
        if not allow_parallel:
            slots = vertex_count * (vertex_count - 1) // 2
            if allow_loops:
                slots += vertex_count
            if edge_count > slots:
                raise ValueError(
                    f"cannot place {edge_count} distinct edges in {slots} slots"
                )
    rng = SplitMix64(seed)
    pairs: list[tuple[int, int]] = []
    used: set[tuple[int, int]] = set()
    while len(pairs) < edge_count:
        u = rng.below(vertex_count)
        v = rng.below(vertex_count)
        if not allow_loops and u == v:
            continue
        if not allow_parallel and (min(u, v), max(u, v)) in used:
            continue
        used.add((min(u, v), max(u, v)))
        pairs.append((u, v))
    beta = tuple((rng.sign(), rng.sign()) for _ in range(edge_count))
    return BidirectedGraph(build_graph(vertex_count, pairs), beta)
