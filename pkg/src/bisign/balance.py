"""Certificate-producing balance and antibalance checks.

A signed graph is balanced when every cycle has positive sign product;
antibalanced when every even cycle is positive and every odd cycle negative
(equivalently, the negated graph is balanced).  Both checks return either a
vertex signature certifying the property or a violating cycle.

The decision procedure labels each component by breadth-first search from
the lowest-id unvisited vertex (edge-id tie-break), roots get ``+``, and a
failing non-tree edge yields its fundamental cycle as the witness.  Loops
and digons count as cycles of length 1 and 2.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .core import PLUS, EdgeId, Graph, Sign, SignedGraph, VertexId
from .convert import negate_signed


@dataclass(frozen=True)
class VertexSignature:
    """A total vertex sign labeling mu."""

    mu: tuple[Sign, ...]

    def __getitem__(self, v: VertexId) -> Sign:
        return self.mu[v]

    def __len__(self) -> int:
        return len(self.mu)


@dataclass(frozen=True)
class Bipartition:
    """A split V = v1 | v2; either part may be empty."""

    v1: frozenset[VertexId]
    v2: frozenset[VertexId]


@dataclass(frozen=True)
class CycleWitness:
    """A cycle given as an edge sequence forming a closed walk with no
    repeated edge or vertex, together with its sign product."""

    edges: tuple[EdgeId, ...]
    sign: Sign

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def parity(self) -> str:
        return "even" if len(self.edges) % 2 == 0 else "odd"


@dataclass(frozen=True)
class BalanceResult:
    """Either a certifying signature or a violating cycle, never both."""

    signature: Optional[VertexSignature] = None
    witness: Optional[CycleWitness] = None

    @property
    def holds(self) -> bool:
        return self.witness is None


def closed_walk_vertices(graph: Graph, edges: tuple[EdgeId, ...]) -> list[VertexId]:
    """Validate that the edge sequence is a cycle and return the vertices
    visited, one per edge.

    Length 1 must be a loop, length 2 a digon (a parallel pair); longer
    sequences must chain into a closed walk with all vertices distinct.
    Raises ValueError otherwise.
    """
    if not edges:
        raise ValueError("empty edge list is not a cycle")
    if len(set(edges)) != len(edges):
        raise ValueError("repeated edge in cycle")
    ends = [graph.endpoints(e) for e in edges]
    if len(edges) == 1:
        u, v = ends[0]
        if u != v:
            raise ValueError("a single non-loop edge is not a cycle")
        return [u]
    if len(edges) == 2:
        (u, v), (x, y) = ends
        if u == v or {u, v} != {x, y}:
            raise ValueError("two edges form a cycle only as a digon")
        return [u, v]
    for start in ends[0]:
        seq = [start]
        cur = ends[0][1] if start == ends[0][0] else ends[0][0]
        ok = True
        for a, b in ends[1:]:
            seq.append(cur)
            if a == b:
                ok = False
                break
            if a == cur:
                cur = b
            elif b == cur:
                cur = a
            else:
                ok = False
                break
        if ok and cur == start and len(set(seq)) == len(seq):
            return seq
    raise ValueError("edge list does not form a cycle")


def cycle_sign(s: SignedGraph, c: CycleWitness) -> Sign:
    """Product of the edge signs along the cycle; validates the cycle."""
    closed_walk_vertices(s.graph, c.edges)
    sign = PLUS
    for e in c.edges:
        sign = sign * s.sigma[e]
    return sign


def _make_witness(s: SignedGraph, edges: tuple[EdgeId, ...]) -> CycleWitness:
    sign = PLUS
    for e in edges:
        sign = sign * s.sigma[e]
    return CycleWitness(edges, sign)


def is_balanced(s: SignedGraph) -> BalanceResult:
    """Decide balance; a Balanced result carries mu with
    sigma(uv) = mu(u)*mu(v) on every edge, an Unbalanced result carries a
    negative cycle."""
    g = s.graph
    n = g.vertex_count
    mu: list[Optional[Sign]] = [None] * n
    parent_edge: list[int] = [-1] * n
    parent_vertex: list[int] = [-1] * n
    depth = [0] * n
    in_tree = [False] * g.edge_count

    for root in range(n):
        if mu[root] is not None:
            continue
        mu[root] = PLUS
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for e, side in g.incidence[u]:
                pair = g.edges[e]
                w = pair[1 - side]
                if mu[w] is None:
                    mu[w] = mu[u] * s.sigma[e]
                    parent_edge[w] = e
                    parent_vertex[w] = u
                    depth[w] = depth[u] + 1
                    in_tree[e] = True
                    queue.append(w)

    # every non-tree edge closes a fundamental cycle; check them in id order
    for e in range(g.edge_count):
        if in_tree[e]:
            continue
        u, v = g.edges[e]
        if s.sigma[e] == mu[u] * mu[v]:  # type: ignore[operator]
            continue
        if u == v:
            return BalanceResult(witness=_make_witness(s, (e,)))
        # climb to the common ancestor collecting tree edges on both sides
        pu: list[int] = []
        pv: list[int] = []
        a, b = u, v
        while depth[a] > depth[b]:
            pu.append(parent_edge[a])
            a = parent_vertex[a]
        while depth[b] > depth[a]:
            pv.append(parent_edge[b])
            b = parent_vertex[b]
        while a != b:
            pu.append(parent_edge[a])
            a = parent_vertex[a]
            pv.append(parent_edge[b])
            b = parent_vertex[b]
        cycle = (e, *pv, *reversed(pu))
        return BalanceResult(witness=_make_witness(s, cycle))

    return BalanceResult(signature=VertexSignature(tuple(mu)))  # type: ignore[arg-type]


def is_antibalanced(s: SignedGraph) -> BalanceResult:
    """Decide antibalance via balance of the negated graph.

    A positive result carries mu with sigma(uv) = -mu(u)*mu(v) on every
    edge; a negative result carries a cycle of s violating the parity
    condition, with its sign taken in s.
    """
    r = is_balanced(negate_signed(s))
    if r.holds:
        return r
    assert r.witness is not None
    return BalanceResult(witness=_make_witness(s, r.witness.edges))


def signature_to_bipartition(mu: VertexSignature) -> Bipartition:
    """v1 = the + vertices, v2 = the - vertices."""
    v1 = frozenset(v for v, x in enumerate(mu.mu) if x is PLUS)
    v2 = frozenset(v for v, x in enumerate(mu.mu) if x is not PLUS)
    return Bipartition(v1, v2)


def verify_signature(s: SignedGraph, mu: VertexSignature, mode: str) -> bool:
    """Check sigma(uv) = mu(u)*mu(v) (balance) or -mu(u)*mu(v) (antibalance)
    on every edge; a loop at u therefore needs sigma = + resp. -."""
    if mode not in ("balance", "antibalance"):
        raise ValueError(f"unknown mode {mode!r}")
    if len(mu) != s.graph.vertex_count:
        raise ValueError("signature does not cover the vertex set")
    flip = mode == "antibalance"
    for e, (u, v) in enumerate(s.graph.edges):
        expect = mu[u] * mu[v]
        if flip:
            expect = -expect
        if s.sigma[e] != expect:
            return False
    return True
