"""Small circuits of Rauzy graphs.

An elementary circuit of Gamma_r(w) is small when its size is at most r. Each
small circuit is determined up to conjugacy by a primitive word q with
|q| <= r: its vertices are the powers p^{r/|p|} and its edges the powers
p^{(r+1)/|p|} over the rotations p of q. Enumeration therefore goes through
edge periodicity instead of graph search; the graph search survives only as
the cross-check oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import networkx as nx

from .rauzy import RauzyGraph, VectorCycle
from .squares import match_runs
from .words import (
    NATURAL,
    SymbolOrder,
    conjugacy_class,
    extremal_rotation,
    factors,
    is_primitive,
    least_rotation,
    power_to_length,
    primitive_root,
    smallest_period,
)


@dataclass(frozen=True, order=True)
class SmallCircuit:
    """C(root, order): the circuit of [root] in Gamma_order.

    The root is normalized to the least rotation of its conjugacy class under
    the natural order, so equal circuits compare equal no matter which
    conjugate they were built from.
    """

    root: str
    order: int

    def __post_init__(self) -> None:
        if not self.root:
            raise ValueError("empty circuit root")
        if not is_primitive(self.root):
            raise ValueError(f"circuit root must be primitive: {self.root!r}")
        if self.order < len(self.root):
            raise ValueError("a small circuit needs |root| <= order")
        object.__setattr__(self, "root", least_rotation(self.root))

    def __str__(self) -> str:
        return f"C({self.root},{self.order})"


@dataclass(frozen=True)
class CircuitRealization:
    vertices: frozenset[str]
    edges: frozenset[str]


@lru_cache(maxsize=1 << 16)
def _class_info(base: str):
    # (canonical rotation, offset of base inside it), or None if base is a
    # power of a shorter word
    if not is_primitive(base):
        return None
    canon = least_rotation(base)
    return canon, (canon + canon).find(base)


def small_circuits(w: str, r: int) -> frozenset[SmallCircuit]:
    """The small circuits of Gamma_r(w).

    Every edge of a small circuit is a fractional power of a primitive word
    of length at most r; conversely the candidate read off an edge's smallest
    period is a circuit iff every rotation extends to an edge. Reading only
    smallest periods misses nothing: the least rotation of a primitive word
    is unbordered, so the edge it generates has no shorter period and always
    surfaces its class.
    """
    if not 1 <= r <= len(w):
        raise ValueError(f"graph order {r} out of range 1..{len(w)}")
    edge_labels = factors(w, r + 1)
    seen: dict[str, bool] = {}
    out = []
    for e in edge_labels:
        p = smallest_period(e)
        if p > r:
            continue
        q = e[:p]
        canon = least_rotation(q)
        if canon in seen:
            continue
        ok = all(power_to_length(t, r + 1) in edge_labels
                 for t in conjugacy_class(q))
        seen[canon] = ok
        if ok:
            out.append(SmallCircuit(canon, r))
    return frozenset(out)


def circuit_order_ranges(w: str) -> dict[str, tuple[int, int]]:
    """For each circuit class root, the contiguous range of orders it lives in.

    C(q, r) exists iff r >= |q| and every rotation of q stretches to a
    periodic factor of length r+1, so per class the admissible r form the
    interval [|q|, m-1] where m is the worst rotation's longest periodic
    extension. Runs of the match array w[t] == w[t+lag] give those extensions
    for all orders at once.
    """
    n = len(w)
    coverage: dict[str, list[int]] = {}
    for lag in range(1, n):
        for s, run_len in match_runs(w, lag):
            info = _class_info(w[s:s + lag])
            if info is None:
                continue
            canon, off = info
            arr = coverage.get(canon)
            if arr is None:
                arr = coverage[canon] = [0] * lag
            span = run_len + lag
            for phi in range(min(lag, run_len)):
                g = off + phi
                if g >= lag:
                    g -= lag
                if span - phi > arr[g]:
                    arr[g] = span - phi
    ranges = {}
    for canon, arr in coverage.items():
        hi = min(arr) - 1
        if hi >= len(canon):
            ranges[canon] = (len(canon), hi)
    return ranges


def all_small_circuits(w: str) -> frozenset[SmallCircuit]:
    """Union of small_circuits(w, r) over r = 1..|w|."""
    return frozenset(SmallCircuit(root, r)
                     for root, (lo, hi) in circuit_order_ranges(w).items()
                     for r in range(lo, hi + 1))


def circuit_counts_by_order(w: str) -> dict[int, int]:
    """sc_r for every order r with at least one small circuit."""
    counts: dict[int, int] = {}
    for lo, hi in circuit_order_ranges(w).values():
        for r in range(lo, hi + 1):
            counts[r] = counts.get(r, 0) + 1
    return counts


def realize(c: SmallCircuit) -> CircuitRealization:
    """Vertex and edge words of the circuit; both sets have |root| elements."""
    rots = conjugacy_class(c.root)
    return CircuitRealization(
        frozenset(power_to_length(t, c.order) for t in rots),
        frozenset(power_to_length(t, c.order + 1) for t in rots),
    )


def maximal_edge(c: SmallCircuit, order: SymbolOrder = NATURAL) -> str:
    """The lexicographically greatest edge of the circuit under the order.

    Two edges first differ inside their length-|root| prefixes, so this is
    the greatest rotation of the root extended to length order+1.
    """
    top = extremal_rotation(c.root, order, "greatest")
    return power_to_length(top, c.order + 1)


def cao_less(c1: SmallCircuit, c2: SmallCircuit,
             order: SymbolOrder = NATURAL) -> bool:
    """Circuit arrangement: compare circuits of one graph by maximal edge."""
    if c1.order != c2.order:
        raise ValueError("circuit arrangement compares circuits of one graph")
    return order.less(maximal_edge(c1, order), maximal_edge(c2, order))


def vector_cycle(c: SmallCircuit, g: RauzyGraph) -> VectorCycle:
    """Indicator vector of the circuit's edges over all edges of g."""
    if g.order != c.order:
        raise ValueError("graph and circuit have different orders")
    mine = realize(c).edges
    labels = g.labels
    if not mine <= labels:
        raise ValueError("circuit does not live in this graph")
    return VectorCycle(tuple((lab, 1 if lab in mine else 0)
                             for lab in sorted(labels)))


def _int_rank(rows: list[list[int]]) -> int:
    # fraction-free elimination; entries stay integers, arithmetic is exact
    if not rows:
        return 0
    rows = [list(r) for r in rows]
    m = len(rows[0])
    rank = 0
    for col in range(m):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        a = lead[col]
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if b:
                rows[i] = [a * x - b * y for x, y in zip(rows[i], lead)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def independence_rank(w: str, r: int) -> int:
    """Exact rank of the circuits' edge-indicator vectors in Gamma_r(w)."""
    circs = small_circuits(w, r)
    if not circs:
        return 0
    supports = [realize(c).edges for c in circs]
    cols = {lab: i for i, lab in enumerate(sorted(set().union(*supports)))}
    rows = [[0] * len(cols) for _ in supports]
    for row, sup in zip(rows, supports):
        for lab in sup:
            row[cols[lab]] = 1
    return _int_rank(rows)


def elementary_cycles_oracle(g: RauzyGraph, max_size: int,
                             max_cycles: int = 1_000_000) -> frozenset[frozenset[str]]:
    """All elementary circuits of g with at most max_size vertices.

    Exhaustive simple-cycle search, used only to cross-check the periodicity
    enumeration. Cycles come back as edge-label sets; the label of an edge
    u -> v is u plus the last symbol of v.
    """
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    for e in g.edges:
        dg.add_edge(e.src, e.dst)
    out = set()
    count = 0
    for cyc in nx.simple_cycles(dg, length_bound=max_size):
        count += 1
        if count > max_cycles:
            raise RuntimeError(f"cycle enumeration exceeded {max_cycles} cycles")
        out.add(frozenset(cyc[k] + cyc[(k + 1) % len(cyc)][-1]
                          for k in range(len(cyc))))
    return frozenset(out)
