"""Circular weighted graphs deciding isomorphism of the toric surfaces.

Each complete fan yields a cycle whose node i carries the self-intersection
weight of ray i's curve and whose edge from node i to node i+1 carries the
normal-form pair (p, q) of cone i.  Two fans give isomorphic surfaces exactly
when one graph matches the other up to rotation, or matches the other's
reverse, where reversal flips the traversal direction and rewrites every edge
parameter p to its modular-inverse partner.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cones import socius
from .errors import DomainError
from .fans import CompleteFan, cone_data_list, ray_weights

Token = tuple[int, int, int]  # (node weight, edge p, edge q)


@dataclass(frozen=True)
class WeightedCircularGraph:
    """Cycle of weighted nodes; the edge stored with node i leads to node i+1."""

    nodes: tuple[Token, ...]
    anticlockwise: bool = True

    def __post_init__(self):
        if len(self.nodes) < 3:
            raise DomainError("a circular graph needs at least 3 nodes")
        for w, p, q in self.nodes:
            if q < 1 or not 0 <= p < q or math.gcd(p, q) != 1:
                raise DomainError(f"({p}, {q}) is not a normalized edge weight")

    def __len__(self) -> int:
        return len(self.nodes)


def graph_of(f: CompleteFan) -> WeightedCircularGraph:
    data = cone_data_list(f)
    weights = ray_weights(f, data)
    nodes = tuple(
        (-weights[i], data[i].p, data[i].q) for i in range(f.nu)
    )
    return WeightedCircularGraph(nodes)


def reverse_graph(g: WeightedCircularGraph) -> WeightedCircularGraph:
    """Traverse the cycle backwards; edge parameters p become their socius."""
    n = len(g.nodes)
    nodes = []
    for j in range(n):
        w = g.nodes[(n - 1 - j) % n][0]
        _, p, q = g.nodes[(n - 2 - j) % n]
        nodes.append((w, socius(p, q), q))
    return WeightedCircularGraph(tuple(nodes), not g.anticlockwise)


def graphs_isomorphic(a: WeightedCircularGraph, b: WeightedCircularGraph) -> bool:
    """True when some rotation aligns all node and edge weights.

    Reflections are deliberately not tried here; compare against
    reverse_graph(b) to test the orientation-reversing case.
    """
    if len(a.nodes) != len(b.nodes):
        return False
    n = len(a.nodes)
    doubled = a.nodes + a.nodes
    return any(doubled[i: i + n] == b.nodes for i in range(n))


def canonical_key(g: WeightedCircularGraph) -> tuple[Token, ...]:
    """Rotation- and reversal-invariant key; equal keys mean isomorphic
    surfaces."""
    best = None
    for seq in (g.nodes, reverse_graph(g).nodes):
        n = len(seq)
        doubled = seq + seq
        for i in range(n):
            cand = doubled[i: i + n]
            if best is None or cand < best:
                best = cand
    return best


def surfaces_isomorphic(f1: CompleteFan, f2: CompleteFan) -> bool:
    """Isomorphism test for the surfaces behind two complete fans."""
    g1, g2 = graph_of(f1), graph_of(f2)
    return graphs_isomorphic(g1, g2) or graphs_isomorphic(g1, reverse_graph(g2))


def render_graph(g: WeightedCircularGraph) -> str:
    """One-line cyclic rendering; the trailing edge closes back on the first
    node.  Basic edges are drawn bare, singular ones carry their (p, q)."""
    parts = []
    for w, p, q in g.nodes:
        parts.append(f"[{w}]")
        parts.append(f" -({p},{q})- " if q > 1 else " - ")
    return "".join(parts).rstrip()
