"""Module gadgets and ring assembly for the graph family.

Vertices are dense integers.  For a ring graph the layout is module
order: the signed vertex of module i first, then (for P and C modules)
its unsigned pair a_i, b_i.  The signed vertex of module i is the "+"
pole of module i and the "-" pole of module i-1.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegreeError, FormatError, ParameterError, ShapeError
from .rationals import Rat, rat_str
from .words import Word


@dataclass(frozen=True)
class ModuleGadget:
    """One building block with local vertex labels +, -, a, b."""

    kind: str
    # edges as (label, label, weight) with labels in {"+", "-", "a", "b"}
    edges: tuple


def build_module_gadget(kind: str, k) -> ModuleGadget:
    """The P, C, or E gadget with weights parameterized by k > 0."""
    k = Rat(k)
    if k <= 0:
        raise ParameterError(f"module parameter k must be positive, got {k}")
    if kind == "E":
        edges = (("+", "-", k + 1),)
    elif kind == "P":
        edges = (("a", "+", k), ("+", "-", Rat(1)), ("-", "b", k))
    elif kind == "C":
        edges = (("a", "+", k), ("+", "-", Rat(1)), ("-", "b", k), ("a", "b", k * k))
    else:
        raise ParameterError(f"unknown module kind {kind!r}")
    return ModuleGadget(kind, edges)


class WeightedGraph:
    """Undirected graph with positive rational edge weights, no loops."""

    def __init__(self, n: int, edges, *, word: Optional[Word] = None, k=None,
                 signed=None, unsigned=None):
        self.n = int(n)
        self.weights: dict = {}
        self.adj = [dict() for _ in range(self.n)]
        for u, v, w in edges:
            if u == v:
                raise ShapeError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ShapeError(f"edge ({u},{v}) out of range for n={self.n}")
            w = Rat(w)
            if w <= 0:
                raise ParameterError(f"edge ({u},{v}) has non-positive weight {w}")
            key = (u, v) if u < v else (v, u)
            if key in self.weights:
                raise ShapeError(f"duplicate edge {key}")
            self.weights[key] = w
            self.adj[u][v] = w
            self.adj[v][u] = w
        self.degrees = [sum(self.adj[i].values(), Rat(0)) for i in range(self.n)]
        # ring metadata (None for graphs not built by assemble_ring)
        self.word = word
        self.k = Rat(k) if k is not None else None
        self.signed = list(signed) if signed is not None else None
        self.unsigned = list(unsigned) if unsigned is not None else None

    @property
    def edge_count(self) -> int:
        return len(self.weights)

    def weight(self, u: int, v: int):
        key = (u, v) if u < v else (v, u)
        return self.weights.get(key)

    def edges(self):
        """Edges as (u, v, w) with u < v, sorted."""
        for (u, v) in sorted(self.weights):
            yield u, v, self.weights[(u, v)]

    def has_isolated_vertex(self) -> bool:
        return any(d == 0 for d in self.degrees)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def __repr__(self):
        tag = f" word={self.word}" if self.word else ""
        return f"WeightedGraph(n={self.n}, edges={self.edge_count}{tag})"


def assemble_ring(w: Word, k) -> WeightedGraph:
    """Assemble G(W): tau gadgets joined in cyclic order at signed vertices."""
    k = Rat(k)
    if k <= 0:
        raise ParameterError(f"module parameter k must be positive, got {k}")
    tau = w.tau
    signed = []
    unsigned = []
    next_id = 0
    for letter in w:
        signed.append(next_id)
        next_id += 1
        if letter in "PC":
            unsigned.append((next_id, next_id + 1))
            next_id += 2
        else:
            unsigned.append(None)
    edges = []
    for i, letter in enumerate(w):
        gadget = build_module_gadget(letter, k)
        labels = {"+": signed[i], "-": signed[(i + 1) % tau]}
        if unsigned[i] is not None:
            labels["a"], labels["b"] = unsigned[i]
        for x, y, weight in gadget.edges:
            edges.append((labels[x], labels[y], weight))
    return WeightedGraph(next_id, edges, word=w, k=k, signed=signed, unsigned=unsigned)


def laplacian_entry_squared(g: WeightedGraph, u: int, v: int):
    """Exact rational w(u,v)^2 / (d_u d_v) for an edge; scaling-invariant."""
    w = g.weight(u, v)
    return w * w / (g.degrees[u] * g.degrees[v])


def normalized_laplacian(g: WeightedGraph) -> np.ndarray:
    """Dense symmetric L: 1 on the diagonal, -w(u,v)/sqrt(d_u d_v) on edges."""
    if g.has_isolated_vertex():
        raise DegreeError("graph has an isolated vertex")
    L = np.eye(g.n)
    for u, v, _ in g.edges():
        entry = -math.sqrt(float(laplacian_entry_squared(g, u, v)))
        L[u, v] = L[v, u] = entry
    return L


def random_walk_matrix(g: WeightedGraph):
    """Row-stochastic transition matrix D^{-1}A as exact rationals."""
    if g.has_isolated_vertex():
        raise DegreeError("graph has an isolated vertex")
    zero = Rat(0)
    return [
        [g.adj[i].get(j, zero) / g.degrees[i] for j in range(g.n)]
        for i in range(g.n)
    ]


def _alignment_map(g1: WeightedGraph, g2: WeightedGraph, offset: int, reverse: bool):
    """Vertex map g1 -> g2 aligning module i to offset+i (or offset-i)."""
    tau = g1.word.tau
    mapping = {}
    for i in range(tau):
        j = (offset - i) % tau if reverse else (offset + i) % tau
        s_target = (j + 1) % tau if reverse else j
        mapping[g1.signed[i]] = g2.signed[s_target]
        if g1.unsigned[i] is not None:
            if g2.unsigned[j] is None:
                return None
            a, b = g1.unsigned[i]
            a2, b2 = g2.unsigned[j]
            if reverse:
                a2, b2 = b2, a2
            mapping[a] = a2
            mapping[b] = b2
    return mapping


def subgraph_after_symmetry(g1: WeightedGraph, g2: WeightedGraph) -> bool:
    """True iff some module rotation/reflection embeds g1's edges into g2.

    Every edge of g1 must land on an edge of g2 with equal weight.
    """
    if g1.word is None or g2.word is None:
        raise ShapeError("both graphs must carry ring metadata")
    if g1.word.tau != g2.word.tau:
        raise ShapeError(f"ring lengths differ: {g1.word.tau} vs {g2.word.tau}")
    if g1.edge_count > g2.edge_count:
        return False
    tau = g1.word.tau
    for reverse in (False, True):
        for offset in range(tau):
            mapping = _alignment_map(g1, g2, offset, reverse)
            if mapping is None:
                continue
            if all(
                g2.weight(mapping[u], mapping[v]) == w for u, v, w in g1.edges()
            ):
                return True
    return False


def export_graph(g: WeightedGraph, format: str) -> str:
    """Serialize deterministically as DOT, JSON, or edge-list CSV."""
    fmt = format.strip().lower()
    if fmt == "csv":
        return "\n".join(f"{u},{v},{rat_str(w)}" for u, v, w in g.edges()) + "\n"
    if fmt == "json":
        payload = {
            "word": str(g.word) if g.word is not None else None,
            "k": rat_str(g.k) if g.k is not None else None,
            "n": g.n,
            "edges": [[u, v, rat_str(w)] for u, v, w in g.edges()],
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt == "dot":
        lines = ["graph G {"]
        for u, v, w in g.edges():
            lines.append(f'  {u} -- {v} [label="{rat_str(w)}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    raise FormatError(f"unknown export format {format!r}")
