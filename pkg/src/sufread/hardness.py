"""The vertex-cover reduction: a DFA whose small DSAs encode small vertex covers."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass

from .core import AutomatonError, Dfa, TOKEN_RE, size_metrics
from .derivation import derive, is_suffix_tracking

Q_INIT, Q_SINK, Q_ACC = "q_init", "q_sink", "q_acc"
SPECIALS = (Q_INIT, Q_SINK, Q_ACC)
MAX_VC_VERTICES = 8


class GraphError(AutomatonError):
    pass


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph with named vertices."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    def problems(self) -> list[str]:
        out = []
        vs = set(self.vertices)
        if len(vs) != len(self.vertices):
            out.append("duplicate vertices")
        if len(vs) < 3:
            out.append("at least 3 vertices are required")
        seen = set()
        for u, v in self.edges:
            if u not in vs or v not in vs:
                out.append(f"edge {u} -- {v} uses an undeclared vertex")
            if u == v:
                out.append(f"self-loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                out.append(f"parallel edge {u} -- {v}")
            seen.add(key)
        if not out and not self.is_connected():
            out.append("graph is not connected")
        return out

    def check(self) -> None:
        problems = self.problems()
        if problems:
            raise GraphError("; ".join(problems))

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        seen = {self.vertices[0]}
        todo = [self.vertices[0]]
        while todo:
            for w in adj[todo.pop()]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.vertices)

    def is_vertex_cover(self, cover) -> bool:
        cover = set(cover)
        return all(u in cover or v in cover for u, v in self.edges)

    def vertex_covers(self) -> list[frozenset[str]]:
        """All covers, smallest first."""
        out = []
        for r in range(len(self.vertices) + 1):
            for c in itertools.combinations(self.vertices, r):
                if self.is_vertex_cover(c):
                    out.append(frozenset(c))
        return out


def edge_symbol(u: str, v: str) -> str:
    a, b = sorted((u, v))
    return f"e.{a}.{b}"


def default_theta(g: Graph) -> int:
    return (len(g.vertices) + len(g.edges)) ** 4


def vc_alphabet(g: Graph, theta: int) -> tuple[list[str], list[str], list[str]]:
    """Vertex symbols, edge symbols and digit symbols; raises on any name clash."""
    if theta < 1:
        raise GraphError("theta must be at least 1")
    g.check()
    verts = list(g.vertices)
    edges = [edge_symbol(u, v) for u, v in g.edges]
    digits = [str(i) for i in range(1, theta + 1)]
    for name in verts:
        if not TOKEN_RE.match(name):
            raise GraphError(f"vertex name {name!r} is not a valid token")
        if name in SPECIALS:
            raise GraphError(f"vertex name {name!r} clashes with a reserved state name")
    everything = verts + edges + ["$"] + digits
    clash = sorted(s for s, n in Counter(everything).items() if n > 1)
    if clash:
        raise GraphError(f"symbol names clash: {clash}")
    return verts, edges, digits


def build_vc_dfa(g: Graph, theta: int) -> Dfa:
    """Complete DFA over vertices, edges, ``$`` and the numerals ``1..theta``.

    States are ``q_init``, one per vertex, ``q_sink`` and ``q_acc``.
    """
    verts, edges, digits = vc_alphabet(g, theta)
    names = (Q_INIT, *verts, Q_SINK, Q_ACC)
    idx = {n: i for i, n in enumerate(names)}
    alphabet = tuple(sorted(verts + edges + ["$"] + digits))
    delta = {}
    for (u, v), e in zip(g.edges, edges):
        delta[(idx[u], e)] = idx[v]
        delta[(idx[v], e)] = idx[u]
    for v in verts:
        delta[(idx[Q_INIT], v)] = idx[v]
        delta[(idx[v], "$")] = idx[Q_ACC]
    for q in range(len(names)):
        for a in alphabet:
            delta.setdefault((q, a), idx[Q_SINK])
    return Dfa(names, alphabet, idx[Q_INIT], frozenset({idx[Q_ACC]}), delta)


def kept_states(m: Dfa, cover) -> frozenset[int]:
    return frozenset(m.state(n) for n in (*cover, *SPECIALS))


def reduction_k(k_prime: int, theta: int) -> int:
    return (k_prime + 2) * 2 * theta + (2 * theta - 1)


@dataclass(frozen=True)
class CorrespondenceRow:
    subset: frozenset[str]
    suffix_tracking: bool
    vertex_cover: bool


@dataclass(frozen=True)
class CorrespondenceReport:
    rows: tuple[CorrespondenceRow, ...]

    @property
    def agreement(self) -> bool:
        return all(r.suffix_tracking == r.vertex_cover for r in self.rows)

    def mismatches(self) -> list[CorrespondenceRow]:
        return [r for r in self.rows if r.suffix_tracking != r.vertex_cover]


def vc_sts_correspondence(g: Graph, theta: int, cap: int | None = None) -> CorrespondenceReport:
    """Compare, for every vertex subset, suffix-tracking in the DFA with being a cover."""
    if len(g.vertices) > MAX_VC_VERTICES:
        raise GraphError(f"at most {MAX_VC_VERTICES} vertices are supported here")
    m = build_vc_dfa(g, theta)
    rows = []
    for r in range(len(g.vertices) + 1):
        for subset in itertools.combinations(g.vertices, r):
            sts = bool(is_suffix_tracking(m, kept_states(m, subset), cap, fast=True))
            rows.append(CorrespondenceRow(frozenset(subset), sts, g.is_vertex_cover(subset)))
    return CorrespondenceReport(tuple(rows))


@dataclass(frozen=True)
class SizeRow:
    subset: frozenset[str]
    total: int


@dataclass(frozen=True)
class ReductionReport:
    k_prime: int
    theta: int
    k: int
    min_cover: int
    forward: SizeRow | None      # derived DSA for a smallest cover, when it has size <= k_prime
    forward_holds: bool | None   # None when no cover of size <= k_prime exists
    backward: tuple[SizeRow, ...]  # every derived DSA with total <= k
    backward_holds: bool


def reduction_size_check(g: Graph, k_prime: int, theta: int | None = None,
                         cap: int | None = None, backward: bool = True) -> ReductionReport:
    """Size bookkeeping of the reduction on one graph.

    Forward: a smallest cover, if of size at most ``k_prime``, yields a
    derived DSA of total at most ``k``.  Backward: every suffix-tracking
    vertex subset whose derived DSA has total at most ``k`` is a cover of
    size at most ``k_prime``.
    """
    if len(g.vertices) > MAX_VC_VERTICES:
        raise GraphError(f"at most {MAX_VC_VERTICES} vertices are supported here")
    theta = default_theta(g) if theta is None else theta
    m = build_vc_dfa(g, theta)
    k = reduction_k(k_prime, theta)
    covers = g.vertex_covers()
    smallest = min(covers, key=lambda c: (len(c), sorted(c)))
    forward = None
    holds = None
    if len(smallest) <= k_prime:
        total = size_metrics(derive(m, kept_states(m, smallest), cap)).total
        forward = SizeRow(smallest, total)
        holds = total <= k
    rows = []
    ok = True
    if backward:
        for r in range(len(g.vertices) + 1):
            for subset in itertools.combinations(g.vertices, r):
                S = kept_states(m, subset)
                if not is_suffix_tracking(m, S, cap, fast=True):
                    continue
                total = size_metrics(derive(m, S, cap)).total
                if total <= k:
                    rows.append(SizeRow(frozenset(subset), total))
                    ok &= g.is_vertex_cover(subset) and len(subset) <= k_prime
    return ReductionReport(k_prime, theta, k, len(smallest), forward, holds, tuple(rows), ok)
