"""Completion, minimization, isomorphism and language equivalence of DFAs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import AutomatonError, Dfa, Dsa, Word, _dedupe_names, reachable_states
from .tracking import tracking_dfa


class IncompleteDfaError(AutomatonError):
    pass


class AlphabetMismatchError(AutomatonError):
    pass


@dataclass(frozen=True)
class EquivClasses:
    """Nerode partition of all states of a DFA.

    ``block_of[s]`` is the block index of state ``s``; ``to_min[s]`` is the
    state of the minimized DFA that ``s`` maps to, or ``None`` when ``s`` is
    unreachable and its block has no reachable member.
    """

    blocks: tuple[frozenset[int], ...]
    block_of: tuple[int, ...]
    to_min: tuple[int | None, ...]


@dataclass(frozen=True)
class EquivResult:
    equivalent: bool
    counterexample: Word | None = None

    def __bool__(self) -> bool:
        return self.equivalent


def complete(m: Dfa) -> Dfa:
    """Add a non-accepting sink for missing transitions; identity on complete DFAs."""
    if m.is_complete:
        return m
    sink = m.n_states
    names = _dedupe_names((*m.names, "sink"))
    delta = dict(m.delta)
    for q in range(sink + 1):
        for a in m.alphabet:
            delta.setdefault((q, a), sink)
    return Dfa(names, m.alphabet, m.initial, m.accepting, delta)


def _require_complete(m: Dfa) -> None:
    if not m.is_complete:
        raise IncompleteDfaError("DFA is not complete")


def nerode_partition(m: Dfa) -> tuple[int, ...]:
    """Moore-style refinement over all states; returns a block id per state."""
    _require_complete(m)
    block = tuple(1 if q in m.accepting else 0 for q in m.states)
    n_blocks = len(set(block))
    while True:
        sigs: dict[tuple, int] = {}
        refined = []
        for q in m.states:
            sig = (block[q], *(block[m.delta[(q, a)]] for a in m.alphabet))
            refined.append(sigs.setdefault(sig, len(sigs)))
        if len(sigs) == n_blocks:
            return tuple(refined)
        block, n_blocks = tuple(refined), len(sigs)


def minimize(m: Dfa) -> tuple[Dfa, EquivClasses]:
    """Canonical DFA of ``L(m)``; states numbered in BFS order over the sorted alphabet."""
    part = nerode_partition(m)
    members: dict[int, list[int]] = {}
    for q, b in enumerate(part):
        members.setdefault(b, []).append(q)
    reach = set(reachable_states(m))

    order = [part[m.initial]]
    new_id = {part[m.initial]: 0}
    for b in order:
        rep = members[b][0]
        for a in m.alphabet:
            nb = part[m.delta[(rep, a)]]
            if nb not in new_id:
                new_id[nb] = len(order)
                order.append(nb)

    def display(b: int) -> str:
        live = [q for q in members[b] if q in reach] or members[b]
        return m.names[live[0]]

    delta = {}
    for b in order:
        rep = members[b][0]
        for a in m.alphabet:
            delta[(new_id[b], a)] = new_id[part[m.delta[(rep, a)]]]
    minimal = Dfa(_dedupe_names(display(b) for b in order), m.alphabet, 0,
                  frozenset(new_id[b] for b in order if members[b][0] in m.accepting), delta)
    keys = sorted(members)
    classes = EquivClasses(
        blocks=tuple(frozenset(members[b]) for b in keys),
        block_of=tuple(keys.index(b) for b in part),
        to_min=tuple(new_id.get(b) for b in part),
    )
    return minimal, classes


def residual_equiv(m: Dfa, s1: int | str, s2: int | str) -> bool:
    part = nerode_partition(m)
    return part[m.state(s1)] == part[m.state(s2)]


def dfa_equiv(m1: Dfa, m2: Dfa) -> EquivResult:
    """Product BFS; a counterexample is shortest, then lexicographically least."""
    if set(m1.alphabet) != set(m2.alphabet):
        diff = sorted(set(m1.alphabet) ^ set(m2.alphabet))
        raise AlphabetMismatchError(f"alphabets differ on {diff}")
    m1, m2 = complete(m1), complete(m2)
    start = (m1.initial, m2.initial)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        if (pair[0] in m1.accepting) != (pair[1] in m2.accepting):
            word = []
            node = pair
            while parent[node] is not None:
                node, sym = parent[node]
                word.append(sym)
            return EquivResult(False, tuple(reversed(word)))
        for a in m1.alphabet:
            nxt = (m1.delta[(pair[0], a)], m2.delta[(pair[1], a)])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return EquivResult(True)


def dfa_isomorphic(m1: Dfa, m2: Dfa) -> dict[int, int] | None:
    """State bijection preserving initial, accepting and transitions, or ``None``."""
    if m1.n_states != m2.n_states or set(m1.alphabet) != set(m2.alphabet):
        return None
    f = {m1.initial: m2.initial}
    used = {m2.initial}
    queue = deque([m1.initial])
    while queue:
        q = queue.popleft()
        if (q in m1.accepting) != (f[q] in m2.accepting):
            return None
        for a in m1.alphabet:
            t1, t2 = m1.delta.get((q, a)), m2.delta.get((f[q], a))
            if (t1 is None) != (t2 is None):
                return None
            if t1 is None:
                continue
            if t1 in f:
                if f[t1] != t2:
                    return None
            elif t2 in used:
                return None
            else:
                f[t1] = t2
                used.add(t2)
                queue.append(t1)
    return f if len(f) == m1.n_states else None


def dsa_equiv(a1: Dsa, a2: Dsa) -> EquivResult:
    return dfa_equiv(tracking_dfa(a1).dfa, tracking_dfa(a2).dfa)


def language_equiv(x: Dfa | Dsa, y: Dfa | Dsa) -> EquivResult:
    """Equivalence of any mix of DFAs and DSAs."""
    as_dfa = (lambda z: z if isinstance(z, Dfa) else tracking_dfa(z).dfa)
    return dfa_equiv(as_dfa(x), as_dfa(y))
