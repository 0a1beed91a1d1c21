"""The tracking DFA of a DSA.

Each DSA state ``q`` expands into one DFA state per prefix of its outgoing
labels, remembering the longest partially matched prefix, plus a ``copy``
state reached when nothing is partially matched but input has been read
since the last move.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .core import (EPSILON, Dfa, Dsa, Word, check_valid, prefix_closure,
                   size_metrics, word_key, _dedupe_names)


@dataclass(frozen=True, order=True)
class TrackState:
    state: int
    partial: Word = EPSILON
    copy: bool = False

    @classmethod
    def pair(cls, q: int, partial: Word = EPSILON) -> TrackState:
        return cls(q, tuple(partial), False)

    @classmethod
    def copy_of(cls, q: int) -> TrackState:
        return cls(q, EPSILON, True)


@dataclass(frozen=True)
class Tracking:
    dfa: Dfa
    origin: tuple[TrackState, ...]

    def index(self, ts: TrackState) -> int:
        return self._index[ts]

    @cached_property
    def _index(self) -> dict[TrackState, int]:
        return {ts: i for i, ts in enumerate(self.origin)}

    def pair(self, q: int, partial: Word = EPSILON) -> int:
        return self._index[TrackState.pair(q, partial)]


def _state_name(a: Dsa, ts: TrackState) -> str:
    base = a.names[ts.state]
    if ts.copy:
        return f"{base}.copy"
    if not ts.partial:
        return base
    sep = "" if all(len(s) == 1 for s in ts.partial) else "-"
    return f"{base}.{sep.join(ts.partial)}"


def tracking_dfa(a: Dsa) -> Tracking:
    """Complete DFA accepting the same language as ``a``.

    From ``(q, beta)`` on letter ``x``: if some label of ``q`` is a suffix of
    ``beta x`` the longest one fires and we go to ``(target, eps)``;
    otherwise we keep the longest label prefix that is a suffix of
    ``beta x``, or fall to ``copy(q)`` when there is none.  ``copy(q)``
    behaves like ``(q, eps)`` but is never accepting.
    """
    check_valid(a)
    origin: list[TrackState] = []
    for q in a.states:
        closure = sorted(prefix_closure(a.out[q]), key=word_key)
        origin.extend(TrackState.pair(q, b) for b in closure)
        origin.append(TrackState.copy_of(q))
    index = {ts: i for i, ts in enumerate(origin)}

    delta: dict[tuple[int, str], int] = {}
    for q in a.states:
        labels = a.out[q]
        closure = prefix_closure(labels)
        lengths = sorted({len(b) for b in closure if b}, reverse=True)
        label_lengths = sorted({len(l) for l in labels}, reverse=True)

        def advance(beta: Word, x: str) -> int:
            bx = beta + (x,)
            n = len(bx)
            for k in label_lengths:
                if k <= n and bx[n - k:] in labels:
                    return index[TrackState.pair(labels[bx[n - k:]])]
            for k in lengths:
                if k <= n and bx[n - k:] in closure:
                    return index[TrackState.pair(q, bx[n - k:])]
            return index[TrackState.copy_of(q)]

        for beta in closure:
            src = index[TrackState.pair(q, beta)]
            for x in a.alphabet:
                delta[(src, x)] = advance(beta, x)
        cp = index[TrackState.copy_of(q)]
        eps = index[TrackState.pair(q)]
        for x in a.alphabet:
            delta[(cp, x)] = delta[(eps, x)]

    dfa = Dfa(_dedupe_names(_state_name(a, ts) for ts in origin), a.alphabet,
              index[TrackState.pair(a.initial)],
              frozenset(index[TrackState.pair(q)] for q in a.accepting), delta)
    return Tracking(dfa, tuple(origin))


def tracking_size_bound_check(a: Dsa) -> bool:
    """Tracking DFA has at most ``2|A|`` states and total size ``2|A|(1+2|Sigma|)``."""
    k = size_metrics(a).total
    m = tracking_dfa(a).dfa
    return m.n_states <= 2 * k and size_metrics(m).total <= 2 * k * (1 + 2 * len(a.alphabet))
