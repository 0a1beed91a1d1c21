"""Moves, runs and acceptance for DSAs and DFAs."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Dfa, Dsa, Word, show


@dataclass(frozen=True)
class Move:
    source: int
    label: Word
    target: int
    consumed: Word


@dataclass(frozen=True)
class Run:
    moves: tuple[Move, ...]
    residue: Word
    final_state: int
    accepted: bool

    def describe(self, a: Dsa) -> list[str]:
        lines = [f"{a.names[m.source]} --{show(m.label)}--> {a.names[m.target]}"
                 f"  (read {show(m.consumed)})" for m in self.moves]
        lines.append(f"final state: {a.names[self.final_state]}")
        if self.accepted:
            lines.append("accept")
        elif self.residue:
            lines.append(f"reject (residue: {show(self.residue)})")
        else:
            lines.append("reject (final state not accepting)")
        return lines


def _fire(labels: dict[Word, int], lengths: list[int], read: Word) -> Word | None:
    # longest label that is a suffix of what has been read
    n = len(read)
    for k in lengths:
        if k <= n and read[n - k:] in labels:
            return read[n - k:]
    return None


def dsa_step(a: Dsa, q: int, w: Word) -> tuple[Move, Word] | None:
    """The move from ``q`` on the shortest prefix of ``w`` that ends with a label.

    Scans ``w`` left to right; at the first position where some outgoing
    label is a suffix of the prefix read so far, the longest such label fires.
    """
    q = a.state(q)
    labels = a.out[q]
    if not labels:
        return None
    lengths = sorted({len(l) for l in labels}, reverse=True)
    for i in range(1, len(w) + 1):
        hit = _fire(labels, lengths, w[:i])
        if hit is not None:
            return Move(q, hit, labels[hit], tuple(w[:i])), tuple(w[i:])
    return None


def dsa_run(a: Dsa, w: Word) -> Run:
    q, rest = a.initial, tuple(w)
    moves = []
    while rest:
        step = dsa_step(a, q, rest)
        if step is None:
            break
        move, rest = step
        moves.append(move)
        q = move.target
    return Run(tuple(moves), rest, q, q in a.accepting and not rest)


def dsa_accepts(a: Dsa, w: Word) -> bool:
    return dsa_run(a, w).accepted


def dfa_run(m: Dfa, w: Word) -> int | None:
    q = m.initial
    for sym in w:
        nxt = m.delta.get((q, sym))
        if nxt is None:
            return None
        q = nxt
    return q


def dfa_accepts(m: Dfa, w: Word) -> bool:
    return dfa_run(m, w) in m.accepting
