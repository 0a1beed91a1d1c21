"""Words, suffix algebra and the two automaton types.

A word is a tuple of symbol tokens.  Tokens are arbitrary non-empty strings
without whitespace, so ``("a", "a", "b")`` and ``("if", "else")`` are both
words.  Automata store states as dense integers ``0..n-1`` together with a
tuple of display names.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property

Word = tuple[str, ...]
EPSILON: Word = ()

TOKEN_RE = re.compile(r"[A-Za-z0-9_.$-]+\Z")


class AutomatonError(ValueError):
    """Raised on structurally invalid automata or bad state references."""


def chars(text: str) -> Word:
    """Split a bare string into single-character symbols."""
    return tuple(text)


def tokens(text: str) -> Word:
    """Split a whitespace-separated token sequence."""
    return tuple(text.split())


def show(w: Word) -> str:
    """Render a word compactly: joined for single characters, spaced otherwise."""
    if not w:
        return "ε"
    if all(len(s) == 1 for s in w):
        return "".join(w)
    return " ".join(w)


def word_key(w: Word) -> tuple:
    return (len(w), w)


def is_suffix(u: Word, w: Word) -> bool:
    return len(u) <= len(w) and (not u or w[len(w) - len(u):] == u)


def is_prefix(u: Word, w: Word) -> bool:
    return len(u) <= len(w) and w[: len(u)] == u


def prefixes(w: Word, *, proper: bool = False, nonempty: bool = False) -> list[Word]:
    stop = len(w) if proper else len(w) + 1
    start = 1 if nonempty else 0
    return [w[:i] for i in range(start, stop)]


def suffixes(w: Word, *, proper: bool = False, nonempty: bool = True) -> list[Word]:
    """Suffixes of ``w`` from longest to shortest."""
    start = 1 if proper else 0
    stop = len(w) if nonempty else len(w) + 1
    return [w[i:] for i in range(start, stop)]


def longest_suffix_in(words: Iterable[Word], w: Word) -> Word | None:
    """Longest member of ``words`` that is a suffix of ``w``.

    Two suffixes of ``w`` of equal length are equal, so the answer is unique.
    """
    pool = words if isinstance(words, (set, frozenset, dict)) else set(words)
    for i in range(len(w) + 1):
        if w[i:] in pool:
            return w[i:]
    return None


def prefix_closure(words: Iterable[Word]) -> set[Word]:
    closure: set[Word] = {EPSILON}
    for w in words:
        closure.update(w[:i] for i in range(1, len(w) + 1))
    return closure


def _dedupe_names(names: Iterable[str]) -> tuple[str, ...]:
    seen: set[str] = set()
    out = []
    for name in names:
        candidate, n = name, 1
        while candidate in seen:
            candidate = f"{name}_{n}"
            n += 1
        seen.add(candidate)
        out.append(candidate)
    return tuple(out)


def _sorted_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set(alphabet)))


@dataclass(frozen=True)
class SizeMetrics:
    n_states: int
    n_edges: int
    label_len: int

    @property
    def total(self) -> int:
        return self.n_states + self.n_edges + self.label_len

    def __str__(self) -> str:
        return (f"states={self.n_states} edges={self.n_edges} "
                f"label_len={self.label_len} total={self.total}")


@dataclass(frozen=True, eq=True)
class Dfa:
    """Deterministic finite automaton with a possibly partial ``delta``."""

    names: tuple[str, ...]
    alphabet: tuple[str, ...]
    initial: int
    accepting: frozenset[int]
    delta: Mapping[tuple[int, str], int] = field(default_factory=dict)

    __hash__ = None  # type: ignore[assignment]

    @property
    def n_states(self) -> int:
        return len(self.names)

    @property
    def states(self) -> range:
        return range(len(self.names))

    @property
    def is_complete(self) -> bool:
        return all((q, a) in self.delta for q in self.states for a in self.alphabet)

    def step(self, q: int, a: str) -> int | None:
        return self.delta.get((q, a))

    def state(self, ref: int | str) -> int:
        return _resolve(self.names, ref)

    @classmethod
    def from_table(
        cls,
        table: Mapping[str, Mapping[str, str]],
        initial: str,
        accepting: Iterable[str],
        alphabet: Iterable[str] | None = None,
        states: Iterable[str] | None = None,
    ) -> Dfa:
        """Build from ``{state: {symbol: target}}`` keyed by state names."""
        names = list(states) if states is not None else []
        for src, row in table.items():
            for n in (src, *row.values()):
                if n not in names:
                    names.append(n)
        for n in (initial, *accepting):
            if n not in names:
                names.append(n)
        idx = {n: i for i, n in enumerate(names)}
        alpha = set(alphabet) if alphabet is not None else set()
        delta = {}
        for src, row in table.items():
            for sym, dst in row.items():
                alpha.add(sym)
                delta[(idx[src], sym)] = idx[dst]
        return cls(tuple(names), _sorted_alphabet(alpha), idx[initial],
                   frozenset(idx[n] for n in accepting), delta)


@dataclass(frozen=True, eq=True)
class Dsa:
    """Deterministic suffix-reading automaton.

    ``transitions`` is a tuple of ``(source, label, target)`` kept in canonical
    order (source id, label length, label).  Determinism is not enforced at
    construction; :func:`validate` reports violations.
    """

    names: tuple[str, ...]
    alphabet: tuple[str, ...]
    initial: int
    accepting: frozenset[int]
    transitions: tuple[tuple[int, Word, int], ...]

    __hash__ = None  # type: ignore[assignment]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.transitions, key=lambda t: (t[0], len(t[1]), t[1], t[2])))
        object.__setattr__(self, "transitions", ordered)

    @property
    def n_states(self) -> int:
        return len(self.names)

    @property
    def states(self) -> range:
        return range(len(self.names))

    def state(self, ref: int | str) -> int:
        return _resolve(self.names, ref)

    @cached_property
    def out(self) -> dict[int, dict[Word, int]]:
        """``out[q][label] = target``; assumes determinism."""
        table: dict[int, dict[Word, int]] = {q: {} for q in self.states}
        for src, label, dst in self.transitions:
            table.setdefault(src, {})[label] = dst
        return table

    @cached_property
    def max_label_len(self) -> int:
        return max((len(t[1]) for t in self.transitions), default=0)

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[str, str | Word, str]],
        initial: str,
        accepting: Iterable[str] = (),
        alphabet: Iterable[str] | None = None,
        states: Iterable[str] | None = None,
    ) -> Dsa:
        """Build from name-keyed edges; string labels are split into characters."""
        edges = [(s, chars(l) if isinstance(l, str) else tuple(l), d) for s, l, d in edges]
        accepting = list(accepting)
        names = list(states) if states is not None else [initial]
        for s, _, d in edges:
            for n in (s, d):
                if n not in names:
                    names.append(n)
        for n in accepting:
            if n not in names:
                names.append(n)
        idx = {n: i for i, n in enumerate(names)}
        alpha = set(alphabet) if alphabet is not None else {a for _, l, _ in edges for a in l}
        return cls(tuple(names), _sorted_alphabet(alpha), idx[initial],
                   frozenset(idx[n] for n in accepting),
                   tuple((idx[s], l, idx[d]) for s, l, d in edges))

    def with_transitions(self, transitions: Iterable[tuple[int, Word, int]]) -> Dsa:
        return Dsa(self.names, self.alphabet, self.initial, self.accepting, tuple(transitions))

    def edges_by_name(self) -> set[tuple[str, str, str]]:
        return {(self.names[s], show(l), self.names[d]) for s, l, d in self.transitions}


def _resolve(names: tuple[str, ...], ref: int | str) -> int:
    if isinstance(ref, int):
        if 0 <= ref < len(names):
            return ref
        raise AutomatonError(f"unknown state id {ref}")
    try:
        return names.index(ref)
    except ValueError:
        raise AutomatonError(f"unknown state {ref!r}") from None


def dfa_as_dsa(m: Dfa) -> Dsa:
    """View a DFA as a DSA whose labels are single letters."""
    return Dsa(m.names, m.alphabet, m.initial, m.accepting,
               tuple((q, (a,), t) for (q, a), t in m.delta.items()))


def out_labels(a: Dsa, q: int | str) -> set[Word]:
    return set(a.out[a.state(q)])


def out_prefix_closure(a: Dsa, q: int | str) -> set[Word]:
    return prefix_closure(out_labels(a, q))


def size_metrics(a: Dsa | Dfa) -> SizeMetrics:
    if isinstance(a, Dfa):
        return SizeMetrics(a.n_states, len(a.delta), len(a.delta))
    return SizeMetrics(a.n_states, len(a.transitions), sum(len(t[1]) for t in a.transitions))


def validate(a: Dsa | Dfa) -> list[str]:
    """Structural violations as human-readable strings; empty when valid."""
    problems: list[str] = []
    n = a.n_states
    if n == 0:
        problems.append("no states declared")
    if not a.alphabet:
        problems.append("empty alphabet")
    if len(set(a.alphabet)) != len(a.alphabet):
        problems.append("duplicate alphabet symbols")
    for sym in a.alphabet:
        if not sym or any(c.isspace() for c in sym):
            problems.append(f"bad symbol {sym!r}")
    if len(set(a.names)) != len(a.names):
        problems.append("duplicate state names")
    if not 0 <= a.initial < n:
        problems.append(f"initial state {a.initial} is not declared")
    for q in sorted(a.accepting):
        if not 0 <= q < n:
            problems.append(f"accepting state {q} is not declared")
    name = (lambda q: a.names[q] if 0 <= q < n else str(q))
    alpha = set(a.alphabet)
    if isinstance(a, Dfa):
        for (q, sym), t in sorted(a.delta.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            if not 0 <= q < n:
                problems.append(f"dangling source {q} on {sym!r}")
            if sym not in alpha:
                problems.append(f"symbol {sym!r} at {name(q)} not in alphabet")
            if not 0 <= t < n:
                problems.append(f"dangling target {t} from {name(q)} on {sym!r}")
        return problems
    seen: dict[tuple[int, Word], int] = {}
    for src, label, dst in a.transitions:
        where = f"{name(src)} --{show(label)}--> {name(dst)}"
        if not 0 <= src < n:
            problems.append(f"dangling source in {where}")
        if not 0 <= dst < n:
            problems.append(f"dangling target in {where}")
        if not label:
            problems.append(f"empty label in {where}")
        bad = [s for s in label if s not in alpha]
        if bad:
            problems.append(f"label symbols {bad} not in alphabet in {where}")
        key = (src, label)
        if key in seen and seen[key] != dst:
            problems.append(f"determinism violation at {name(src)} on {show(label)}")
        elif key in seen:
            problems.append(f"duplicate transition {where}")
        seen[key] = dst
    return problems


def check_valid(a: Dsa | Dfa) -> None:
    problems = validate(a)
    if problems:
        raise AutomatonError("; ".join(problems))


def rename(a: Dsa | Dfa, perm: Mapping[int, int], names: Iterable[str] | None = None):
    """Apply a state permutation ``old -> new`` (used for isomorphism tests)."""
    n = a.n_states
    new_names = list(names) if names is not None else [None] * n
    if names is None:
        for old, new in perm.items():
            new_names[new] = a.names[old]
    if isinstance(a, Dfa):
        return Dfa(tuple(new_names), a.alphabet, perm[a.initial],
                   frozenset(perm[q] for q in a.accepting),
                   {(perm[q], s): perm[t] for (q, s), t in a.delta.items()})
    return Dsa(tuple(new_names), a.alphabet, perm[a.initial],
               frozenset(perm[q] for q in a.accepting),
               tuple((perm[s], l, perm[d]) for s, l, d in a.transitions))


def reachable_states(a: Dsa | Dfa) -> list[int]:
    """States reachable from the initial one along the transition graph, in BFS order."""
    succ: dict[int, list[int]] = {}
    if isinstance(a, Dfa):
        for q in a.states:
            succ[q] = [a.delta[(q, s)] for s in a.alphabet if (q, s) in a.delta]
    else:
        for s, _, d in a.transitions:
            succ.setdefault(s, []).append(d)
    order = [a.initial]
    seen = {a.initial}
    for q in order:
        for t in succ.get(q, ()):
            if t not in seen:
                seen.add(t)
                order.append(t)
    return order


def restrict(a: Dsa, keep: Iterable[int]) -> Dsa:
    """Keep only the given states (renumbered in id order) and their edges."""
    kept = sorted(set(keep))
    idx = {q: i for i, q in enumerate(kept)}
    return Dsa(tuple(a.names[q] for q in kept), a.alphabet, idx[a.initial],
               frozenset(idx[q] for q in a.accepting if q in idx),
               tuple((idx[s], l, idx[d]) for s, l, d in a.transitions if s in idx and d in idx))
