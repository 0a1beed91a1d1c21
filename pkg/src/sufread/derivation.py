"""From a complete DFA to a smaller DSA.

A candidate set ``S`` of DFA states is kept; every other state is suppressed
and the DSA's transitions become the simple words between kept states.  The
checks here decide whether that is language-preserving, and the removal
pass drops transitions that can never influence a run.
"""

from __future__ import annotations

import itertools
import os
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import Enum

from .core import (AutomatonError, Dfa, Dsa, Word, is_prefix, is_suffix,
                   longest_suffix_in, reachable_states, restrict, show,
                   size_metrics, suffixes)
from .dfa_ops import IncompleteDfaError, dsa_equiv
from .shape import is_dsa_well_formed

DEFAULT_CAP = 10_000
DEFAULT_MAX_STATES = 20


class SimpleWordCapError(AutomatonError):
    pass


class NotSuffixTrackingError(AutomatonError):
    def __init__(self, report: DerivationReport, message: str):
        super().__init__(message)
        self.report = report


class NotWellFormedError(AutomatonError):
    pass


def default_cap() -> int:
    raw = os.environ.get("SUFREAD_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise AutomatonError(f"SUFREAD_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise AutomatonError("SUFREAD_CAP must be positive")
    return cap


def state_set(m: Dfa, states: Iterable[int | str]) -> frozenset[int]:
    """Resolve ids or names to a set of state ids of ``m``."""
    return frozenset(m.state(s) for s in states)


# ---------------------------------------------------------------- simple words

def sp_from(m: Dfa, S: Iterable[int | str], p: int | str, cap: int | None = None) -> dict[int, set[Word]]:
    """Simple words modulo ``S`` leaving ``p``, grouped by end state.

    Only states of ``S`` and the start ``p`` end a path; every other state
    may be visited at most once.
    """
    if not m.is_complete:
        raise IncompleteDfaError("simple words need a complete DFA")
    cap = default_cap() if cap is None else cap
    S, p = state_set(m, S), m.state(p)
    groups: dict[int, set[Word]] = {}
    count = 0

    def record(q: int, w: Word) -> None:
        nonlocal count
        groups.setdefault(q, set()).add(w)
        count += 1
        if count > cap:
            raise SimpleWordCapError(
                f"more than {cap} simple words leave {m.names[p]}; raise the cap to continue")

    stack: list[tuple[int, Word, frozenset[int]]] = [(p, (), frozenset())]
    while stack:
        cur, word, seen = stack.pop()
        for a in m.alphabet:
            nxt = m.delta[(cur, a)]
            w = word + (a,)
            if nxt == p or nxt in S:
                record(nxt, w)
            elif nxt not in seen:
                record(nxt, w)
                stack.append((nxt, w, seen | {nxt}))
    return groups


def simple_words(m: Dfa, S: Iterable[int | str], p: int | str, q: int | str,
                 cap: int | None = None) -> set[Word]:
    return sp_from(m, S, p, cap).get(m.state(q), set())


def out_mod(m: Dfa, S: Iterable[int | str], p: int | str, cap: int | None = None) -> dict[int, set[Word]]:
    """The part of ``sp_from`` that ends inside ``S``."""
    S = state_set(m, S)
    return {q: ws for q, ws in sp_from(m, S, p, cap).items() if q in S}


class _Simple:
    """Simple-word tables for every member of ``S``, computed once."""

    def __init__(self, m: Dfa, S: frozenset[int], cap: int | None):
        self.groups = {p: sp_from(m, S, p, cap) for p in sorted(S)}
        self.end: dict[int, dict[Word, int]] = {
            p: {w: q for q, ws in g.items() for w in ws} for p, g in self.groups.items()}


# ------------------------------------------------------------- set conditions

@dataclass(frozen=True)
class Incompatibility:
    """Transition ``source -symbol-> target`` breaks on simple word ``sigma`` from ``origin``."""

    source: int
    symbol: str
    target: int
    origin: int
    sigma: Word
    found: Word | None

    def describe(self, m: Dfa) -> str:
        ext = show(self.sigma + (self.symbol,))
        if self.found is None:
            why = f"no simple word from {m.names[self.origin]} is a suffix of {ext}"
        else:
            why = f"longest simple-word suffix of {ext} is {show(self.found)}, which does not end in {m.names[self.target]}"
        return (f"transition {m.names[self.source]} --{self.symbol}--> {m.names[self.target]} "
                f"is not suffix-compatible: {why}")


@dataclass(frozen=True)
class WellFormedViolation:
    """``alpha`` reaches kept ``kept``; ``beta`` reaches suppressed ``dropped``; alpha is a suffix of beta."""

    origin: int
    kept: int
    dropped: int
    alpha: Word
    beta: Word

    def describe(self, m: Dfa) -> str:
        return (f"set is not well-formed: {show(self.alpha)} leads from {m.names[self.origin]} "
                f"to {m.names[self.kept]} and is a suffix of {show(self.beta)}, "
                f"which leads to suppressed {m.names[self.dropped]}")


@dataclass(frozen=True)
class CompatVerdict:
    ok: bool
    witness: Incompatibility | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class DerivationReport:
    states: frozenset[int]
    missing: frozenset[int] = frozenset()
    incompatible: tuple[Incompatibility, ...] = ()
    wf_violations: tuple[WellFormedViolation, ...] = ()

    @property
    def is_suffix_tracking(self) -> bool:
        return not (self.missing or self.incompatible or self.wf_violations)

    def __bool__(self) -> bool:
        return self.is_suffix_tracking

    def describe(self, m: Dfa) -> list[str]:
        lines = [f"states {{{', '.join(m.names[q] for q in sorted(self.states))}}}: "
                 + ("suffix-tracking" if self.is_suffix_tracking else "not suffix-tracking")]
        if self.missing:
            lines.append("missing initial/accepting states: "
                         + ", ".join(m.names[q] for q in sorted(self.missing)))
        lines += [w.describe(m) for w in self.incompatible]
        lines += [w.describe(m) for w in self.wf_violations]
        return lines


def _compat(m: Dfa, S: frozenset[int], sp: _Simple, q: int, a: str) -> Incompatibility | None:
    u = m.delta[(q, a)]
    if q in S or u in S:
        return None
    for p in sorted(S):
        ends = sp.end[p]
        for sigma in sorted(sp.groups[p].get(q, ()), key=lambda w: (len(w), w)):
            found = longest_suffix_in(ends, sigma + (a,))
            if found is None or ends[found] != u:
                return Incompatibility(q, a, u, p, sigma, found)
    return None


def is_suffix_compatible(m: Dfa, S: Iterable[int], transition: tuple[int | str, str],
                         cap: int | None = None) -> CompatVerdict:
    """Check one DFA transition, given as ``(source, symbol)``."""
    S = state_set(m, S)
    q, a = m.state(transition[0]), transition[1]
    if q in S or m.delta[(q, a)] in S:
        return CompatVerdict(True)
    bad = _compat(m, S, _Simple(m, S, cap), q, a)
    return CompatVerdict(bad is None, bad)


def _well_formed_violations(S: frozenset[int], sp: _Simple, first_only: bool) -> list[WellFormedViolation]:
    found = []
    for p in sorted(S):
        ends = sp.end[p]
        for beta, dropped in sorted(ends.items(), key=lambda kv: (len(kv[0]), kv[0])):
            if dropped in S:
                continue
            for alpha in suffixes(beta):
                kept = ends.get(alpha)
                if kept is not None and kept in S:
                    found.append(WellFormedViolation(p, kept, dropped, alpha, beta))
                    if first_only:
                        return found
    return found


def is_well_formed_set(m: Dfa, S: Iterable[int | str],
                       cap: int | None = None) -> tuple[bool, list[WellFormedViolation]]:
    S = state_set(m, S)
    found = _well_formed_violations(S, _Simple(m, S, cap), first_only=False)
    return not found, found


def is_suffix_tracking(m: Dfa, S: Iterable[int | str], cap: int | None = None,
                       fast: bool = False) -> DerivationReport:
    """Full report on ``S``; with ``fast`` it stops at the first problem found."""
    S = state_set(m, S)
    missing = frozenset(({m.initial} | set(m.accepting)) - S)
    if missing and fast:
        return DerivationReport(S, missing)
    sp = _Simple(m, S, cap)
    wf = _well_formed_violations(S, sp, first_only=fast)
    if wf and fast:
        return DerivationReport(S, missing, (), tuple(wf))
    bad = []
    for q in m.states:
        if q in S:
            continue
        for a in m.alphabet:
            hit = _compat(m, S, sp, q, a)
            if hit is not None:
                bad.append(hit)
                if fast:
                    return DerivationReport(S, missing, tuple(bad), tuple(wf))
    return DerivationReport(S, missing, tuple(bad), tuple(wf))


# --------------------------------------------------------------- induced DSA

def induced_dsa(m: Dfa, S: Iterable[int | str], cap: int | None = None, force: bool = False) -> Dsa:
    """DSA on the states of ``S`` whose labels are the simple words between them.

    Refuses sets that are not suffix-tracking unless ``force`` is given; the
    initial and accepting states must be kept in every case.
    """
    S = state_set(m, S)
    missing = ({m.initial} | set(m.accepting)) - S
    if missing:
        raise AutomatonError("kept states must include the initial and accepting states; missing "
                             + ", ".join(m.names[q] for q in sorted(missing)))
    if not force:
        report = is_suffix_tracking(m, S, cap)
        if not report:
            raise NotSuffixTrackingError(report, "; ".join(report.describe(m)[1:]))
    kept = sorted(S)
    idx = {q: i for i, q in enumerate(kept)}
    transitions = []
    for p in kept:
        for q, words in sp_from(m, S, p, cap).items():
            if q in S:
                transitions.extend((idx[p], w, idx[q]) for w in words)
    return Dsa(tuple(m.names[q] for q in kept), m.alphabet, idx[m.initial],
               frozenset(idx[q] for q in m.accepting), tuple(transitions))


# ------------------------------------------------------- useless transitions

class Kind(str, Enum):
    USELESS_BIGGER_SUFFIX = "useless-bigger-suffix"
    USEFUL_BIGGER_SUFFIX = "useful-bigger-suffix"
    USELESS_SELF_LOOP = "useless-self-loop"
    PLAIN = "plain"


@dataclass(frozen=True)
class UselessnessVerdict:
    transition: tuple[int, Word, int]
    kind: Kind


def _longest_proper_suffix(labels: dict[Word, int], alpha: Word) -> Word | None:
    for i in range(1, len(alpha)):
        if alpha[i:] in labels:
            return alpha[i:]
    return None


def _bigger_suffix(labels: dict[Word, int], alpha: Word, target: int) -> bool:
    return any(labels.get(alpha[i:]) == target for i in range(1, len(alpha)))


def _useless_loop(labels: dict[Word, int], alpha: Word, q: int, accepting: frozenset[int]) -> bool:
    if labels.get(alpha) != q or q in accepting:
        return False
    for s in suffixes(alpha):
        for beta in labels:
            if (s, beta) != (alpha, alpha) and is_prefix(s, beta):
                return False
    return True


def classify_transition(a: Dsa, t: tuple[int | str, Word | str, int | str]) -> UselessnessVerdict:
    q, alpha, q2 = a.state(t[0]), tuple(t[1]), a.state(t[2])
    labels = a.out[q]
    if labels.get(alpha) != q2:
        raise AutomatonError(f"no transition {a.names[q]} --{show(alpha)}--> {a.names[q2]}")
    if _bigger_suffix(labels, alpha, q2):
        # the longest proper suffix label decides where a run on alpha would go anyway
        gamma = _longest_proper_suffix(labels, alpha)
        kind = Kind.USELESS_BIGGER_SUFFIX if labels[gamma] == q2 else Kind.USEFUL_BIGGER_SUFFIX
    elif _useless_loop(labels, alpha, q, a.accepting):
        kind = Kind.USELESS_SELF_LOOP
    else:
        kind = Kind.PLAIN
    return UselessnessVerdict((q, alpha, q2), kind)


def _removal_order(t: tuple[int, Word, int]) -> tuple:
    return (-len(t[1]), t[0], t[1])


class _OutIndex:
    """Labels of one state plus, for each word, how many labels start with it."""

    def __init__(self, labels: dict[Word, int]):
        self.labels = dict(labels)
        self.starts: dict[Word, int] = {}
        for alpha in self.labels:
            for i in range(1, len(alpha) + 1):
                self.starts[alpha[:i]] = self.starts.get(alpha[:i], 0) + 1

    def remove(self, alpha: Word) -> None:
        del self.labels[alpha]
        for i in range(1, len(alpha) + 1):
            self.starts[alpha[:i]] -= 1

    def useless_bigger(self, alpha: Word) -> bool:
        target = self.labels[alpha]
        if not _bigger_suffix(self.labels, alpha, target):
            return False
        return self.labels[_longest_proper_suffix(self.labels, alpha)] == target

    def useless_loop(self, alpha: Word, q: int, accepting: frozenset[int]) -> bool:
        if self.labels[alpha] != q or q in accepting or _bigger_suffix(self.labels, alpha, q):
            return False
        if self.starts.get(alpha, 0) > 1:
            return False
        return all(self.starts.get(alpha[i:], 0) == 0 for i in range(1, len(alpha)))


def remove_useless(a: Dsa, debug: bool = False) -> Dsa:
    """Drop useless bigger-suffix transitions, then useless self-loops, until stable.

    A transition that is useless stays useless when others are removed, so
    the result does not depend on the removal order; removals still happen
    in a fixed order (longest label, then source, then label).  Unreachable
    states are removed at the end.  With ``debug`` every single removal is
    checked for language equivalence.
    """
    wf = is_dsa_well_formed(a)
    if not wf:
        raise NotWellFormedError("DSA is not well-formed: " + wf.conflicts[0].describe(a))
    index = {q: _OutIndex(a.out[q]) for q in a.states}
    current = a

    def drop(batch: list[tuple[int, Word, int]]) -> None:
        nonlocal current
        for t in sorted(batch, key=_removal_order):
            index[t[0]].remove(t[1])
            if debug:
                current = _drop(current, t, debug)

    while True:
        drop([(q, alpha, t) for q, ix in index.items() for alpha, t in ix.labels.items()
              if ix.useless_bigger(alpha)])
        loops_gone = False
        while True:
            batch = [(q, alpha, q) for q, ix in index.items() for alpha in list(ix.labels)
                     if ix.useless_loop(alpha, q, a.accepting)]
            if not batch:
                break
            drop(batch)
            loops_gone = True
        if not loops_gone:
            break
    result = a.with_transitions((q, alpha, t) for q, ix in index.items() for alpha, t in ix.labels.items())
    return restrict(result, reachable_states(result))


def _drop(a: Dsa, t: tuple[int, Word, int], debug: bool) -> Dsa:
    smaller = a.with_transitions(x for x in a.transitions if x != t)
    eq = dsa_equiv(a, smaller)
    if not eq:
        raise AssertionError(f"removing {a.names[t[0]]} --{show(t[1])}--> {a.names[t[2]]} "
                             f"changed the language (witness {show(eq.counterexample)})")
    return smaller


def derive(m: Dfa, S: Iterable[int | str], cap: int | None = None, debug: bool = False) -> Dsa:
    return remove_useless(induced_dsa(m, S, cap), debug=debug)


# ------------------------------------------------------------------- search

def enumerate_suffix_tracking_sets(m: Dfa, limit: int | None = None, max_card: int | None = None,
                                   max_states: int = DEFAULT_MAX_STATES,
                                   cap: int | None = None) -> Iterator[frozenset[int]]:
    """Suffix-tracking sets by increasing size; same-size sets in lexicographic id order."""
    if not m.is_complete:
        raise IncompleteDfaError("enumeration needs a complete DFA")
    if m.n_states > max_states:
        raise AutomatonError(f"{m.n_states} states exceeds the enumeration limit of {max_states}")
    mandatory = frozenset({m.initial} | set(m.accepting))
    optional = [q for q in m.states if q not in mandatory]
    top = m.n_states if max_card is None else min(max_card, m.n_states)
    yielded = 0
    for extra in range(len(optional) + 1):
        if len(mandatory) + extra > top:
            return
        for chosen in itertools.combinations(optional, extra):
            S = mandatory | frozenset(chosen)
            if is_suffix_tracking(m, S, cap, fast=True):
                yield S
                yielded += 1
                if limit is not None and yielded >= limit:
                    return


def _tie_key(a: Dsa) -> tuple:
    from .textio import serialize_dsa
    return (size_metrics(a).total, a.n_states, serialize_dsa(a))


@dataclass(frozen=True)
class Derivation:
    dsa: Dsa
    states: frozenset[int]
    candidates: tuple[frozenset[int], ...] = field(default=())


def derive_smallest(m: Dfa, cap: int | None = None, max_states: int = DEFAULT_MAX_STATES,
                    prune: bool = True) -> Derivation:
    """Smallest DSA derivable from ``m`` over all suffix-tracking sets.

    Every reachable kept state survives derivation (runs of the derived DSA
    visit kept states exactly where the DFA does), so a set with more
    reachable states than the best total so far cannot win and is skipped.
    """
    reach = set(reachable_states(m))
    best: tuple | None = None
    best_pair = None
    seen = []
    for S in enumerate_suffix_tracking_sets(m, max_states=max_states, cap=cap):
        if prune and best is not None and len(S & reach) > best[0]:
            continue
        seen.append(S)
        d = derive(m, S, cap)
        key = _tie_key(d)
        if best is None or key < best:
            best, best_pair = key, (d, S)
    assert best_pair is not None  # the full state set always qualifies
    return Derivation(best_pair[0], best_pair[1], tuple(seen))
