"""Strong DSAs, residual equivalence of DSA states, and exact minimal-DSA search."""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

from .core import AutomatonError, Dfa, Dsa, Word, is_suffix, prefixes, size_metrics
from .derivation import DEFAULT_MAX_STATES, derive, enumerate_suffix_tracking_sets
from .dfa_ops import complete, minimize, residual_equiv
from .shape import ShapeVerdict, is_dsa_well_formed, is_strong
from .tracking import TrackState, tracking_dfa

__all__ = ["ShapeVerdict", "is_dsa_well_formed", "is_strong", "dsa_residual_equiv",
           "minimize_strong", "StrongResult", "MinimalityCertificate", "brute_force_min_dsa",
           "GuardError"]

MAX_BRUTE_ALPHABET = 3
MAX_BRUTE_TOTAL = 10


class GuardError(AutomatonError):
    pass


def dsa_residual_equiv(a: Dsa, q1: int | str, q2: int | str) -> bool:
    tr = tracking_dfa(a)
    return residual_equiv(tr.dfa, tr.pair(a.state(q1)), tr.pair(a.state(q2)))


def _key(a: Dsa) -> tuple:
    from .textio import serialize_dsa
    return (size_metrics(a).total, a.n_states, serialize_dsa(a))


@dataclass(frozen=True)
class StrongResult:
    dsa: Dsa
    states: frozenset[int]
    canonical: Dfa
    minima: tuple[Dsa, ...] = ()


def minimize_strong(m: Dfa, all_minima: bool = False, cap: int | None = None,
                    max_states: int = DEFAULT_MAX_STATES) -> StrongResult:
    """Smallest strong DSA derivable from the canonical DFA of ``L(m)``."""
    canonical, _ = minimize(complete(m))
    scored = []
    for S in enumerate_suffix_tracking_sets(canonical, max_states=max_states, cap=cap):
        d = derive(canonical, S, cap)
        if is_strong(d):
            scored.append((_key(d), d, S))
    scored.sort(key=lambda x: x[0])
    best_key, best, best_set = scored[0]
    minima = tuple(d for k, d, _ in scored if k[0] == best_key[0]) if all_minima else ()
    return StrongResult(best, best_set, canonical, minima)


# ---------------------------------------------------------------- brute force

@dataclass(frozen=True)
class MinimalityCertificate:
    """Outcome of exhaustive search up to ``search_bound``.

    ``automaton`` is a smallest equivalent DSA found (or ``None``);
    ``exhausted`` says every candidate up to the bound was examined.
    """

    automaton: Dsa | None
    total: int | None
    search_bound: int
    exhausted: bool
    minima: tuple[Dsa, ...] = ()
    candidates: int = 0


def _all_words(alphabet: tuple[str, ...], max_len: int) -> list[Word]:
    return [w for n in range(1, max_len + 1) for w in itertools.product(alphabet, repeat=n)]


def _wf_with(existing: list[Word], beta: Word) -> bool:
    # labels arrive in (length, lex) order, so only beta's proper prefixes can host an older label
    inner = prefixes(beta, proper=True, nonempty=True)
    return not any(is_suffix(alpha, b) for alpha in existing for b in inner)


def _strong_pair(alpha: Word, beta: Word) -> bool:
    inner = prefixes(beta, proper=True, nonempty=True)
    return not any(is_suffix(part, b) for part in prefixes(alpha, nonempty=True) for b in inner)


def _strong_with(existing: list[Word], beta: Word) -> bool:
    return all(_strong_pair(alpha, beta) and _strong_pair(beta, alpha) for alpha in existing)


def _useless_with(existing: dict[Word, int], beta: Word, target: int) -> bool:
    for i in range(1, len(beta)):
        hit = existing.get(beta[i:])
        if hit is not None:
            return hit == target
    return False


def _structures(labels: list[Word], budget: int, strong_only: bool
                ) -> Iterator[tuple[int, list[tuple[int, Word, int]]]]:
    """Reachable transition structures in canonical numbering, with ``n + edges + labels <= budget``.

    State ids follow the order in which targets are first met when states are
    processed in id order and each state's labels in (length, label) order.
    """
    def per_state(q: int, n: int, budget: int, start: int, chosen: dict[Word, int],
                  acc: list) -> Iterator[tuple[int, int, list]]:
        yield n, budget, acc
        order = list(chosen)
        for j in range(start, len(labels)):
            beta = labels[j]
            cost = 1 + len(beta)
            if cost > budget:
                break
            if not _wf_with(order, beta):
                continue
            if strong_only and not _strong_with(order, beta):
                continue
            for t in range(n + 1):
                extra = 1 if t == n else 0
                if cost + extra > budget or _useless_with(chosen, beta, t):
                    continue
                chosen[beta] = t
                yield from per_state(q, n + extra, budget - cost - extra, j + 1, chosen,
                                     acc + [(q, beta, t)])
                del chosen[beta]

    def states(q: int, n: int, budget: int, acc: list):
        if q == n:
            yield n, acc
            return
        for n2, b2, acc2 in per_state(q, n, budget, 0, {}, acc):
            yield from states(q + 1, n2, b2, acc2)

    if budget >= 1:
        yield from states(0, 1, budget - 1, [])


def _accepting_for(a: Dsa, canonical: Dfa) -> frozenset[int] | None:
    """The unique accepting set making ``a`` equivalent to ``canonical``, if one exists."""
    tr = tracking_dfa(a)
    m = tr.dfa
    need: dict[int, bool] = {}
    start = (m.initial, canonical.initial)
    seen = {start}
    queue = deque([start])
    while queue:
        s, c = queue.popleft()
        ts = tr.origin[s]
        want = c in canonical.accepting
        if ts.partial or ts.copy:
            if want:
                return None
        elif need.setdefault(ts.state, want) != want:
            return None
        for x in m.alphabet:
            nxt = (m.delta[(s, x)], canonical.delta[(c, x)])
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(q for q, acc in need.items() if acc)


def brute_force_min_dsa(m: Dfa, max_total: int, strong_only: bool = False, all_minima: bool = False,
                        max_alphabet: int = MAX_BRUTE_ALPHABET,
                        total_limit: int = MAX_BRUTE_TOTAL) -> MinimalityCertificate:
    """Exhaustive search for the smallest DSA equivalent to ``m`` with total at most ``max_total``.

    Only reachable, well-formed candidates without useless bigger-suffix
    transitions are generated: any other DSA can be shrunk without changing
    its language, so the minimum is unaffected.
    """
    if len(m.alphabet) > max_alphabet:
        raise GuardError(f"alphabet of size {len(m.alphabet)} exceeds the limit {max_alphabet}")
    if max_total > total_limit:
        raise GuardError(f"max_total {max_total} exceeds the limit {total_limit}")
    canonical, _ = minimize(complete(m))
    labels = _all_words(canonical.alphabet, max(0, max_total - 2))
    names_for = lambda n: tuple(f"s{i}" for i in range(n))
    checked = 0
    for total in range(1, max_total + 1):
        found = []
        for n, transitions in _structures(labels, total, strong_only):
            if n + sum(1 + len(l) for _, l, _ in transitions) != total:
                continue
            checked += 1
            shell = Dsa(names_for(n), canonical.alphabet, 0, frozenset(), tuple(transitions))
            acc = _accepting_for(shell, canonical)
            if acc is None:
                continue
            found.append(Dsa(shell.names, shell.alphabet, 0, acc, shell.transitions))
        if found:
            found.sort(key=_key)
            return MinimalityCertificate(found[0], total, total, True,
                                         tuple(found) if all_minima else (), checked)
    return MinimalityCertificate(None, None, max_total, True, (), checked)
