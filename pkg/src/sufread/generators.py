"""Seeded random automata for property tests and the CLI ``--seed`` helpers."""

from __future__ import annotations

import itertools
import random

from .core import Dfa, Dsa, Word, reachable_states, restrict
from .derivation import remove_useless
from .shape import is_dsa_well_formed

LETTERS = ("a", "b", "c", "d", "e", "f")


def rng_for(seed: int | random.Random | None) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_dfa(seed, n_states: int, alphabet: tuple[str, ...] = ("a", "b"),
               p_accept: float = 0.4) -> Dfa:
    """Complete DFA with states ``0..n-1``; at least one state accepts."""
    rng = rng_for(seed)
    names = [str(i) for i in range(n_states)]
    table = {q: {x: rng.choice(names) for x in alphabet} for q in names}
    accepting = [q for q in names if rng.random() < p_accept] or [rng.choice(names)]
    return Dfa.from_table(table, "0", accepting, alphabet=alphabet, states=names)


def random_dsa(seed, max_states: int = 4, max_alphabet: int = 3, max_label: int = 3,
               max_out: int = 4) -> Dsa:
    """Unconstrained DSA: arbitrary labels, possibly unreachable or badly shaped states."""
    rng = rng_for(seed)
    alphabet = LETTERS[: rng.randint(1, max_alphabet)]
    n = rng.randint(1, max_states)
    names = [f"s{i}" for i in range(n)]
    edges = []
    for q in names:
        labels: set[Word] = set()
        for _ in range(rng.randint(0, max_out)):
            labels.add(tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_label))))
        edges += [(q, w, rng.choice(names)) for w in sorted(labels)]
    accepting = [q for q in names if rng.random() < 0.4]
    return Dsa.from_edges(edges, "s0", accepting, alphabet, states=names)


def _well_formed_subset(labels: list[Word]) -> list[Word]:
    kept: list[Word] = []
    for w in labels:
        trial = kept + [w]
        if all(not _conflict(x, y) for x, y in itertools.permutations(trial, 2)):
            kept = trial
    return kept


def _conflict(alpha: Word, beta: Word) -> bool:
    return any(beta[:i][-len(alpha):] == alpha and i >= len(alpha) for i in range(1, len(beta)))


def well_formed_part(a: Dsa, seed=None) -> Dsa:
    """Drop labels, state by state in random order, until every state is well-formed."""
    rng = rng_for(seed)
    edges = []
    for q in a.states:
        out = a.out[q]
        labels = list(out)
        rng.shuffle(labels)
        edges += [(q, w, out[w]) for w in _well_formed_subset(labels)]
    return a.with_transitions(edges)


def random_clean_dsa(seed, max_states: int = 4, max_alphabet: int = 3, max_label: int = 3,
                     max_out: int = 4, min_states: int = 1, min_edges: int = 0) -> Dsa:
    """Reachable, well-formed DSA without useless transitions, redrawn until big enough."""
    rng = rng_for(seed)
    while True:
        a = well_formed_part(random_dsa(rng, max_states, max_alphabet, max_label, max_out), rng)
        a = restrict(a, reachable_states(a))
        a = remove_useless(a)
        if is_dsa_well_formed(a) and a.n_states >= min_states and len(a.transitions) >= min_edges:
            return a
