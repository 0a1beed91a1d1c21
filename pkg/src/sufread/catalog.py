"""Small named automata used throughout the tests, docs and CLI examples.

Each builder returns a fresh value.  Where only a language or a behaviour
was known, the automaton was reconstructed and then checked against that
behaviour in the test-suite.
"""

from __future__ import annotations

from .core import Dfa, Dsa

AB = ("a", "b")


def sigma_star_aab() -> Dsa:
    """Two states, waits for ``aab`` and keeps waiting; language Σ*aab over {a, b}."""
    return Dsa.from_edges([("q0", "aab", "q3"), ("q3", "aab", "q3")], "q0", ["q3"], AB)


def sigma_star_aab_dfa() -> Dfa:
    """Minimal complete DFA for Σ*aab, states named by the matched prefix."""
    table = {"e": {"a": "a", "b": "e"}, "a": {"a": "aa", "b": "e"},
             "aa": {"a": "aa", "b": "aab"}, "aab": {"a": "a", "b": "e"}}
    return Dfa.from_table(table, "e", ["aab"])


def ab_then_bb() -> Dsa:
    """Language Σ*abΣ*bb over {a, b}."""
    return Dsa.from_edges([("q0", "ab", "q1"), ("q1", "bb", "q2"), ("q2", "b", "q2"),
                           ("q2", "a", "q1")], "q0", ["q2"], AB)


def ab_or_ba() -> Dsa:
    """Moves once on whichever of ``ab`` and ``ba`` shows up first; strong."""
    return Dsa.from_edges([("q0", "ab", "q1"), ("q0", "ba", "q1")], "q0", ["q1"], AB)


def if_else_chars() -> Dsa:
    """Character-level ``else`` detector with ``if``/``endif`` contexts (not strong)."""
    alphabet = tuple("4Habdefgilnsx")
    edges = [("s0", "if", "s1"), ("s0", "else", "s2"), ("s1", "if", "s3"), ("s1", "endif", "s0")]
    edges += [("s2", c, "s2") for c in alphabet]
    return Dsa.from_edges(edges, "s0", ["s2"], alphabet, states=["s0", "s1", "s2", "s3"])


def two_patterns_dsa() -> Dsa:
    """One move on ``abaa`` or ``baaa``."""
    return Dsa.from_edges([("q", "abaa", "q1"), ("q", "baaa", "q1")], "q", ["q1"], AB)


def two_patterns_dfa() -> Dfa:
    """String-matching DFA for {abaa, baaa}; states are named by the tracked prefix."""
    table = {
        "q": {"a": "a", "b": "b"},
        "a": {"a": "a", "b": "ab"},
        "b": {"a": "ba", "b": "b"},
        "ab": {"a": "aba", "b": "b"},
        "ba": {"a": "baa", "b": "ab"},
        "aba": {"a": "q1", "b": "ab"},
        "baa": {"a": "q1", "b": "ab"},
        "q1": {"a": "sink", "b": "sink"},
        "sink": {"a": "sink", "b": "sink"},
    }
    return Dfa.from_table(table, "q", ["q1"])


def ends_ab_loop_a() -> Dfa:
    """Three-state DFA where the middle state loops on ``a``; {q0, q2} is suffix-tracking."""
    table = {"q0": {"a": "q1", "b": "q0"}, "q1": {"a": "q1", "b": "q2"},
             "q2": {"a": "q1", "b": "q0"}}
    return Dfa.from_table(table, "q0", ["q2"])


def ends_aa_loop_b() -> Dfa:
    """Like :func:`ends_ab_loop_a` with the middle loop on ``b``; {q0, q2} is not suffix-tracking."""
    table = {"q0": {"a": "q1", "b": "q0"}, "q1": {"a": "q2", "b": "q1"},
             "q2": {"a": "q1", "b": "q0"}}
    return Dfa.from_table(table, "q0", ["q2"])


def single_aba() -> Dfa:
    """DFA for the single word ``aba`` with sink ``4``."""
    table = {"0": {"a": "1", "b": "4"}, "1": {"a": "4", "b": "3"}, "3": {"a": "2", "b": "4"},
             "2": {"a": "4", "b": "4"}, "4": {"a": "4", "b": "4"}}
    return Dfa.from_table(table, "0", ["2"], states=["0", "1", "2", "3", "4"])


def bigger_suffix_left() -> Dsa:
    """``caba`` and ``ba`` lead to the same state, so ``caba`` is useless."""
    return Dsa.from_edges([("q", "ba", "q1"), ("q", "caba", "q1")], "q", ["q1"], ("a", "b", "c"))


def bigger_suffix_right() -> Dsa:
    """As :func:`bigger_suffix_left` plus ``aba`` to another state, which makes ``caba`` useful."""
    return Dsa.from_edges([("q", "ba", "q1"), ("q", "caba", "q1"), ("q", "aba", "q2")],
                          "q", ["q1", "q2"], ("a", "b", "c"))


def nonunique_first() -> Dsa:
    """Three states for b*a*abb*a, first move on ``ab``."""
    return Dsa.from_edges([("q0", "ab", "p"), ("p", "a", "q1")], "q0", ["q1"], AB)


def nonunique_second() -> Dsa:
    """Three states for b*a*abb*a, first move on ``a``."""
    return Dsa.from_edges([("q0", "a", "p"), ("p", "ba", "q1")], "q0", ["q1"], AB)


def nonunique_dfa() -> Dfa:
    """Minimal complete DFA of b*a*abb*a."""
    table = {"0": {"a": "1", "b": "0"}, "1": {"a": "1", "b": "2"}, "2": {"a": "3", "b": "2"},
             "3": {"a": "4", "b": "4"}, "4": {"a": "4", "b": "4"}}
    return Dfa.from_table(table, "0", ["3"], states=["0", "1", "2", "3", "4"])


def ab_star_dfa() -> Dfa:
    """Complete minimal DFA for (ab)*."""
    table = {"0": {"a": "1", "b": "2"}, "1": {"a": "2", "b": "0"}, "2": {"a": "2", "b": "2"}}
    return Dfa.from_table(table, "0", ["0"], states=["0", "1", "2"])


def ab_star_trim() -> Dfa:
    return Dfa.from_table({"0": {"a": "1"}, "1": {"b": "0"}}, "0", ["0"], alphabet=AB)


def panic_dfa() -> Dfa:
    """Alarm toggled by ``s``; two ``p`` without a tick ``t`` while off reaches the error state."""
    table = {"q0": {"s": "q1", "t": "q0", "p": "q2"},
             "q1": {"s": "q0", "t": "q1", "p": "q1"},
             "q2": {"s": "q1", "t": "q0", "p": "q3"},
             "q3": {"s": "q3", "t": "q3", "p": "q3"}}
    return Dfa.from_table(table, "q0", ["q3"])


def panic_sdsa() -> Dsa:
    edges = [("q0", "s", "q1"), ("q0", "pp", "q3"), ("q1", "s", "q0"),
             ("q3", "p", "q3"), ("q3", "s", "q3"), ("q3", "t", "q3")]
    return Dsa.from_edges(edges, "q0", ["q3"], ("p", "s", "t"))


def suffix_family(n: int) -> tuple[Dsa, tuple[str, ...]]:
    """DSA for Σ*a1a2...an over the n-letter alphabet {a1, ..., an}; returns (dsa, pattern)."""
    sigma = tuple(f"a{i}" for i in range(1, n + 1))
    return (Dsa.from_edges([("q0", sigma, "q1"), ("q1", sigma, "q1")], "q0", ["q1"], sigma), sigma)


def universal_dfa(alphabet=AB) -> Dfa:
    return Dfa.from_table({"q": {a: "q" for a in alphabet}}, "q", ["q"])


def empty_dfa(alphabet=AB) -> Dfa:
    return Dfa.from_table({"q": {a: "q" for a in alphabet}}, "q", [])




def _mstar_table(extra: int) -> dict[str, dict[str, str]]:
    ds = [f"d{i}" for i in range(1, extra + 1)]
    table = {
        "q0": {"a": "q1", "b": "p", "c": "q2"},
        "q1": {"a": "q0", "b": "q2", "c": "q0"},
        "q2": {"a": "q0", "b": "q4", "c": "q2"},
        "p": {"a": "p", "b": "q4", "c": "q2"},
        "q4": {"a": "q4", "b": "q4", "c": "q4"},
    }
    for d in ds:
        for s, t in (("q0", "q0"), ("q1", "q0"), ("q2", "q0"), ("p", "q0"), ("q4", "q4")):
            table[s][d] = t
    return table


def mstar(extra: int = 7) -> Dfa:
    """Minimal DFA whose smallest derived DSA is beaten by a derivation from :func:`mstar_dup`.

    The alphabet is ``a, b, c`` plus ``extra`` letters ``d1...`` that behave alike.
    Its only suffix-tracking sets are {q0, p, q2, q4} and all states.
    """
    return Dfa.from_table(_mstar_table(extra), "q0", ["q4"], states=["q0", "q1", "q2", "p", "q4"])


def mstar_dup(extra: int = 7) -> Dfa:
    """:func:`mstar` with ``p`` split: ``b`` from q0 goes to the copy ``p2``, which reads ``a`` into ``p``."""
    table = _mstar_table(extra)
    table["p2"] = dict(table["p"])
    table["p2"]["a"] = "p"
    table["q0"]["b"] = "p2"
    return Dfa.from_table(table, "q0", ["q4"], states=["q0", "q1", "q2", "p", "p2", "q4"])
