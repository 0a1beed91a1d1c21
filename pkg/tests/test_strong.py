import pytest
from hypothesis import given, settings

import oracles
from strategies import dfas
from sufread import (Dfa, dsa_residual_equiv, is_dsa_well_formed, is_strong, language_equiv,
                     minimize_strong, size_metrics)
from sufread.catalog import (ab_or_ba, ab_star_dfa, ab_then_bb, if_else_chars, nonunique_dfa,
                             nonunique_first, nonunique_second, panic_dfa, panic_sdsa,
                             sigma_star_aab, universal_dfa)
from sufread.core import dfa_as_dsa
from sufread.strong import GuardError, brute_force_min_dsa


def test_strong_examples():
    assert is_strong(sigma_star_aab())
    assert is_strong(ab_then_bb())
    assert is_strong(ab_or_ba())
    assert is_strong(dfa_as_dsa(nonunique_dfa()))


def test_if_else_is_not_strong():
    verdict = is_strong(if_else_chars())
    assert not verdict
    assert any("".join(c.part) == "i" and "".join(c.beta) == "endif" for c in verdict.conflicts)
    assert is_dsa_well_formed(if_else_chars())


def test_strong_implies_well_formed_on_catalog():
    for a in (sigma_star_aab(), ab_then_bb(), ab_or_ba(), panic_sdsa()):
        assert is_strong(a) and is_dsa_well_formed(a)


def test_residual_equivalence_of_dsa_states():
    a = sigma_star_aab()
    assert not dsa_residual_equiv(a, "q0", "q3")
    assert dsa_residual_equiv(a, "q0", "q0")


def test_panic_alarm_strong_minimum():
    res = minimize_strong(panic_dfa())
    assert res.dsa.edges_by_name() == panic_sdsa().edges_by_name()
    assert ("q0", "pp", "q3") in res.dsa.edges_by_name()
    assert language_equiv(res.dsa, panic_dfa())


def test_ab_star_needs_more_than_seven():
    cert = brute_force_min_dsa(ab_star_dfa(), 7)
    assert cert.automaton is None and cert.exhausted and cert.search_bound == 7


def test_ab_star_minimum_is_ten():
    cert = brute_force_min_dsa(ab_star_dfa(), 10)
    assert cert.total == 10
    assert language_equiv(cert.automaton, ab_star_dfa())


def test_two_minima_of_size_eight():
    cert = brute_force_min_dsa(nonunique_dfa(), 8, all_minima=True)
    assert cert.total == 8
    shapes = {frozenset((s, l) for s, l, _ in ((a.names[x], "".join(y), z) for x, y, z in a.transitions))
              for a in cert.minima}
    assert frozenset({("s0", "ab"), ("s1", "a")}) in shapes
    assert frozenset({("s0", "a"), ("s1", "ba")}) in shapes
    assert size_metrics(nonunique_first()).total == size_metrics(nonunique_second()).total == 8


def test_residue_beats_canonical_derivation():
    # words ending in b: a strong DSA may reject through leftover input instead of an edge back
    m = Dfa.from_table({"0": {"a": "0", "b": "1"}, "1": {"a": "0", "b": "1"}}, "0", ["1"])
    brute = brute_force_min_dsa(m, 10, strong_only=True)
    derived = minimize_strong(m)
    assert brute.total == 6
    assert size_metrics(derived.dsa).total == 8
    assert oracles.disagreement_dsa_dfa(brute.automaton, m, 8) is None


def test_guards():
    with pytest.raises(GuardError):
        brute_force_min_dsa(ab_star_dfa(), 11)
    with pytest.raises(GuardError):
        brute_force_min_dsa(universal_dfa(("a", "b", "c", "d")), 3)


@settings(max_examples=25)
@given(dfas(max_states=3))
def test_brute_force_minimum_is_equivalent_and_not_larger(m):
    cert = brute_force_min_dsa(m, 7)
    if cert.automaton is not None:
        assert oracles.disagreement_dsa_dfa(cert.automaton, m, 7) is None
        assert cert.total <= size_metrics(minimize_strong(m).dsa).total
