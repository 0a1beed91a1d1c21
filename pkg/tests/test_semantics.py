from hypothesis import given

import oracles
from strategies import dsas
from sufread import chars, dsa_accepts, dsa_run, dsa_step, tokens
from sufread.catalog import ab_or_ba, ab_then_bb, if_else_chars, sigma_star_aab, suffix_family


def test_waiter_accepts_after_two_matches():
    a = sigma_star_aab()
    run = dsa_run(a, chars("abbaabbbbaab"))
    assert [(a.names[m.target], "".join(m.consumed)) for m in run.moves] == [
        ("q3", "abbaab"), ("q3", "bbbaab")]
    assert run.accepted and run.residue == ()


def test_first_move_leaves_the_rest():
    a = sigma_star_aab()
    move, rest = dsa_step(a, 0, chars("abbaabbbbaab"))
    assert move.consumed == chars("abbaab") and move.label == chars("aab")
    assert rest == chars("bbbaab")


def test_waiter_rejects_with_residue():
    a = sigma_star_aab()
    run = dsa_run(a, chars("baabaa"))
    assert not run.accepted
    assert run.residue == chars("aa")
    assert run.describe(a)[-1] == "reject (residue: aa)"


def test_two_phase_pattern():
    a = ab_then_bb()
    run = dsa_run(a, chars("abbbb"))
    assert [a.names[m.target] for m in run.moves] == ["q1", "q2", "q2"]
    assert [("".join(m.consumed)) for m in run.moves] == ["ab", "bb", "b"]
    assert run.accepted


def test_moves_on_either_pattern():
    a = ab_or_ba()
    for w, label in (("ab", "ab"), ("aab", "ab"), ("aaab", "ab"), ("ba", "ba"), ("bba", "ba")):
        move, rest = dsa_step(a, 0, chars(w))
        assert "".join(move.label) == label and rest == ()


def test_no_move_when_an_earlier_prefix_matches():
    a = ab_or_ba()
    move, rest = dsa_step(a, 0, chars("abab"))
    assert move.consumed == chars("ab") and rest == chars("ab")


def test_longest_label_wins():
    a = if_else_chars()
    move, _ = dsa_step(a, a.state("s1"), chars("fgHendif"))
    assert move.label == chars("endif") and a.names[move.target] == "s0"
    move, _ = dsa_step(a, a.state("s0"), chars("abf4fgif"))
    assert a.names[move.target] == "s1"


def test_token_alphabet():
    a, pattern = suffix_family(3)
    assert dsa_accepts(a, tokens("a2 a1 a2 a3"))
    assert not dsa_accepts(a, tokens("a1 a2 a3 a1"))


def test_empty_word():
    a = sigma_star_aab()
    run = dsa_run(a, ())
    assert run.moves == () and not run.accepted


@given(dsas())
def test_runs_match_the_definition(a):
    for w in oracles.words(a.alphabet, 5):
        assert dsa_accepts(a, w) == oracles.dsa_accepts(a, w), w
