from sufread import Kind, classify_transition, is_dsa_well_formed, reachable_states, validate
from sufread.generators import random_clean_dsa, random_dfa, random_dsa


def test_seeded_generators_repeat():
    assert random_dfa(5, 4) == random_dfa(5, 4)
    assert random_dsa(5) == random_dsa(5)


def test_random_dfa_is_complete_and_accepts_somewhere():
    for seed in range(30):
        m = random_dfa(seed, 4)
        assert m.is_complete and m.accepting and not validate(m)


def test_random_dsa_is_valid():
    for seed in range(50):
        assert not validate(random_dsa(seed))


def test_clean_dsa_properties():
    for seed in range(50):
        a = random_clean_dsa(seed, min_states=2, min_edges=2)
        assert is_dsa_well_formed(a)
        assert sorted(reachable_states(a)) == list(a.states)
        assert a.n_states >= 2 and len(a.transitions) >= 2
        for t in a.transitions:
            assert classify_transition(a, t).kind in (Kind.PLAIN, Kind.USEFUL_BIGGER_SUFFIX)
