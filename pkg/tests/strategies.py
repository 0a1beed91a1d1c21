from hypothesis import strategies as st

from sufread import Dfa, Dsa


@st.composite
def dsas(draw, max_states=4, max_alphabet=3, max_label=3, max_out=4):
    alphabet = tuple("abc"[: draw(st.integers(1, max_alphabet))])
    n = draw(st.integers(1, max_states))
    label = st.lists(st.sampled_from(alphabet), min_size=1, max_size=max_label).map(tuple)
    transitions = []
    for q in range(n):
        labels = draw(st.sets(label, max_size=max_out))
        transitions += [(q, l, draw(st.integers(0, n - 1))) for l in sorted(labels)]
    accepting = draw(st.frozensets(st.integers(0, n - 1)))
    return Dsa(tuple(f"s{i}" for i in range(n)), alphabet, 0, accepting, tuple(transitions))


@st.composite
def dfas(draw, max_states=5, max_alphabet=2):
    alphabet = tuple("abc"[: draw(st.integers(1, max_alphabet))])
    n = draw(st.integers(1, max_states))
    delta = {(q, x): draw(st.integers(0, n - 1)) for q in range(n) for x in alphabet}
    accepting = draw(st.frozensets(st.integers(0, n - 1)))
    return Dfa(tuple(str(i) for i in range(n)), alphabet, 0, accepting, delta)
