"""Structural predicates on DSA label sets: well-formedness and strong determinism."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Dsa, Word, is_suffix, prefixes, show


@dataclass(frozen=True)
class LabelConflict:
    """Label ``alpha`` (or its prefix ``part``) sits as a suffix inside ``inner``, a proper prefix of ``beta``."""

    state: int
    alpha: Word
    beta: Word
    part: Word
    inner: Word

    def describe(self, a: Dsa) -> str:
        return (f"at {a.names[self.state]}: {show(self.part)} (from {show(self.alpha)}) "
                f"is a suffix of {show(self.inner)} (proper prefix of {show(self.beta)})")


@dataclass(frozen=True)
class ShapeVerdict:
    ok: bool
    conflicts: tuple[LabelConflict, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def is_dsa_well_formed(a: Dsa) -> ShapeVerdict:
    """No label of a state is a suffix of a proper prefix of a sibling label."""
    found = []
    for q in a.states:
        labels = sorted(a.out[q], key=lambda w: (len(w), w))
        for beta in labels:
            for inner in prefixes(beta, proper=True, nonempty=True):
                for alpha in labels:
                    if alpha != beta and is_suffix(alpha, inner):
                        found.append(LabelConflict(q, alpha, beta, alpha, inner))
    return ShapeVerdict(not found, tuple(found))


def is_strong(a: Dsa) -> ShapeVerdict:
    """No non-empty prefix of a label is a suffix of a non-empty proper prefix of a distinct sibling label.

    Pairs with ``alpha == beta`` are skipped: otherwise any label with a
    repeated letter such as ``aab`` would disqualify its own state.
    """
    found = []
    for q in a.states:
        labels = sorted(a.out[q], key=lambda w: (len(w), w))
        for beta in labels:
            inners = prefixes(beta, proper=True, nonempty=True)
            for alpha in labels:
                if alpha == beta:
                    continue
                for part in prefixes(alpha, nonempty=True):
                    hit = next((b for b in inners if is_suffix(part, b)), None)
                    if hit is not None:
                        found.append(LabelConflict(q, alpha, beta, part, hit))
                        break
    return ShapeVerdict(not found, tuple(found))
