"""Free-group words, the integral group ring, and Fox derivatives."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class GroupWord:
    """A word in free generators, letters ``(index, +1 | -1)``."""

    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((int(g), int(e)) for g, e in self.letters)
        for _, e in letters:
            if e not in (1, -1):
                raise ValueError(f"exponent must be +-1, got {e}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def gen(cls, index: int, exponent: int = 1) -> GroupWord:
        return cls(((index, exponent),))

    @classmethod
    def from_string(cls, text: str) -> GroupWord:
        """Parse ``"1 2 -1 -3"`` style words (sign = exponent)."""
        letters = []
        for tok in text.split():
            k = int(tok)
            if k == 0:
                raise ValueError("generator 0 cannot carry a sign; use 1-based indices")
            letters.append((abs(k) - 1, 1 if k > 0 else -1))
        return cls(tuple(letters))

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: GroupWord) -> GroupWord:
        return GroupWord(self.letters + other.letters).reduced()

    def inverse(self) -> GroupWord:
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def reduced(self) -> GroupWord:
        out = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return GroupWord(tuple(out))

    def is_reduced(self) -> bool:
        return all(a != (b[0], -b[1]) for a, b in zip(self.letters, self.letters[1:]))

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def prefix(self, k: int) -> GroupWord:
        return GroupWord(self.letters[:k])

    def generators(self) -> set:
        return {g for g, _ in self.letters}

    def substitute(self, mapping: dict) -> GroupWord:
        """Rename generators; letters whose index is missing keep it."""
        return GroupWord(tuple((mapping.get(g, g), e) for g, e in self.letters))

    def __str__(self):
        if not self.letters:
            return "1"
        return "".join(f"a{g + 1}" + ("" if e == 1 else "^-1") for g, e in self.letters)


IDENTITY_WORD = GroupWord()


class GroupRingElement:
    """Finite Z-linear combination of reduced words; zero terms are dropped."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc = defaultdict(int)
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for w, c in items:
                acc[w.reduced()] += c
        self.terms = {w: c for w, c in acc.items() if c != 0}

    @classmethod
    def word(cls, w: GroupWord, coef: int = 1) -> GroupRingElement:
        return cls({w: coef})

    @classmethod
    def one(cls) -> GroupRingElement:
        return cls({IDENTITY_WORD: 1})

    def __add__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return GroupRingElement(list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        out = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.append((w1 * w2, c1 * c2))
        return GroupRingElement(out)

    __rmul__ = __mul__

    def left_mul(self, w: GroupWord) -> GroupRingElement:
        return GroupRingElement([(w * v, c) for v, c in self.terms.items()])

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "GroupRingElement(0)"
        parts = sorted(f"{c:+d}*{w}" for w, c in self.terms.items())
        return "GroupRingElement(" + " ".join(parts) + ")"


def fox_derivative(w: GroupWord, j: int) -> GroupRingElement:
    """Fox derivative ``d w / d a_j`` of a word.

    Uses the expansion ``sum_k e_k * prefix_k * (a_j^{-1} if e_k = -1)``
    over the letters ``a_j^{e_k}`` of ``w``, which is the product rule
    unrolled.
    """
    terms = []
    for k, (g, e) in enumerate(w.letters):
        if g != j:
            continue
        pre = w.prefix(k)
        if e == 1:
            terms.append((pre, 1))
        else:
            terms.append((pre * GroupWord.gen(j, -1), -1))
    return GroupRingElement(terms)


def fox_derivative_element(x: GroupRingElement, j: int) -> GroupRingElement:
    """Z-linear extension of :func:`fox_derivative`."""
    out = GroupRingElement()
    for w, c in x.terms.items():
        out = out + fox_derivative(w, j) * c
    return out


def fox_jacobian(relators: Iterable[GroupWord], n_generators: int):
    """Rows of Fox derivatives, ``[[d r / d a_j for j] for r]``."""
    return [[fox_derivative(r, j) for j in range(n_generators)] for r in relators]


def random_word(rng, n_generators: int, max_len: int) -> GroupWord:
    length = int(rng.integers(0, max_len + 1))
    gens = rng.integers(0, n_generators, size=length)
    exps = rng.choice((-1, 1), size=length)
    return GroupWord(tuple(zip(gens.tolist(), exps.tolist())))
