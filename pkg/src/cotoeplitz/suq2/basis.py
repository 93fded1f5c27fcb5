"""Letters, words and the Hamel basis ``e(k,l,m)`` of SU_q(2)."""

from __future__ import annotations

import enum
from typing import Iterable, NamedTuple, Sequence, Union

from ..linear import Element


class Letter(str, enum.Enum):
    """The four generators; the value is the one-character CLI spelling."""

    a = "a"
    a_star = "A"
    c = "c"
    c_star = "C"

    @property
    def star(self) -> "Letter":
        return _STAR[self]

    @property
    def bidegree(self) -> tuple[int, int]:
        return _LETTER_BIDEG[self]


_STAR = {
    Letter.a: Letter.a_star,
    Letter.a_star: Letter.a,
    Letter.c: Letter.c_star,
    Letter.c_star: Letter.c,
}
_LETTER_BIDEG = {
    Letter.a: (1, 1),
    Letter.a_star: (-1, -1),
    Letter.c: (-1, 1),
    Letter.c_star: (1, -1),
}
ALPHABET = "aAcC"

WordLike = Union[str, Sequence[Letter]]


def as_word(word: WordLike) -> str:
    """Normalize a word to its compact string form over ``aAcC``."""
    if isinstance(word, str):
        bad = set(word) - set(ALPHABET)
        if bad:
            raise ValueError(f"word {word!r} has letters outside {{a, A, c, C}}: {sorted(bad)}")
        return word
    return "".join(Letter(x).value for x in word)


def star_word(word: WordLike) -> str:
    """Reverse the word and star every letter."""
    w = as_word(word)
    return "".join(Letter(x).star.value for x in reversed(w))


class BasisMonomial(NamedTuple):
    """``e(k,l,m) = a^k c^l (c*)^m`` for k >= 0, ``(a*)^(-k) c^l (c*)^m`` for k < 0."""

    k: int
    l: int
    m: int

    def word(self) -> str:
        head = "a" * self.k if self.k >= 0 else "A" * (-self.k)
        return head + "c" * self.l + "C" * self.m

    def in_P(self) -> bool:
        return self.k >= 0 and self.l >= 0 and self.m == 0

    def __str__(self) -> str:
        return f"e({self.k},{self.l},{self.m})"


def mono(k: int, l: int = 0, m: int = 0) -> BasisMonomial:
    if l < 0 or m < 0:
        raise ValueError(f"e({k},{l},{m}) needs l, m >= 0")
    return BasisMonomial(k, l, m)


def basis_element(k: int, l: int = 0, m: int = 0, coeff=1) -> Element:
    return Element.basis(mono(k, l, m), coeff)


ONE_MONO = BasisMonomial(0, 0, 0)
A = BasisMonomial(1, 0, 0)
A_STAR = BasisMonomial(-1, 0, 0)
C = BasisMonomial(0, 1, 0)
C_STAR = BasisMonomial(0, 0, 1)


def bidegree(m: BasisMonomial) -> tuple[int, int]:
    return (m.k - m.l + m.m, m.k + m.l - m.m)


def word_bidegree(word: WordLike) -> tuple[int, int]:
    d1 = d2 = 0
    for x in as_word(word):
        e1, e2 = _LETTER_BIDEG[Letter(x)]
        d1 += e1
        d2 += e2
    return d1, d2


def monomials(k_range: Iterable[int], l_max: int, m_max: int) -> list[BasisMonomial]:
    return [BasisMonomial(k, l, m) for k in k_range for l in range(l_max + 1) for m in range(m_max + 1)]
