"""Normal ordering of words over ``a, a*, c, c*`` into the basis ``e(k,l,m)``.

Two independent routes produce the same normal form:

* :func:`rewrite` runs the two-letter rewrite system literally, under a
  selectable redex-selection strategy;
* :func:`normal_order` folds the word letter by letter using closed formulas
  for ``e(k,l,m) * letter``.  This is the route the rest of the engine uses.

Orientation: a-letters to the left, then c, then c*; a/a* pairs eliminated.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Literal

from ..linear import Element, accumulate
from ..scalar import ONE, QScalar, q_power
from .basis import BasisMonomial, WordLike, as_word

RULES: dict[str, tuple[tuple[QScalar, str], ...]] = {
    "ca": ((q_power(-1), "ac"),),
    "Ca": ((q_power(-1), "aC"),),
    "cA": ((q_power(1), "Ac"),),
    "CA": ((q_power(1), "AC"),),
    "Cc": ((ONE, "cC"),),
    "Aa": ((ONE, ""), (-ONE, "cC")),
    "aA": ((ONE, ""), (q_power(2, -1), "cC")),
}

Strategy = Literal["leftmost", "rightmost", "random"]


def redexes(word: str) -> list[int]:
    return [i for i in range(len(word) - 1) if word[i : i + 2] in RULES]


def is_normal(word: WordLike) -> bool:
    return not redexes(as_word(word))


def word_to_monomial(word: str) -> BasisMonomial:
    """Read off ``e(k,l,m)`` from an irreducible word."""
    if redexes(word):
        raise ValueError(f"{word!r} is not in normal form")
    k = word.count("a") - word.count("A")
    return BasisMonomial(k, word.count("c"), word.count("C"))


def rewrite_step(word: str, position: int) -> list[tuple[QScalar, str]]:
    """Apply the rule whose left side sits at ``position``."""
    lhs = word[position : position + 2]
    if lhs not in RULES:
        raise ValueError(f"no rule applies to {word!r} at {position}")
    head, tail = word[:position], word[position + 2 :]
    return [(c, head + rhs + tail) for c, rhs in RULES[lhs]]


def rewrite(
    word: WordLike,
    strategy: Strategy = "leftmost",
    rng: random.Random | None = None,
    max_steps: int = 1_000_000,
) -> Element:
    """Reduce a word to normal form with the literal rule system."""
    if strategy == "random" and rng is None:
        rng = random.Random(0)
    state: dict[str, QScalar] = {as_word(word): ONE}
    for _ in range(max_steps):
        pending = sorted(w for w in state if redexes(w))
        if not pending:
            break
        if strategy == "random":
            target = rng.choice(pending)
            pos = rng.choice(redexes(target))
        elif strategy == "rightmost":
            target = pending[-1]
            pos = redexes(target)[-1]
        elif strategy == "leftmost":
            target = pending[0]
            pos = redexes(target)[0]
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        c = state.pop(target)
        for rc, new in rewrite_step(target, pos):
            accumulate(state, new, c * rc)
    else:
        raise RuntimeError("rewrite did not terminate within max_steps")
    out: dict = {}
    for w, c in state.items():
        accumulate(out, word_to_monomial(w), c)
    return Element._raw(out)


@lru_cache(maxsize=None)
def times_letter(m: BasisMonomial, letter: str) -> tuple[tuple[BasisMonomial, QScalar], ...]:
    """``e(k,l,m) * letter`` in normal form."""
    k, l, n = m
    if letter == "c":
        return ((BasisMonomial(k, l + 1, n), ONE),)
    if letter == "C":
        return ((BasisMonomial(k, l, n + 1), ONE),)
    if letter == "a":
        # c^l (c*)^n a = q^-(l+n) a c^l (c*)^n
        pref = q_power(-(l + n))
        if k >= 0:
            return ((BasisMonomial(k + 1, l, n), pref),)
        # a* a = 1 - c c*
        return ((BasisMonomial(k + 1, l, n), pref), (BasisMonomial(k + 1, l + 1, n + 1), -pref))
    if letter == "A":
        pref = q_power(l + n)
        if k <= 0:
            return ((BasisMonomial(k - 1, l, n), pref),)
        # a a* = 1 - q^2 c c*
        return ((BasisMonomial(k - 1, l, n), pref), (BasisMonomial(k - 1, l + 1, n + 1), -pref.shift(2)))
    raise ValueError(f"unknown letter {letter!r}")


def times_word(x: Element, word: str) -> Element:
    terms = dict(x.items())
    for letter in word:
        nxt: dict = {}
        for mono, c in terms.items():
            for m2, c2 in times_letter(mono, letter):
                accumulate(nxt, m2, c * c2)
        terms = nxt
    return Element._raw(terms)


_ONE_ELEMENT = Element._raw({BasisMonomial(0, 0, 0): ONE})


@lru_cache(maxsize=65536)
def _normal_order_cached(word: str) -> Element:
    if len(word) <= 1:
        return times_word(_ONE_ELEMENT, word)
    return times_word(_normal_order_cached(word[:-1]), word[-1])


def normal_order(word: WordLike) -> Element:
    """Expand a word in the Hamel basis ``e(k,l,m)``."""
    return _normal_order_cached(as_word(word))
