"""Product, star, coproduct, counit and antipode of SU_q(2) on the Hamel basis."""

from __future__ import annotations

from functools import lru_cache

from ..linear import Element, TensorElement, accumulate
from ..scalar import ONE, ZERO, QScalar, q_power
from .basis import BasisMonomial, WordLike, as_word, bidegree, star_word
from .rewriting import normal_order, times_word

ONE_ELEMENT = Element._raw({BasisMonomial(0, 0, 0): ONE})


@lru_cache(maxsize=None)
def _mono_mul(x: BasisMonomial, y: BasisMonomial) -> Element:
    return times_word(Element._raw({x: ONE}), y.word())


def mono_mul(x: BasisMonomial, y: BasisMonomial) -> Element:
    return _mono_mul(x, y)


def multiply(x: Element, y: Element) -> Element:
    out: dict = {}
    for mx, cx in x.items():
        for my, cy in y.items():
            c = cx * cy
            for m, cm in _mono_mul(mx, my).items():
                accumulate(out, m, c * cm)
    return Element._raw(out)


def power(x: Element, n: int) -> Element:
    out = ONE_ELEMENT
    for _ in range(n):
        out = multiply(out, x)
    return out


def word_element(word: WordLike) -> Element:
    return normal_order(word)


@lru_cache(maxsize=None)
def _star_mono(m: BasisMonomial) -> Element:
    return normal_order(star_word(m.word()))


def star(x: Element) -> Element:
    """Antilinear involution: conjugate coefficients, reverse and star words."""
    out: dict = {}
    for m, c in x.items():
        cc = c.conj()
        for m2, c2 in _star_mono(m).items():
            accumulate(out, m2, cc * c2)
    return Element._raw(out)


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    """Leg-wise product in C (x) C."""
    out: dict = {}
    for (x1, x2), cx in x.items():
        for (y1, y2), cy in y.items():
            c = cx * cy
            left = _mono_mul(x1, y1)
            right = _mono_mul(x2, y2)
            for l, cl in left.items():
                ccl = c * cl
                for r, cr in right.items():
                    accumulate(out, (l, r), ccl * cr)
    return TensorElement._raw(out)


def tensor_star(t: TensorElement) -> TensorElement:
    """``(x (x) y)* = x* (x) y*`` extended antilinearly."""
    out: dict = {}
    for (x, y), c in t.items():
        cc = c.conj()
        for m1, c1 in _star_mono(x).items():
            for m2, c2 in _star_mono(y).items():
                accumulate(out, (m1, m2), cc * c1 * c2)
    return TensorElement._raw(out)


_a, _A = BasisMonomial(1, 0, 0), BasisMonomial(-1, 0, 0)
_c, _C = BasisMonomial(0, 1, 0), BasisMonomial(0, 0, 1)
_q = q_power(1)

LETTER_COPRODUCT: dict[str, TensorElement] = {
    "a": TensorElement({(_a, _a): ONE, (_C, _c): -_q}),
    "c": TensorElement({(_c, _a): ONE, (_A, _c): ONE}),
    # starred generator formulas (q real)
    "A": TensorElement({(_A, _A): ONE, (_c, _C): -_q}),
    "C": TensorElement({(_C, _A): ONE, (_a, _C): ONE}),
}
_UNIT_TENSOR = TensorElement._raw({(BasisMonomial(0, 0, 0), BasisMonomial(0, 0, 0)): ONE})


@lru_cache(maxsize=None)
def _comultiply_mono(m: BasisMonomial) -> TensorElement:
    k, l, n = m
    if n:
        return tensor_multiply(_comultiply_mono(BasisMonomial(k, l, n - 1)), LETTER_COPRODUCT["C"])
    if l:
        return tensor_multiply(_comultiply_mono(BasisMonomial(k, l - 1, 0)), LETTER_COPRODUCT["c"])
    if k > 0:
        return tensor_multiply(_comultiply_mono(BasisMonomial(k - 1, 0, 0)), LETTER_COPRODUCT["a"])
    if k < 0:
        return tensor_multiply(_comultiply_mono(BasisMonomial(k + 1, 0, 0)), LETTER_COPRODUCT["A"])
    return _UNIT_TENSOR


def comultiply_mono(m: BasisMonomial) -> TensorElement:
    return _comultiply_mono(m)


def comultiply(x: Element) -> TensorElement:
    """The *-algebra morphism extension of the generator coproducts."""
    out: dict = {}
    for m, c in x.items():
        for key, ct in _comultiply_mono(m).items():
            accumulate(out, key, c * ct)
    return TensorElement._raw(out)


def comultiply_word(word: WordLike) -> TensorElement:
    """Coproduct of a word as the ordered product of letter coproducts."""
    out = _UNIT_TENSOR
    for x in as_word(word):
        out = tensor_multiply(out, LETTER_COPRODUCT[x])
    return out


def counit_mono(m: BasisMonomial) -> QScalar:
    return ONE if m.l == 0 and m.m == 0 else ZERO


def counit(x: Element) -> QScalar:
    out = ZERO
    for m, c in x.items():
        if m.l == 0 and m.m == 0:
            out = out + c
    return out


_ANTIPODE_LETTER = {"a": (ONE, "A"), "A": (ONE, "a"), "c": (-_q, "c"), "C": (-q_power(-1), "C")}


@lru_cache(maxsize=None)
def _antipode_mono(m: BasisMonomial) -> Element:
    coeff = ONE
    word = ""
    for x in reversed(m.word()):
        c, y = _ANTIPODE_LETTER[x]
        coeff = coeff * c
        word += y
    return normal_order(word).scale(coeff)


def antipode(x: Element) -> Element:
    """Linear, anti-multiplicative extension of the generator formulas."""
    out: dict = {}
    for m, c in x.items():
        for m2, c2 in _antipode_mono(m).items():
            accumulate(out, m2, c * c2)
    return Element._raw(out)


def in_P(x: Element) -> bool:
    return all(m.in_P() for m, _ in x.items())


_P_LETTER_COPRODUCT = {
    "a": TensorElement({(_a, _a): ONE}),
    "c": TensorElement({(_c, _a): ONE}),
}


@lru_cache(maxsize=None)
def _comultiply_P_mono(m: BasisMonomial) -> TensorElement:
    out = _UNIT_TENSOR
    for x in m.word():
        out = tensor_multiply(out, _P_LETTER_COPRODUCT[x])
    return out


def comultiply_P(x: Element) -> TensorElement:
    """Coproduct of the quantum plane: ``a -> a (x) a``, ``c -> c (x) a``."""
    out: dict = {}
    for m, c in x.items():
        if not m.in_P():
            raise ValueError(f"{m} is not in the holomorphic subspace P")
        for key, ct in _comultiply_P_mono(m).items():
            accumulate(out, key, c * ct)
    return TensorElement._raw(out)


def element_bidegree(x: Element) -> tuple[int, int] | None:
    """The common bidegree of all terms, or ``None`` if ``x`` is not bi-homogeneous."""
    degs = {bidegree(m) for m, _ in x.items()}
    if len(degs) != 1:
        return None
    return degs.pop()


def symbol_from_text(text: str) -> Element:
    """A symbol given as a word over ``aAcC`` or as a ``k,l,m`` triple."""
    text = text.strip()
    parts = text.split(",")
    if len(parts) == 3:
        try:
            k, l, m = (int(p) for p in parts)
        except ValueError:
            raise ValueError(f"bad basis triple {text!r}") from None
        if l < 0 or m < 0:
            raise ValueError(f"basis triple needs l, m >= 0: {text!r}")
        return Element._raw({BasisMonomial(k, l, m): ONE})
    if text in ("", "1"):
        return ONE_ELEMENT
    return normal_order(text)
