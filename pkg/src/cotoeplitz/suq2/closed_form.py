"""Closed-form expressions for SU_q(2): ``a^m (a*)^m`` and the action of ``C_e(k,l,m)`` on ``a^r c^s``.

The coefficient of ``C_e(k,l,m)(a^r c^s) = K a^(r-d) c^(s-d)``, ``d = l - m``,
is assembled from the binomial expansion of ``Delta(a)^r Delta(c)^s``:

    K = w(k, d) * sum_{n+p=d} q^(-n(s-p)) (-q)^n [r n] [s p] sum_i [p i] (-1)^i q^A,
    A = p(s-p+n) + i + 2ip - i^2,  all brackets in base q^-2.

``[s p]`` is a Gaussian binomial because ``c (x) a`` and ``a* (x) c``
q^2-commute.  An ordinary binomial there, or the prefactor ``q^(+n(s-p))``,
gives a formula that disagrees with direct computation; both alternatives stay
selectable (``variant="ordinary"``, ``prefactor_sign=+1``) for comparison.
"""

from __future__ import annotations

from math import comb
from typing import Literal

from ..linear import Element
from ..scalar import ZERO, QScalar, q_power, qbinomial
from .basis import BasisMonomial
from .form import PIndex, WeightFunction

Variant = Literal["gaussian", "ordinary"]


def a_astar_power_closed(m: int) -> Element:
    """``sum_i [m i]_{q^-2} (-1)^i q^(i+2im-i^2) c^i (c*)^i``, equal to ``a^m (a*)^m``."""
    if m < 0:
        raise ValueError("m must be a natural number")
    terms = {}
    for i in range(m + 1):
        terms[BasisMonomial(0, i, i)] = qbinomial(m, i, -2).shift(i + 2 * i * m - i * i) * (-1) ** i
    return Element(terms)


def inner_sum(p: int, s: int, n: int) -> QScalar:
    """``sum_{i=0}^p [p i]_{q^-2} (-1)^i q^A`` with ``A = p(s-p+n) + i + 2ip - i^2``."""
    out = ZERO
    for i in range(p + 1):
        a_exp = p * (s - p + n) + i + 2 * i * p - i * i
        out = out + qbinomial(p, i, -2).shift(a_exp) * (-1) ** i
    return out


def d_coefficient(n: int, p: int, r: int, s: int, variant: Variant = "gaussian") -> QScalar:
    """``D_nprs``: the scalar with ``phi_nprs = D_nprs e(r-n-p, s-n-p, 0)``."""
    if variant == "gaussian":
        b_p = qbinomial(s, p, -2)
    elif variant == "ordinary":
        b_p = QScalar.const(comb(s, p))
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return q_power(n, (-1) ** n) * qbinomial(r, n, -2) * b_p * inner_sum(p, s, n)


def closed_form_coefficient(
    k: int,
    l: int,
    m: int,
    r: int,
    s: int,
    w: WeightFunction,
    *,
    prefactor_sign: int = -1,
    variant: Variant = "gaussian",
) -> tuple[PIndex | None, QScalar]:
    """Target index and coefficient ``K`` of ``C_e(k,l,m)(a^r c^s)`` in the unnormalized basis.

    Returns ``(None, 0)`` whenever the degree constraints force a zero image.
    """
    if prefactor_sign not in (1, -1):
        raise ValueError("prefactor_sign must be +1 or -1")
    d = l - m
    if r + s - k != d or d < 0 or d > min(r, s):
        return None, ZERO
    total = ZERO
    for n in range(0, min(d, r) + 1):
        p = d - n
        if p > s:
            continue
        total = total + d_coefficient(n, p, r, s, variant).shift(prefactor_sign * n * (s - p))
    if not total:
        return None, ZERO
    return PIndex(r - d, s - d), total * w(k, d)


def closed_form_image(k: int, l: int, m: int, r: int, s: int, w: WeightFunction, **kw) -> Element:
    """``C_e(k,l,m)(a^r c^s)`` as an element of P, from the closed form."""
    idx, coeff = closed_form_coefficient(k, l, m, r, s, w, **kw)
    if idx is None:
        return Element.zero()
    return Element.basis(idx.monomial, coeff)
