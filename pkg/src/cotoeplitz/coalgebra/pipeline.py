"""The co-Toeplitz quantization pipeline ``C_g = pi_g . beta . j``."""

from __future__ import annotations

from ..linear import Element, TensorElement, accumulate
from ..scalar import ONE
from .cosymbol import CoSymbol, Evaluator
from .instances import CoalgebraInstance


def coaction_beta(inst: CoalgebraInstance, f: Element) -> TensorElement:
    """``beta = (Q (x) id) Delta``; the left leg of the result lies in P."""
    out: dict = {}
    projected: dict = {}
    for label, c in f.items():
        for (x, y), ct in inst.comultiply_label(label).items():
            px = projected.get(x)
            if px is None:
                px = projected[x] = inst.project(Element._raw({x: ONE}))
            for p, cp in px.items():
                accumulate(out, (p, y), c * ct * cp)
    return TensorElement._raw(out)


def pi_g(inst: CoalgebraInstance, g: Element, t: TensorElement) -> Element:
    """``pi_g(phi (x) f) = <g, f> phi``, antilinear in ``g``."""
    bad = [x for x in t.left_support() if not inst.in_P(x)]
    if bad:
        raise ValueError(f"left leg has support outside P: {sorted(map(str, bad))}")
    cache: dict = {}
    out: dict = {}
    for (x, y), c in t.items():
        v = cache.get(y)
        if v is None:
            v = cache[y] = inst.form(g, Element._raw({y: ONE}))
        if v:
            accumulate(out, x, c * v)
    return Element._raw(out)


def ctoeplitz_apply(inst: CoalgebraInstance, g: Element, phi: Element) -> Element:
    return pi_g(inst, g, coaction_beta(inst, inst.inject(phi)))


def ctoeplitz_cosymbol_apply(
    inst: CoalgebraInstance, lam: CoSymbol, phi: Element, evaluator: Evaluator | None = None
) -> Element:
    """``C_lam = (id_P (x) lam) beta j``."""
    ev = evaluator or Evaluator(inst)
    out: dict = {}
    for (x, y), c in coaction_beta(inst, inst.inject(phi)).items():
        v = ev.on_label(lam, y)
        if v:
            accumulate(out, x, c * v)
    return Element._raw(out)


def tilde_ctoeplitz_apply(inst: CoalgebraInstance, g: Element, psi: Element) -> Element:
    """``V C_g V^{-1}`` on the conjugate space, where ``V`` is the star."""
    pre = inst.star(psi)
    if not inst.supported_on_P(pre):
        raise ValueError(f"star of {psi!r} is not supported on P")
    return inst.star(ctoeplitz_apply(inst, g, pre))

