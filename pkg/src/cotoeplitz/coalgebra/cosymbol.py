"""Co-symbols: linear functionals on a co-algebra, as evaluable expression trees.

The dual of a co-algebra is an algebra with product ``(lam * mu)(f) =
sum lam(f1) mu(f2)`` over ``Delta f = f1 (x) f2`` and unit the counit.  Its
star is ``lam*(f) = conj(lam(f*))``.  Functionals on an infinite-dimensional
space cannot be tabulated, so they are kept symbolic and only evaluated.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Any, Hashable, Union

from ..codec import element_from_json, element_to_json
from ..linear import Element
from ..scalar import ONE, ZERO, QScalar
from .instances import CoalgebraInstance


@dataclass(frozen=True)
class CounitNode:
    pass


@dataclass(frozen=True)
class EgNode:
    """``e_g = <g, . >``."""

    g: Element


@dataclass(frozen=True)
class SumNode:
    terms: tuple["CoSymbol", ...]


@dataclass(frozen=True)
class ScaleNode:
    coeff: QScalar
    arg: "CoSymbol"


@dataclass(frozen=True)
class ProductNode:
    left: "CoSymbol"
    right: "CoSymbol"


@dataclass(frozen=True)
class StarNode:
    arg: "CoSymbol"


CoSymbol = Union[CounitNode, EgNode, SumNode, ScaleNode, ProductNode, StarNode]

COUNIT = CounitNode()
ZERO_COSYMBOL = SumNode(())


def eg(g: Element) -> EgNode:
    return EgNode(g)


def product(*factors: CoSymbol) -> CoSymbol:
    if not factors:
        return COUNIT
    out = factors[0]
    for f in factors[1:]:
        out = ProductNode(out, f)
    return out


class Evaluator:
    """Evaluates co-symbols against one instance, memoizing per basis label."""

    def __init__(self, inst: CoalgebraInstance):
        self.inst = inst
        self._memo: dict[tuple[CoSymbol, Hashable], QScalar] = {}

    def __call__(self, lam: CoSymbol, f: Element) -> QScalar:
        out = ZERO
        for label, c in f.items():
            v = self.on_label(lam, label)
            if v:
                out = out + c * v
        return out

    def on_label(self, lam: CoSymbol, label: Hashable) -> QScalar:
        key = (lam, label)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._compute(lam, label)
            self._memo[key] = hit
        return hit

    def _compute(self, lam: CoSymbol, label: Hashable) -> QScalar:
        inst = self.inst
        if isinstance(lam, CounitNode):
            return inst.counit_label(label)
        if isinstance(lam, EgNode):
            return inst.form(lam.g, Element._raw({label: ONE}))
        if isinstance(lam, SumNode):
            out = ZERO
            for t in lam.terms:
                out = out + self.on_label(t, label)
            return out
        if isinstance(lam, ScaleNode):
            return lam.coeff * self.on_label(lam.arg, label)
        if isinstance(lam, ProductNode):
            out = ZERO
            for (x, y), c in inst.comultiply_label(label).items():
                lx = self.on_label(lam.left, x)
                if lx:
                    out = out + c * lx * self.on_label(lam.right, y)
            return out
        if isinstance(lam, StarNode):
            starred = inst.star(Element._raw({label: ONE}))
            return self(lam.arg, starred).conj()
        raise TypeError(f"not a co-symbol: {lam!r}")


def cosymbol_eval(inst: CoalgebraInstance, lam: CoSymbol, f: Element) -> QScalar:
    return Evaluator(inst)(lam, f)


def to_json(lam: CoSymbol) -> dict[str, Any]:
    if isinstance(lam, CounitNode):
        return {"node": "counit"}
    if isinstance(lam, EgNode):
        return {"node": "eg", "g": element_to_json(lam.g)}
    if isinstance(lam, SumNode):
        return {"node": "sum", "terms": [to_json(t) for t in lam.terms]}
    if isinstance(lam, ScaleNode):
        return {"node": "scale", "coeff": lam.coeff.to_json(), "arg": to_json(lam.arg)}
    if isinstance(lam, ProductNode):
        return {"node": "product", "left": to_json(lam.left), "right": to_json(lam.right)}
    if isinstance(lam, StarNode):
        return {"node": "star", "arg": to_json(lam.arg)}
    raise TypeError(f"not a co-symbol: {lam!r}")


def from_json(data: dict[str, Any]) -> CoSymbol:
    kind = data.get("node")
    if kind == "counit":
        return COUNIT
    if kind == "eg":
        return EgNode(element_from_json(data["g"]))
    if kind == "sum":
        return SumNode(tuple(from_json(t) for t in data["terms"]))
    if kind == "scale":
        return ScaleNode(QScalar.from_json(data["coeff"]), from_json(data["arg"]))
    if kind == "product":
        return ProductNode(from_json(data["left"]), from_json(data["right"]))
    if kind == "star":
        return StarNode(from_json(data["arg"]))
    raise ValueError(f"unknown co-symbol node {kind!r}")


def random_cosymbol(
    rng: random.Random,
    symbols: list[Element],
    depth: int = 2,
    scalars: list[QScalar] | None = None,
) -> CoSymbol:
    """A random tree over counit and ``e_g`` leaves drawn from ``symbols``."""
    scalars = scalars or [ONE, -ONE, QScalar.monomial(1), QScalar.monomial(0, 2)]
    if depth <= 0 or rng.random() < 0.3:
        return COUNIT if rng.random() < 0.25 else EgNode(rng.choice(symbols))
    kind = rng.choice(["sum", "scale", "product", "star"])
    if kind == "sum":
        return SumNode(tuple(random_cosymbol(rng, symbols, depth - 1, scalars) for _ in range(2)))
    if kind == "scale":
        return ScaleNode(rng.choice(scalars), random_cosymbol(rng, symbols, depth - 1, scalars))
    if kind == "product":
        return ProductNode(
            random_cosymbol(rng, symbols, depth - 1, scalars), random_cosymbol(rng, symbols, depth - 1, scalars)
        )
    return StarNode(random_cosymbol(rng, symbols, depth - 1, scalars))
