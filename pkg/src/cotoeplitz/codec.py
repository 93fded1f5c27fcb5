"""JSON codecs for elements and tensors."""

from __future__ import annotations

from typing import Any, Hashable

from .linear import Element, TensorElement
from .scalar import QScalar
from .suq2.basis import BasisMonomial


def label_to_json(label: Hashable) -> dict[str, Any]:
    if isinstance(label, BasisMonomial):
        return {"k": label.k, "l": label.l, "m": label.m}
    if isinstance(label, int):
        return {"label": label}
    raise TypeError(f"no JSON form for basis label {label!r}")


def label_from_json(data: dict[str, Any]) -> Hashable:
    if "label" in data:
        return int(data["label"])
    l, m = int(data["l"]), int(data["m"])
    if l < 0 or m < 0:
        raise ValueError(f"basis label needs l, m >= 0: {data}")
    return BasisMonomial(int(data["k"]), l, m)


def element_to_json(x: Element) -> dict[str, Any]:
    return {"terms": [{**label_to_json(k), "coeff": c.to_json()} for k, c in x.sorted_items()]}


def element_from_json(data: dict[str, Any]) -> Element:
    terms = []
    for t in data["terms"]:
        terms.append((label_from_json(t), QScalar.from_json(t["coeff"])))
    return Element(terms)


def tensor_to_json(t: TensorElement) -> dict[str, Any]:
    return {
        "terms": [
            {"left": label_to_json(x), "right": label_to_json(y), "coeff": c.to_json()}
            for (x, y), c in t.sorted_items()
        ]
    }


def tensor_from_json(data: dict[str, Any]) -> TensorElement:
    return TensorElement(
        [((label_from_json(t["left"]), label_from_json(t["right"])), QScalar.from_json(t["coeff"])) for t in data["terms"]]
    )
