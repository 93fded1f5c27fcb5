"""Finitely supported linear combinations over :class:`QScalar`.

:class:`Element` holds combinations of basis labels (any hashable value) and
:class:`TensorElement` combinations of label pairs.  The algebraic structure
(products, coproducts, ...) lives with the co-algebra instances; these classes
only know about the vector space.
"""

from __future__ import annotations

from typing import Any, Callable, Hashable, Iterable, Iterator

from .scalar import ONE, ZERO, QScalar, ScalarLike


def _accumulate(out: dict, key: Hashable, c: QScalar) -> None:
    prev = out.get(key)
    if prev is None:
        if c:
            out[key] = c
    else:
        s = prev + c
        if s:
            out[key] = s
        else:
            del out[key]


class _Combination:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict | Iterable[tuple[Hashable, ScalarLike]] | None = None) -> None:
        out: dict = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, c in items:
                c = QScalar.coerce(c)
                if c:
                    _accumulate(out, key, c)
        self._terms = out
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def __iter__(self) -> Iterator:
        return iter(self._terms.items())

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> set:
        return set(self._terms)

    def coeff(self, key: Hashable) -> QScalar:
        return self._terms.get(key, ZERO)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for key, c in other._terms.items():
            _accumulate(out, key, c)
        return type(self)._raw(out)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scale(self, c: ScalarLike):
        c = QScalar.coerce(c)
        if not c:
            return type(self)._raw({})
        if c == ONE:
            return self
        return type(self)._raw({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, c: ScalarLike):
        if isinstance(c, (_Combination,)):
            return NotImplemented
        return self.scale(c)

    def conj_coeffs(self):
        return type(self)._raw({k: c.conj() for k, c in self._terms.items()})

    def map_coeffs(self, fn: Callable[[QScalar], QScalar]):
        return type(self)({k: fn(c) for k, c in self._terms.items()})

    def sorted_items(self) -> list:
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))


def _sort_key(key: Any):
    if isinstance(key, tuple):
        return tuple(_sort_key(k) for k in key)
    return (str(type(key).__name__), key)


class Element(_Combination):
    """A finite linear combination of basis labels."""

    __slots__ = ()

    @classmethod
    def basis(cls, label: Hashable, coeff: ScalarLike = 1) -> "Element":
        return cls({label: coeff})

    @classmethod
    def zero(cls) -> "Element":
        return cls._raw({})

    def __repr__(self) -> str:
        if not self._terms:
            return "Element(0)"
        body = " + ".join(f"({c})*{k}" for k, c in self.sorted_items())
        return f"Element({body})"


class TensorElement(_Combination):
    """A finite linear combination of label pairs ``x (x) y``."""

    __slots__ = ()

    @classmethod
    def pure(cls, left: Hashable, right: Hashable, coeff: ScalarLike = 1) -> "TensorElement":
        return cls({(left, right): coeff})

    @classmethod
    def zero(cls) -> "TensorElement":
        return cls._raw({})

    @classmethod
    def from_elements(cls, x: Element, y: Element) -> "TensorElement":
        out: dict = {}
        for kx, cx in x.items():
            for ky, cy in y.items():
                _accumulate(out, (kx, ky), cx * cy)
        return cls._raw(out)

    def map_legs(
        self,
        left: Callable[[Hashable], Element] | None = None,
        right: Callable[[Hashable], Element] | None = None,
    ) -> "TensorElement":
        """Apply linear maps, given on basis labels, to either leg."""
        out: dict = {}
        for (x, y), c in self._terms.items():
            lx = left(x) if left else Element._raw({x: ONE})
            if not lx:
                continue
            ry = right(y) if right else Element._raw({y: ONE})
            for kx, cx in lx.items():
                cxc = c * cx
                for ky, cy in ry.items():
                    _accumulate(out, (kx, ky), cxc * cy)
        return TensorElement._raw(out)

    def contract(
        self,
        left: Callable[[Hashable], QScalar] | None = None,
        right: Callable[[Hashable], QScalar] | None = None,
    ) -> Element:
        """Apply a functional to one leg, leaving an :class:`Element`."""
        if (left is None) == (right is None):
            raise ValueError("contract exactly one leg")
        out: dict = {}
        for (x, y), c in self._terms.items():
            if left is not None:
                v = left(x)
                if v:
                    _accumulate(out, y, c * v)
            else:
                v = right(y)
                if v:
                    _accumulate(out, x, c * v)
        return Element._raw(out)

    def left_support(self) -> set:
        return {x for x, _ in self._terms}

    def right_support(self) -> set:
        return {y for _, y in self._terms}

    def __repr__(self) -> str:
        if not self._terms:
            return "TensorElement(0)"
        body = " + ".join(f"({c})*{x}(x){y}" for (x, y), c in self.sorted_items())
        return f"TensorElement({body})"


def accumulate(out: dict, key: Hashable, c: QScalar) -> None:
    """Add ``c`` at ``key`` in a raw term dictionary, dropping zeros."""
    _accumulate(out, key, c)
