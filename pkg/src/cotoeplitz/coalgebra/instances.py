"""Concrete *-co-algebra instances for the quantization pipeline.

An instance bundles the co-algebra structure on a basis, the sesquilinear
form, the subspace P with its projection Q and inclusion j, and the
bookkeeping the operator layer needs (an enumerable basis of P and the norms
of its vectors).
"""

from __future__ import annotations

import abc
from fractions import Fraction
from typing import Hashable, Iterable, Literal, Sequence

from ..linear import Element, TensorElement, accumulate
from ..scalar import ONE, ZERO, QScalar
from ..suq2 import algebra as _alg
from ..suq2.basis import BasisMonomial
from ..suq2.form import PIndex, WeightFunction, form, in_Pprime, project_Q_closed


class CoalgebraInstance(abc.ABC):
    """Capability bundle ``(C, Delta, eps, *, <.,.>, P, Q, j)``."""

    name: str = "instance"
    has_P_coproduct: bool = False

    @abc.abstractmethod
    def comultiply_label(self, label: Hashable) -> TensorElement: ...

    @abc.abstractmethod
    def counit_label(self, label: Hashable) -> QScalar: ...

    @abc.abstractmethod
    def star(self, x: Element) -> Element: ...

    @abc.abstractmethod
    def form(self, x: Element, y: Element) -> QScalar: ...

    @abc.abstractmethod
    def in_P(self, label: Hashable) -> bool: ...

    @abc.abstractmethod
    def project(self, x: Element) -> Element:
        """The projection Q onto P."""

    @abc.abstractmethod
    def p_basis(self, trunc: int | None = None) -> list[Hashable]:
        """Indices of the orthogonal basis of P, in the canonical order."""

    @abc.abstractmethod
    def index_label(self, index: Hashable) -> Hashable:
        """The basis label of C spanning the given P index."""

    @abc.abstractmethod
    def label_index(self, label: Hashable) -> Hashable: ...

    @abc.abstractmethod
    def norm2(self, index: Hashable) -> Fraction:
        """``<v, v>`` for the unnormalized basis vector with this index."""

    def index_degree(self, index: Hashable) -> int:
        return 0

    def comultiply_P(self, x: Element) -> TensorElement:
        raise NotImplementedError(f"{self.name} declares no coproduct on P")

    def comultiply(self, x: Element) -> TensorElement:
        out: dict = {}
        for label, c in x.items():
            for key, ct in self.comultiply_label(label).items():
                accumulate(out, key, c * ct)
        return TensorElement._raw(out)

    def counit(self, x: Element) -> QScalar:
        out = ZERO
        for label, c in x.items():
            out = out + c * self.counit_label(label)
        return out

    def supported_on_P(self, x: Element) -> bool:
        return all(self.in_P(label) for label, _ in x.items())

    def inject(self, x: Element) -> Element:
        """The inclusion j : P -> C."""
        if not self.supported_on_P(x):
            raise ValueError(f"{x!r} is not supported on P")
        return x

    def index_element(self, index: Hashable) -> Element:
        return Element._raw({self.index_label(index): ONE})


class SUq2Instance(CoalgebraInstance):
    """SU_q(2) with the weighted form and either P = span{a^k c^l} or P'."""

    def __init__(self, weight: WeightFunction | None = None, subspace: Literal["P", "Pprime"] = "P"):
        if subspace not in ("P", "Pprime"):
            raise ValueError(f"subspace must be 'P' or 'Pprime', got {subspace!r}")
        self.weight = weight or WeightFunction.one()
        self.subspace = subspace
        self.has_P_coproduct = subspace == "P"
        self.name = f"SU_q(2)[{subspace}, w={self.weight.name}]"

    def comultiply_label(self, label: BasisMonomial) -> TensorElement:
        return _alg.comultiply_mono(label)

    def counit_label(self, label: BasisMonomial) -> QScalar:
        return _alg.counit_mono(label)

    def star(self, x: Element) -> Element:
        return _alg.star(x)

    def form(self, x: Element, y: Element) -> QScalar:
        return form(x, y, self.weight)

    def in_P(self, label: BasisMonomial) -> bool:
        if self.subspace == "P":
            return label.in_P()
        return in_Pprime(label)

    def project(self, x: Element) -> Element:
        if self.subspace == "P":
            return project_Q_closed(x)
        return project_Qprime_closed(x)

    def comultiply_P(self, x: Element) -> TensorElement:
        if self.subspace != "P":
            raise NotImplementedError("no coproduct is declared on P'")
        return _alg.comultiply_P(x)

    def p_basis(self, trunc: int | None = None) -> list[PIndex]:
        if trunc is None:
            raise ValueError("SU_q(2) has an infinite P basis; give a truncation")
        out = [PIndex(r, d - r) for d in range(trunc + 1) for r in range(d + 1)]
        if self.subspace == "Pprime":
            out += [PIndex(r, d - r, True) for d in range(1, trunc + 1) for r in range(d)]
        return sorted(out, key=lambda i: (i.degree, i.psi, i.r))

    def index_label(self, index: PIndex) -> BasisMonomial:
        return index.monomial

    def label_index(self, label: BasisMonomial) -> PIndex:
        return PIndex.of(label)

    def norm2(self, index: PIndex) -> Fraction:
        return self.weight(*index.weight_key)

    def index_degree(self, index: PIndex) -> int:
        return index.degree


def project_Qprime_closed(x: Element) -> Element:
    """Term-wise Q': ``e(k,l,m)`` goes to ``e(k,l-m,0)`` or ``e(k,0,m-l)`` for k >= 0."""
    out: dict = {}
    for m, c in x.items():
        if m.k < 0:
            continue
        d = m.l - m.m
        accumulate(out, BasisMonomial(m.k, d, 0) if d >= 0 else BasisMonomial(m.k, 0, -d), c)
    return Element._raw(out)


class GroupLikeInstance(CoalgebraInstance):
    """The co-algebra spanned by ``n`` group-like elements ``g_1..g_n``.

    ``Delta(g_i) = g_i (x) g_i``, ``eps(g_i) = 1``, star fixes the basis and the
    form is diagonal with positive rational ``weights``.  Any subset spans a
    sub-co-algebra, so P is chosen freely.
    """

    has_P_coproduct = True

    def __init__(self, n: int, p_subset: Iterable[int], weights: Sequence | None = None):
        if n < 1:
            raise ValueError("need at least one group-like element")
        self.n = n
        self.p_subset = sorted(set(p_subset))
        if not self.p_subset or any(not 1 <= i <= n for i in self.p_subset):
            raise ValueError(f"P subset must be a non-empty subset of 1..{n}")
        ws = [Fraction(1)] * n if weights is None else [Fraction(v) for v in weights]
        if len(ws) != n or any(v <= 0 for v in ws):
            raise ValueError("need n strictly positive weights")
        self.weights = ws
        self.name = f"group-like[n={n}, P={self.p_subset}]"

    def labels(self) -> list[int]:
        return list(range(1, self.n + 1))

    def _check(self, label: int) -> int:
        if not isinstance(label, int) or not 1 <= label <= self.n:
            raise ValueError(f"{label!r} is not a basis label of {self.name}")
        return label

    def comultiply_label(self, label: int) -> TensorElement:
        self._check(label)
        return TensorElement._raw({(label, label): ONE})

    def counit_label(self, label: int) -> QScalar:
        self._check(label)
        return ONE

    def star(self, x: Element) -> Element:
        return x.conj_coeffs()

    def form(self, x: Element, y: Element) -> QScalar:
        out = ZERO
        for label, c in x.items():
            cy = y.coeff(label)
            if cy:
                out = out + c.conj() * cy * self.weights[label - 1]
        return out

    def in_P(self, label: int) -> bool:
        return label in self.p_subset

    def project(self, x: Element) -> Element:
        return Element._raw({k: c for k, c in x.items() if k in self.p_subset})

    def comultiply_P(self, x: Element) -> TensorElement:
        if not self.supported_on_P(x):
            raise ValueError(f"{x!r} is not supported on P")
        return self.comultiply(x)

    def p_basis(self, trunc: int | None = None) -> list[int]:
        return list(self.p_subset)

    def index_label(self, index: int) -> int:
        return index

    def label_index(self, label: int) -> int:
        return label

    def norm2(self, index: int) -> Fraction:
        return self.weights[index - 1]
