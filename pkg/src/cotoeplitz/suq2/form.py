"""Weighted sesquilinear form on SU_q(2) and the projections onto P and P'."""

from __future__ import annotations

import math
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, NamedTuple

from ..linear import Element, accumulate
from ..scalar import ONE, ZERO, QScalar, Rational, as_rational
from .basis import BasisMonomial


class WeightFunction:
    """A strictly positive rational weight ``w(k, d)`` on Z x Z.

    ``table`` overrides the constant ``default`` at finitely many points.
    """

    def __init__(self, table: Mapping[tuple[int, int], Any] | None = None, default: Any = 1, name: str | None = None):
        self.default = Fraction(as_rational(default))
        if self.default <= 0:
            raise ValueError("weights must be strictly positive")
        self.table: dict[tuple[int, int], Fraction] = {}
        for (k, d), v in (table or {}).items():
            v = Fraction(as_rational(v))
            if v <= 0:
                raise ValueError(f"weight at ({k}, {d}) must be strictly positive, got {v}")
            self.table[(int(k), int(d))] = v
        self.name = name or ("one" if not self.table and self.default == 1 else "table")

    @classmethod
    def one(cls) -> "WeightFunction":
        return cls(name="one")

    @classmethod
    def from_file(cls, path: str | Path) -> "WeightFunction":
        """Read lines ``k d num/den``; blank lines and ``#`` comments are skipped."""
        table: dict[tuple[int, int], Fraction] = {}
        for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"{path}:{lineno}: expected 'k d value', got {raw!r}")
            table[(int(parts[0]), int(parts[1]))] = Fraction(parts[2])
        return cls(table, name=f"table:{Path(path).name}")

    def __call__(self, k: int, d: int) -> Fraction:
        return self.table.get((k, d), self.default)

    def sqrt(self, k: int, d: int) -> Fraction | None:
        """Exact square root of ``w(k, d)`` when it is a rational square."""
        return rational_sqrt(self(k, d))

    def is_symmetric(self, points) -> bool:
        return all(self(k, d) == self(-k, -d) for k, d in points)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "default": [self.default.numerator, self.default.denominator],
            "table": [[k, d, v.numerator, v.denominator] for (k, d), v in sorted(self.table.items())],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self.default == other.default and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.default, frozenset(self.table.items())))

    def __repr__(self) -> str:
        return f"WeightFunction(name={self.name!r}, default={self.default}, entries={len(self.table)})"


def rational_sqrt(x: Rational) -> Fraction | None:
    x = Fraction(x)
    if x < 0:
        return None
    n, d = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


def form_mono(x: BasisMonomial, y: BasisMonomial, w: WeightFunction) -> QScalar:
    if x.k == y.k and x.l - x.m == y.l - y.m:
        return QScalar.const(w(x.k, x.l - x.m))
    return ZERO


def form(x: Element, y: Element, w: WeightFunction) -> QScalar:
    """``<x, y>``: antilinear in ``x``, linear in ``y``."""
    grouped: dict[tuple[int, int], QScalar] = {}
    for m, c in y.items():
        accumulate(grouped, (m.k, m.l - m.m), c)
    out = ZERO
    for m, c in x.items():
        g = grouped.get((m.k, m.l - m.m))
        if g is not None:
            out = out + c.conj() * g * w(m.k, m.l - m.m)
    return out


class PIndex(NamedTuple):
    """Label of an orthonormal basis vector of P or P'.

    ``psi=False``: ``phi_rs ~ a^r c^s``.  ``psi=True``: ``psi_rs ~ a^r (c*)^s`` with s > 0.
    """

    r: int
    s: int
    psi: bool = False

    @property
    def monomial(self) -> BasisMonomial:
        return BasisMonomial(self.r, 0, self.s) if self.psi else BasisMonomial(self.r, self.s, 0)

    @property
    def weight_key(self) -> tuple[int, int]:
        return (self.r, -self.s) if self.psi else (self.r, self.s)

    @property
    def degree(self) -> int:
        return self.r + self.s

    def to_json(self) -> list:
        return [self.r, self.s, "psi"] if self.psi else [self.r, self.s]

    @classmethod
    def from_json(cls, data: list) -> "PIndex":
        if len(data) == 3:
            if data[2] != "psi":
                raise ValueError(f"bad PIndex tag {data[2]!r}")
            return cls(int(data[0]), int(data[1]), True)
        return cls(int(data[0]), int(data[1]))

    @classmethod
    def of(cls, m: BasisMonomial) -> "PIndex":
        if m.k < 0 or (m.l and m.m):
            raise ValueError(f"{m} is not a P' basis monomial")
        if m.m:
            return cls(m.k, m.m, True)
        return cls(m.k, m.l)

    def __str__(self) -> str:
        return f"psi({self.r},{self.s})" if self.psi else f"phi({self.r},{self.s})"


def project_Q_closed(x: Element) -> Element:
    """``e(k,l,m) -> e(k,l-m,0)`` when k >= 0 and l >= m, else 0."""
    out: dict = {}
    for m, c in x.items():
        if m.k >= 0 and m.l >= m.m:
            accumulate(out, BasisMonomial(m.k, m.l - m.m, 0), c)
    return Element._raw(out)


def _phi_sum(x: Element, w: WeightFunction, out: dict) -> None:
    if not x:
        return
    i_max = max(max(m.k for m, _ in x.items()), 0)
    j_max = max(max(m.l for m, _ in x.items()), 0)
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            e_ij = Element._raw({BasisMonomial(i, j, 0): ONE})
            # <phi_ij, f> phi_ij = <e_ij0, f> e_ij0 / w(i, j)
            c = form(e_ij, x, w)
            if c:
                accumulate(out, BasisMonomial(i, j, 0), c * Fraction(1) / w(i, j))


def project_Q_sum(x: Element, w: WeightFunction) -> Element:
    """``Q(f) = sum_{i,j>=0} <phi_ij, f> phi_ij``, summed over the finite window that can contribute."""
    out: dict = {}
    _phi_sum(x, w, out)
    return Element._raw(out)


def project_Qprime(x: Element, w: WeightFunction) -> Element:
    """Projection onto P' = span{e(k,l,0), e(k,0,m) : k,l >= 0, m > 0}."""
    out: dict = {}
    _phi_sum(x, w, out)
    if x:
        i_max = max(max(m.k for m, _ in x.items()), 0)
        j_max = max(m.m for m, _ in x.items())
        for i in range(i_max + 1):
            for j in range(1, j_max + 1):
                e_ij = Element._raw({BasisMonomial(i, 0, j): ONE})
                c = form(e_ij, x, w)
                if c:
                    accumulate(out, BasisMonomial(i, 0, j), c * Fraction(1) / w(i, -j))
    return Element._raw(out)


def in_Pprime(m: BasisMonomial) -> bool:
    return m.k >= 0 and (m.m == 0 or m.l == 0)
