"""Exact Gaussian-rational Laurent polynomials in a real formal parameter ``q``.

Every coefficient that appears anywhere in the engine is a :class:`QScalar`:
a finite sum ``sum_e c_e q**e`` with ``c_e`` in Q(i).  Components of a
:class:`QRational` are kept as ``int`` whenever the value is integral, which
keeps the hot paths (normal ordering, coproducts) on machine integers.
"""

from __future__ import annotations

import warnings
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Iterator, Union

Rational = Union[int, Fraction]


def _norm(x: Rational) -> Rational:
    if type(x) is Fraction and x.denominator == 1:
        return x.numerator
    return x


def as_rational(value: Any) -> Rational:
    """Parse an int, Fraction or ``"p/r"`` string into an exact rational."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return _norm(value)
    if isinstance(value, str):
        return _norm(Fraction(value.strip()))
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class QRational:
    """An element ``re + i*im`` of the Gaussian rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0) -> None:
        self.re = _norm(re)
        self.im = _norm(im)

    @classmethod
    def coerce(cls, value: Any) -> "QRational":
        if isinstance(value, QRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls(as_rational(value))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: Any) -> "QRational":
        o = QRational.coerce(other)
        return QRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "QRational":
        o = QRational.coerce(other)
        return QRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> "QRational":
        return QRational.coerce(other) - self

    def __neg__(self) -> "QRational":
        return QRational(-self.re, -self.im)

    def __mul__(self, other: Any) -> "QRational":
        o = QRational.coerce(other)
        if not self.im and not o.im:
            return QRational(self.re * o.re)
        return QRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "QRational":
        o = QRational.coerce(other)
        den = o.re * o.re + o.im * o.im
        if not den:
            raise ZeroDivisionError("division by zero in QRational")
        num = self * o.conj()
        return QRational(Fraction(num.re) / den, Fraction(num.im) / den)

    def __pow__(self, n: int) -> "QRational":
        if n < 0:
            return QRational(1) / (self ** (-n))
        out = QRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "QRational":
        return QRational(self.re, -self.im)

    def to_json(self) -> dict[str, list[int]]:
        re, im = Fraction(self.re), Fraction(self.im)
        return {"re": [re.numerator, re.denominator], "im": [im.numerator, im.denominator]}

    def __repr__(self) -> str:
        return f"QRational({self})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return _imag_str(self.im)
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{_imag_str(abs(self.im))}"


def _imag_str(x: Rational) -> str:
    if x == 1:
        return "i"
    if x == -1:
        return "-i"
    return f"{x}i"


ScalarLike = Union["QScalar", QRational, int, Fraction]


class QScalar:
    """Laurent polynomial ``sum c_e q**e`` with Gaussian-rational ``c_e``.

    Instances are immutable and hashable; zero coefficients are never stored,
    so structural equality is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[int, Any] | None = None) -> None:
        clean: dict[int, QRational] = {}
        if terms:
            for e, c in terms.items():
                c = QRational.coerce(c)
                if c:
                    clean[int(e)] = c
        self._terms = clean
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[int, QRational]) -> "QScalar":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, value: Any) -> "QScalar":
        if isinstance(value, QScalar):
            return value
        c = QRational.coerce(value)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, exponent: int, coeff: Any = 1) -> "QScalar":
        c = QRational.coerce(coeff)
        return cls._raw({exponent: c} if c else {})

    @classmethod
    def coerce(cls, value: ScalarLike) -> "QScalar":
        if isinstance(value, QScalar):
            return value
        return cls.const(value)

    @property
    def terms(self) -> dict[int, QRational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, QRational]]:
        return iter(sorted(self._terms.items()))

    def coeff(self, exponent: int) -> QRational:
        return self._terms.get(exponent, QRational(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_value(self) -> QRational:
        if not self.is_constant():
            raise ValueError(f"{self} depends on q")
        return self.coeff(0)

    def degree_range(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero has no degree")
        return min(self._terms), max(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, QRational)):
            return self._terms == QScalar.const(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: ScalarLike) -> "QScalar":
        if not isinstance(other, QScalar):
            if not isinstance(other, (int, Fraction, QRational)):
                return NotImplemented
            other = QScalar.const(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            prev = out.get(e)
            if prev is None:
                out[e] = c
            else:
                s = prev + c
                if s:
                    out[e] = s
                else:
                    del out[e]
        return QScalar._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "QScalar":
        return QScalar._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: ScalarLike) -> "QScalar":
        if not isinstance(other, QScalar):
            if not isinstance(other, (int, Fraction, QRational)):
                return NotImplemented
            other = QScalar.const(other)
        return self + (-other)

    def __rsub__(self, other: ScalarLike) -> "QScalar":
        return QScalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "QScalar":
        if not isinstance(other, QScalar):
            if not isinstance(other, (int, Fraction, QRational)):
                return NotImplemented
            c = QRational.coerce(other)
            if not c:
                return ZERO
            return QScalar._raw({e: v * c for e, v in self._terms.items()})
        if not self._terms or not other._terms:
            return ZERO
        out: dict[int, QRational] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                p = c1 * c2
                prev = out.get(e)
                out[e] = p if prev is None else prev + p
        return QScalar._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def shift(self, n: int) -> "QScalar":
        """Multiply by ``q**n``."""
        if not n:
            return self
        return QScalar._raw({e + n: c for e, c in self._terms.items()})

    def __truediv__(self, other: Any) -> "QScalar":
        if isinstance(other, QScalar):
            if len(other._terms) != 1:
                raise ZeroDivisionError("only division by a monomial c*q**e stays in the Laurent ring")
            (e, c), = other._terms.items()
            return (self / c).shift(-e)
        c = QRational.coerce(other)
        return QScalar._raw({e: v / c for e, v in self._terms.items()})

    def __pow__(self, n: int) -> "QScalar":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative powers only exist for monomials")
            (e, c), = self._terms.items()
            return QScalar.monomial(e * n, c ** n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "QScalar":
        """Complex conjugation; ``q`` is real so only coefficients change."""
        if all(not c.im for c in self._terms.values()):
            return self
        return QScalar._raw({e: c.conj() for e, c in self._terms.items()})

    def to_json(self) -> list[dict[str, Any]]:
        return [{"qexp": e, **c.to_json()} for e, c in self.items()]

    @classmethod
    def from_json(cls, data: Iterable[dict[str, Any]]) -> "QScalar":
        out = ZERO
        for term in data:
            re = Fraction(*term.get("re", [0, 1]))
            im = Fraction(*term.get("im", [0, 1]))
            out = out + QScalar.monomial(int(term["qexp"]), QRational(re, im))
        return out

    def __repr__(self) -> str:
        return f"QScalar({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            if e == 0:
                mono = ""
            elif e == 1:
                mono = "q"
            else:
                mono = f"q^{e}" if e > 0 else f"q^({e})"
            if c.im and c.re:
                coeff = f"({c})"
            else:
                coeff = str(c)
            if mono and coeff == "1":
                txt = mono
            elif mono and coeff == "-1":
                txt = "-" + mono
            elif mono:
                txt = f"{coeff}*{mono}"
            else:
                txt = coeff
            parts.append(txt)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


ZERO = QScalar._raw({})
ONE = QScalar._raw({0: QRational(1)})
I = QScalar._raw({0: QRational(0, 1)})
Q = QScalar._raw({1: QRational(1)})


def q_power(e: int, coeff: Any = 1) -> QScalar:
    return QScalar.monomial(e, coeff)


def qs_add(x: QScalar, y: QScalar) -> QScalar:
    return x + y


def qs_mul(x: QScalar, y: QScalar) -> QScalar:
    return x * y


def qs_conj(x: QScalar) -> QScalar:
    return x.conj()


@lru_cache(maxsize=None)
def qbinomial(n: int, k: int, base_exponent: int) -> QScalar:
    """Gaussian binomial ``[n k]_p`` with ``p = q**base_exponent``.

    Built from ``[n k] = [n-1 k-1] + p**k [n-1 k]`` so no division is needed.
    """
    if n < 0 or k < 0:
        raise ValueError(f"qbinomial needs natural arguments, got n={n}, k={k}")
    if k > n:
        raise ValueError(f"qbinomial({n}, {k}): k exceeds n")
    if base_exponent == 0:
        raise ValueError("base_exponent must be non-zero")
    if k == 0 or k == n:
        return ONE
    return qbinomial(n - 1, k - 1, base_exponent) + qbinomial(n - 1, k, base_exponent).shift(
        k * base_exponent
    )


def specialize(x: QScalar, q_value: Any) -> QRational:
    """Evaluate ``x`` exactly at a non-zero rational ``q``."""
    qv = Fraction(as_rational(q_value))
    if qv == 0:
        raise ValueError("q = 0 is outside the Laurent ring's domain")
    if qv == -1:
        warnings.warn("q = -1 is excluded by the SU_q(2) setting", stacklevel=2)
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    for e, c in x.items():
        p = qv**e
        re += c.re * p
        im += c.im * p
    return QRational(re, im)
