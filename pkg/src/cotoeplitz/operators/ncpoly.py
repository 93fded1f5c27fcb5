"""Non-commutative polynomials in abstract generators ``G[f]`` and relation checking.

A word is a tuple of generator names; its degree is its length and the empty
word is the identity.  Relations are checked by sending every generator to an
operator matrix and evaluating.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any, Callable, Iterator, Mapping

from ..linear import accumulate
from ..report import CheckResult
from ..scalar import I, ONE, QScalar, as_rational
from .matrix import OperatorMatrix, add, compose, identity_matrix, index_to_json, scale

Word = tuple[str, ...]


class NCPoly:
    """Finite map ``word -> QScalar`` with no zero coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Any] | None = None) -> None:
        out: dict[Word, QScalar] = {}
        for w, c in (terms or {}).items():
            accumulate(out, tuple(w), QScalar.coerce(c))
        self._terms = out

    @classmethod
    def generator(cls, name: str) -> "NCPoly":
        return cls({(name,): 1})

    @classmethod
    def constant(cls, c: Any) -> "NCPoly":
        return cls({(): c})

    def items(self) -> Iterator[tuple[Word, QScalar]]:
        return iter(sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0])))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, NCPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        out = dict(self._terms)
        for w, c in other._terms.items():
            accumulate(out, w, c)
        return NCPoly._from(out)

    def __neg__(self) -> "NCPoly":
        return NCPoly._from({w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other: "NCPoly") -> "NCPoly":
        out: dict[Word, QScalar] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                accumulate(out, w1 + w2, c1 * c2)
        return NCPoly._from(out)

    def scale(self, c: Any) -> "NCPoly":
        c = QScalar.coerce(c)
        return NCPoly._from({w: c * v for w, v in self._terms.items()} if c else {})

    @classmethod
    def _from(cls, terms: dict[Word, QScalar]) -> "NCPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    def degrees(self) -> set[int]:
        return {len(w) for w in self._terms}

    def generators(self) -> set[str]:
        return {g for w in self._terms for g in w}

    def homogeneous_part(self, degree: int) -> "NCPoly":
        return NCPoly._from({w: c for w, c in self._terms.items() if len(w) == degree})

    def to_json(self) -> list[dict[str, Any]]:
        return [{"word": list(w), "coeff": c.to_json()} for w, c in self.items()]

    @classmethod
    def from_json(cls, data: list[dict[str, Any]]) -> "NCPoly":
        return cls({tuple(t["word"]): QScalar.from_json(t["coeff"]) for t in data})

    def __repr__(self) -> str:
        return f"NCPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.items():
            mono = "*".join(f"G[{g}]" for g in w)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif c == ONE:
                parts.append(mono)
            elif c == -ONE:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _top_degree(rel: NCPoly) -> int:
    if rel.is_zero():
        raise ValueError("the zero polynomial is not a relation")
    return max(rel.degrees())


def classify_relation(rel: NCPoly) -> str:
    """``classical`` when homogeneous, else ``quantum``."""
    _top_degree(rel)
    return "classical" if len(rel.degrees()) == 1 else "quantum"


def associated_classical(rel: NCPoly) -> NCPoly:
    """The top-degree homogeneous part."""
    return rel.homogeneous_part(_top_degree(rel))


def hbar_deform(rel: NCPoly, hbar_sqrt: Any) -> NCPoly:
    """Scale the degree-``i`` part by ``hbar_sqrt ** (n - i)``, ``n`` the top degree."""
    n = _top_degree(rel)
    h = as_rational(hbar_sqrt)
    out = NCPoly()
    for i in sorted(rel.degrees()):
        out = out + rel.homogeneous_part(i).scale(Fraction(h) ** (n - i))
    return out


def evaluate(rel: NCPoly, assignment: Mapping[str, OperatorMatrix]) -> OperatorMatrix:
    """Substitute a matrix for every generator; the empty word is the identity."""
    if not assignment:
        raise ValueError("empty generator assignment")
    missing = rel.generators() - set(assignment)
    if missing:
        raise KeyError(f"no matrix assigned to generator(s) {sorted(missing)}")
    mats = list(assignment.values())
    like = mats[0]
    for m in mats[1:]:
        if m.trunc != like.trunc or m.basis != like.basis or m.basis_mode != like.basis_mode:
            raise ValueError(f"mismatched truncations: {like.trunc} vs {m.trunc}")
    ident = identity_matrix(like)
    total = scale(0, ident)
    for w, c in rel.items():
        term = ident
        for g in w:
            term = compose(term, assignment[g])
        total = add(total, scale(c, term))
    return total


def check_relation(rel: NCPoly, assignment: Mapping[str, OperatorMatrix]) -> CheckResult:
    """A necessary condition for ``rel`` to lie in the kernel: it vanishes on the truncation interior.

    ``holds`` means "candidate relation at this truncation"; it never certifies
    membership in the full kernel.
    """
    value = evaluate(rel, assignment)
    for r, c, v in value.sorted_entries():
        if c not in value.escaped:
            return CheckResult(
                "relation",
                False,
                {"verdict": "violated", "row": index_to_json(r), "col": index_to_json(c), "value": str(v)},
            )
    return CheckResult(
        "relation",
        True,
        {"verdict": "candidate relation at this truncation", "trunc": value.trunc.N, "escaped_cols": len(value.escaped)},
    )


_TOKEN = re.compile(
    r"\s*(?:(?P<gen>G\[(?P<name>[^\]]+)\])|(?P<num>\d+(?:/\d+)?)|(?P<q>q)|(?P<i>i)|(?P<op>[-+*^()]))"
)


def parse_ncpoly(text: str, check_generator: Callable[[str], Any] | None = None) -> NCPoly:
    """Parse e.g. ``"G[a]*G[c] - q^2*G[c]*G[a] - 1"``.

    Scalars are rationals, ``i`` and ``q`` with optional integer power.
    ``check_generator`` may reject unknown generator names by raising.
    """
    tokens: list[tuple[str, str]] = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse relation at {text[pos:]!r}")
        pos = m.end()
        kind = m.lastgroup if m.lastgroup != "name" else "gen"
        if m.group("gen"):
            name = m.group("name").strip()
            if check_generator is not None:
                check_generator(name)
            tokens.append(("gen", name))
        else:
            tokens.append((kind, m.group(kind)))
    parser = _Parser(tokens)
    out = parser.expr()
    if parser.i != len(tokens):
        raise ValueError(f"trailing input in relation {text!r}")
    return out


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.i = 0

    def _peek(self) -> tuple[str, str] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _next(self) -> tuple[str, str]:
        tok = self._peek()
        if tok is None:
            raise ValueError("unexpected end of relation")
        self.i += 1
        return tok

    def expr(self) -> NCPoly:
        sign = 1
        if self._peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self._next()[1] == "-" else 1
        out = self.term().scale(sign)
        while self._peek() in (("op", "-"), ("op", "+")):
            sign = -1 if self._next()[1] == "-" else 1
            out = out + self.term().scale(sign)
        return out

    def term(self) -> NCPoly:
        out = self.factor()
        while self._peek() == ("op", "*"):
            self._next()
            out = out * self.factor()
        return out

    def factor(self) -> NCPoly:
        kind, val = self._next()
        if kind == "gen":
            return NCPoly.generator(val)
        if kind == "num":
            return NCPoly.constant(Fraction(val))
        if kind == "i":
            return NCPoly.constant(I)
        if kind == "q":
            e = 1
            if self._peek() == ("op", "^"):
                self._next()
                neg = self._peek() == ("op", "-")
                if neg:
                    self._next()
                k, v = self._next()
                if k != "num" or "/" in v:
                    raise ValueError(f"q exponent must be an integer, got {v!r}")
                e = -int(v) if neg else int(v)
            return NCPoly.constant(QScalar.monomial(e))
        if (kind, val) == ("op", "("):
            inner = self.expr()
            if self._next() != ("op", ")"):
                raise ValueError("unbalanced parenthesis in relation")
            return inner
        raise ValueError(f"unexpected token {val!r} in relation")

