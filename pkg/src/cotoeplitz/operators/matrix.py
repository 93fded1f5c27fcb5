"""Sparse exact matrices of quantization operators on a truncated P basis."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Hashable, Iterable, Literal, Mapping

from ..coalgebra.cosymbol import CoSymbol, Evaluator
from ..coalgebra.instances import CoalgebraInstance
from ..coalgebra.pipeline import ctoeplitz_apply, ctoeplitz_cosymbol_apply
from ..linear import Element, accumulate
from ..report import CheckResult
from ..scalar import ONE, ZERO, QRational, QScalar, as_rational, specialize
from ..suq2.form import PIndex, rational_sqrt

BasisMode = Literal["orthonormal", "epsilon"]


@dataclass(frozen=True)
class TruncationSpec:
    """All P basis vectors of total degree at most ``N``."""

    N: int
    subspace: str = "P"

    def __post_init__(self) -> None:
        if self.N < 0:
            raise ValueError(f"truncation degree must be >= 0, got {self.N}")

    def basis(self, inst: CoalgebraInstance) -> tuple[Hashable, ...]:
        return tuple(inst.p_basis(self.N))


def index_to_json(index: Hashable) -> Any:
    if isinstance(index, PIndex):
        return index.to_json()
    return index


def index_from_json(data: Any) -> Hashable:
    if isinstance(data, list):
        return PIndex.from_json(data)
    return int(data)


@dataclass(frozen=True)
class OperatorMatrix:
    """Entries ``(row, col) -> coeff`` with no stored zeros.

    ``escaped`` lists columns whose true image has components outside the
    truncation; entries inside the truncation stay exact for those columns.
    """

    trunc: TruncationSpec
    basis: tuple[Hashable, ...]
    entries: Mapping[tuple[Hashable, Hashable], QScalar]
    escaped: frozenset = frozenset()
    basis_mode: BasisMode = "orthonormal"
    norms: Mapping[Hashable, Fraction] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if any(not c for c in self.entries.values()):
            object.__setattr__(self, "entries", {k: c for k, c in self.entries.items() if c})

    def __hash__(self) -> int:
        return hash((self.trunc, self.basis, frozenset(self.entries.items()), self.escaped, self.basis_mode))

    def __getitem__(self, key: tuple[Hashable, Hashable]) -> QScalar:
        return self.entries.get(key, ZERO)

    def is_zero(self) -> bool:
        return not self.entries

    def is_diagonal(self) -> bool:
        return all(r == c for r, c in self.entries)

    def is_identity(self) -> bool:
        return self.is_diagonal() and len(self.entries) == len(self.basis) and all(v == ONE for v in self.entries.values())

    def column(self, col: Hashable) -> dict[Hashable, QScalar]:
        return {r: v for (r, c), v in self.entries.items() if c == col}

    def sorted_entries(self) -> list[tuple[Hashable, Hashable, QScalar]]:
        pos = {b: i for i, b in enumerate(self.basis)}
        return sorted(((r, c, v) for (r, c), v in self.entries.items()), key=lambda t: (pos[t[1]], pos[t[0]]))

    def to_json(self) -> dict[str, Any]:
        pos = {b: i for i, b in enumerate(self.basis)}
        return {
            "trunc": self.trunc.N,
            "subspace": self.trunc.subspace,
            "basis_mode": self.basis_mode,
            "entries": [
                {"row": index_to_json(r), "col": index_to_json(c), "coeff": v.to_json()} for r, c, v in self.sorted_entries()
            ],
            "escaped_cols": [index_to_json(c) for c in sorted(self.escaped, key=pos.__getitem__)],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any], basis: Iterable[Hashable]) -> "OperatorMatrix":
        entries = {
            (index_from_json(e["row"]), index_from_json(e["col"])): QScalar.from_json(e["coeff"]) for e in data["entries"]
        }
        return cls(
            TruncationSpec(int(data["trunc"]), data.get("subspace", "P")),
            tuple(basis),
            entries,
            frozenset(index_from_json(c) for c in data.get("escaped_cols", [])),
            data.get("basis_mode", "orthonormal"),
        )

    def specialize(self, q_value: Any) -> dict[tuple[Hashable, Hashable], QRational]:
        out = {}
        for key, v in self.entries.items():
            s = specialize(v, q_value)
            if s:
                out[key] = s
        return out

    def to_csv(self, q_value: Any) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["row", "col", "re", "im"])
        values = self.specialize(q_value)
        for r, c, _ in self.sorted_entries():
            v = values.get((r, c))
            if v is not None:
                writer.writerow([_index_str(r), _index_str(c), str(v.re), str(v.im)])
        return buf.getvalue()


def _index_str(index: Hashable) -> str:
    if isinstance(index, PIndex):
        return ";".join(map(str, index.to_json()))
    return str(index)


def _basis_norms(inst: CoalgebraInstance, basis: Iterable[Hashable]) -> tuple[BasisMode, dict[Hashable, Fraction]]:
    """Square roots of the basis norms if all are rational, else the raw norms."""
    raw = {b: Fraction(inst.norm2(b)) for b in basis}
    roots = {b: rational_sqrt(v) for b, v in raw.items()}
    if all(r is not None for r in roots.values()):
        return "orthonormal", roots
    return "epsilon", raw


def _column(
    inst: CoalgebraInstance,
    image: Element,
    col: Hashable,
    members: frozenset,
    mode: BasisMode,
    norms: Mapping[Hashable, Fraction],
) -> tuple[dict[Hashable, QScalar], bool]:
    out: dict[Hashable, QScalar] = {}
    escaped = False
    for label, c in image.items():
        row = inst.label_index(label)
        if row not in members:
            escaped = True
            continue
        if mode == "orthonormal":
            c = c * (norms[row] / norms[col])
        out[row] = c
    return out, escaped


def symbol_column(inst: CoalgebraInstance, g: Element, col: Hashable, trunc: TruncationSpec) -> tuple[dict, bool]:
    """One column of the matrix of ``C_g``; pure, so columns may be built in parallel."""
    basis = trunc.basis(inst)
    mode, norms = _basis_norms(inst, basis)
    image = ctoeplitz_apply(inst, g, inst.index_element(col))
    return _column(inst, image, col, frozenset(basis), mode, norms)


def _assemble(inst, trunc, images) -> OperatorMatrix:
    basis = trunc.basis(inst)
    members = frozenset(basis)
    mode, norms = _basis_norms(inst, basis)
    entries: dict = {}
    escaped = set()
    for col in basis:
        colmap, esc = _column(inst, images(col), col, members, mode, norms)
        if esc:
            escaped.add(col)
        for row, v in colmap.items():
            entries[(row, col)] = v
    return OperatorMatrix(trunc, basis, entries, frozenset(escaped), mode, norms)


def matrix_of_symbol(inst: CoalgebraInstance, g: Element, trunc: TruncationSpec) -> OperatorMatrix:
    return _assemble(inst, trunc, lambda col: ctoeplitz_apply(inst, g, inst.index_element(col)))


def matrix_of_cosymbol(inst: CoalgebraInstance, lam: CoSymbol, trunc: TruncationSpec) -> OperatorMatrix:
    ev = Evaluator(inst)
    return _assemble(inst, trunc, lambda col: ctoeplitz_cosymbol_apply(inst, lam, inst.index_element(col), ev))


def identity_matrix(like: OperatorMatrix) -> OperatorMatrix:
    return OperatorMatrix(like.trunc, like.basis, {(b, b): ONE for b in like.basis}, frozenset(), like.basis_mode, like.norms)


def _compatible(x: OperatorMatrix, y: OperatorMatrix) -> None:
    if x.trunc != y.trunc or x.basis != y.basis:
        raise ValueError(f"incompatible truncations: {x.trunc} vs {y.trunc}")
    if x.basis_mode != y.basis_mode:
        raise ValueError(f"incompatible basis modes: {x.basis_mode} vs {y.basis_mode}")


def _with_entries(like: OperatorMatrix, entries: dict, escaped: Iterable) -> OperatorMatrix:
    return OperatorMatrix(like.trunc, like.basis, entries, frozenset(escaped), like.basis_mode, like.norms)


def add(x: OperatorMatrix, y: OperatorMatrix) -> OperatorMatrix:
    _compatible(x, y)
    out = dict(x.entries)
    for key, v in y.entries.items():
        accumulate(out, key, v)
    return _with_entries(x, out, x.escaped | y.escaped)


def scale(c: Any, x: OperatorMatrix) -> OperatorMatrix:
    c = QScalar.coerce(c)
    return _with_entries(x, {k: c * v for k, v in x.entries.items()}, x.escaped if c else ())


def compose(x: OperatorMatrix, y: OperatorMatrix) -> OperatorMatrix:
    """``x . y``; a column escapes if it escapes in ``y`` or feeds an escaped column of ``x``."""
    _compatible(x, y)
    by_col: dict[Hashable, list] = {}
    for (r, c), v in x.entries.items():
        by_col.setdefault(c, []).append((r, v))
    out: dict = {}
    escaped = set(y.escaped)
    for (k, j), yv in y.entries.items():
        if k in x.escaped:
            escaped.add(j)
        for i, xv in by_col.get(k, ()):
            accumulate(out, (i, j), xv * yv)
    return _with_entries(x, out, escaped)


def commutator(x: OperatorMatrix, y: OperatorMatrix, q_twist: Any = 1) -> OperatorMatrix:
    """``x y - q_twist y x``."""
    return add(compose(x, y), scale(-QScalar.coerce(q_twist), compose(y, x)))


def adjoint_check(inst: CoalgebraInstance, g: Element, trunc: TruncationSpec, q_value: Any) -> CheckResult:
    """Compare ``C_{g*}`` with the adjoint of ``C_g`` at a positive rational q.

    Only entries whose row and column lie in the interior are compared: the
    columns that do not escape the truncation in either matrix.  In epsilon
    mode the adjoint carries the diagonal Gram matrix explicitly.
    """
    qv = as_rational(q_value)
    if qv <= 0:
        raise ValueError(f"adjoint comparison needs q > 0, got {qv}")
    m_star = matrix_of_symbol(inst, inst.star(g), trunc)
    m = matrix_of_symbol(inst, g, trunc)
    interior = [b for b in m.basis if b not in m.escaped and b not in m_star.escaped]
    lhs = m_star.specialize(qv)
    rhs = m.specialize(qv)
    zero = QRational(0)
    for i in interior:
        for j in interior:
            a = lhs.get((i, j), zero)
            b = rhs.get((j, i), zero).conj()
            if m.basis_mode == "epsilon":
                b = b * (m.norms[j] / m.norms[i])
            if a != b:
                return CheckResult(
                    "adjoint",
                    False,
                    {"row": index_to_json(i), "col": index_to_json(j), "C_g*": str(a), "(C_g)^*": str(b), "q": str(qv)},
                )
    return CheckResult("adjoint", True, {"interior": len(interior), "q": str(qv)})


def classify_symbol(inst: CoalgebraInstance, g: Element) -> str:
    """``annihilation`` for symbols in P, ``creation`` for symbols in P*, else ``neither``.

    P is tested first, so symbols in both (the constants) count as annihilation.
    """
    if inst.supported_on_P(g):
        return "annihilation"
    if inst.supported_on_P(inst.star(g)):
        return "creation"
    return "neither"


def degree_shift_ok(m: OperatorMatrix, shift: tuple[int, int]) -> bool:
    """Every entry sits at ``row = col - shift`` in the (r, s) grid."""
    dr, ds = shift
    return all(r.r == c.r - dr and r.s == c.s - ds and r.psi == c.psi for r, c in m.entries)
