from __future__ import annotations

import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from strategies import nonzero_q, scalars

from cotoeplitz.scalar import (
    I,
    ONE,
    Q,
    ZERO,
    QRational,
    QScalar,
    as_rational,
    q_power,
    qbinomial,
    qs_add,
    qs_conj,
    qs_mul,
    specialize,
)


def test_addition_examples() -> None:
    assert qs_add(Q + 1, QScalar.const(-1)) == Q
    assert qs_add(ZERO, Q * Q) == Q * Q
    assert qs_add(q_power(-2), q_power(-2)) == q_power(-2, 2)


def test_multiplication_examples() -> None:
    assert qs_mul(Q, q_power(-1)) == ONE
    assert qs_mul(1 + Q, 1 - Q) == 1 - Q * Q
    assert qs_mul(I, I) == -ONE


def test_conjugation_examples() -> None:
    assert qs_conj(I * Q) == -(I * Q)
    assert qs_conj(Q * Q) == Q * Q
    x = q_power(-1, QRational(2, 3))
    assert qs_conj(x) == q_power(-1, QRational(2, -3))


def test_canonical_form_drops_zeros() -> None:
    x = QScalar({0: 0, 3: QRational(0, 0), -1: 2})
    assert x.terms == {-1: QRational(2)}
    assert not (Q - Q)


def test_qbinomial_values() -> None:
    assert qbinomial(7, 0, -2) == ONE
    assert qbinomial(2, 1, -2) == 1 + q_power(-2)
    assert specialize(qbinomial(5, 2, -2), 1) == QRational(10)
    with pytest.raises(ValueError):
        qbinomial(2, 3, -2)
    with pytest.raises(ValueError):
        qbinomial(2, 1, 0)


def test_qbinomial_against_product_formula() -> None:
    qv = Fraction(3, 7)
    p = qv**-2
    for n in range(7):
        for k in range(n + 1):
            expected = Fraction(1)
            for i in range(1, k + 1):
                expected *= (1 - p ** (n - i + 1)) / (1 - p**i)
            assert specialize(qbinomial(n, k, -2), qv) == QRational(expected)


def test_specialize_values_and_domain() -> None:
    assert specialize(1 + Q * Q, Fraction(1, 2)) == QRational(Fraction(5, 4))
    assert specialize(q_power(-1), 2) == QRational(Fraction(1, 2))
    assert specialize(I * Q, 3) == QRational(0, 3)
    with pytest.raises(ValueError):
        specialize(Q, 0)
    with pytest.warns(UserWarning):
        specialize(Q, -1)


def test_as_rational_parses_strings() -> None:
    assert as_rational("3/4") == Fraction(3, 4)
    assert as_rational(2) == 2


def test_json_round_trip_and_str() -> None:
    x = 1 + I * q_power(-2, Fraction(1, 3)) - Q
    assert QScalar.from_json(x.to_json()) == x
    assert str(ZERO) == "0"


@given(scalars, scalars, scalars)
def test_ring_axioms(x: QScalar, y: QScalar, z: QScalar) -> None:
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == ZERO
    assert x * ONE == x


@given(scalars, scalars)
def test_conjugation_is_an_involutive_ring_morphism(x: QScalar, y: QScalar) -> None:
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@given(scalars, scalars, nonzero_q)
def test_specialize_is_a_ring_morphism(x: QScalar, y: QScalar, qv: Fraction) -> None:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        assert specialize(x * y, qv) == specialize(x, qv) * specialize(y, qv)
        assert specialize(x + y, qv) == specialize(x, qv) + specialize(y, qv)
