"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from cotoeplitz.linear import Element
from cotoeplitz.scalar import QRational, QScalar
from cotoeplitz.suq2.basis import BasisMonomial

small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero_q = st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(lambda x: x not in (0, -1))

gaussian_rationals = st.builds(QRational, small_fractions, small_fractions)

scalars = st.dictionaries(st.integers(-3, 3), gaussian_rationals, max_size=4).map(QScalar)

monomials = st.builds(BasisMonomial, st.integers(-2, 2), st.integers(0, 2), st.integers(0, 2))

elements = st.dictionaries(monomials, scalars.filter(bool), max_size=3).map(Element)

words = st.text(alphabet="aAcC", max_size=5)


def as_fraction(x: QRational) -> tuple[Fraction, Fraction]:
    return Fraction(x.re), Fraction(x.im)
