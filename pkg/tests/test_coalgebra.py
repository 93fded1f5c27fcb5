from __future__ import annotations

import random

import pytest

from cotoeplitz.coalgebra import (
    COUNIT,
    EgNode,
    Evaluator,
    GroupLikeInstance,
    ProductNode,
    ScaleNode,
    StarNode,
    SumNode,
    SUq2Instance,
    coaction_beta,
    ctoeplitz_apply,
    ctoeplitz_cosymbol_apply,
    pi_g,
    tilde_ctoeplitz_apply,
)
from cotoeplitz.coalgebra.checks import (
    check_adjoint_condition,
    check_cosymbol_product,
    check_counit_identity,
    check_dual_evaluation,
    check_Q_coalgebra_morphism,
    check_q_inject,
)
from cotoeplitz.coalgebra.cosymbol import from_json, random_cosymbol, to_json
from cotoeplitz.linear import Element, TensorElement
from cotoeplitz.report import CheckResult, combine
from cotoeplitz.scalar import I, ONE, q_power
from cotoeplitz.suq2.basis import basis_element, mono
from cotoeplitz.suq2.form import WeightFunction

q = q_power(1)


def e(k: int, l: int = 0, m: int = 0, coeff=1) -> Element:
    return basis_element(k, l, m, coeff)


@pytest.fixture(scope="module")
def suq2() -> SUq2Instance:
    return SUq2Instance(WeightFunction.one())


@pytest.fixture(scope="module")
def group_like() -> GroupLikeInstance:
    return GroupLikeInstance(4, [1, 3], [2, 1, 5, 3])


def test_beta_on_generators(suq2: SUq2Instance) -> None:
    assert coaction_beta(suq2, e(1)) == TensorElement.pure(mono(1), mono(1))
    assert coaction_beta(suq2, e(0, 1)) == TensorElement.pure(mono(0, 1), mono(1))
    assert coaction_beta(suq2, e(1, 1)) == TensorElement.pure(mono(1, 1), mono(2)) - TensorElement.pure(
        mono(0), mono(1, 1), q * q
    )


def test_pi_g_is_antilinear_and_rejects_off_p(suq2: SUq2Instance) -> None:
    t = coaction_beta(suq2, e(2, 1))
    g = e(2) + e(0, 1, 1)
    assert pi_g(suq2, g.scale(I), t) == pi_g(suq2, g, t).scale(-I)
    with pytest.raises(ValueError):
        pi_g(suq2, g, TensorElement.pure(mono(-1), mono(0)))


def test_generators_with_unit_weight(suq2: SUq2Instance) -> None:
    for r, s in [(1, 0), (0, 1), (2, 1), (0, 3)]:
        phi = e(r, s)
        expected = phi if r + s == 1 else Element.zero()
        assert ctoeplitz_apply(suq2, e(1), phi) == expected
        assert ctoeplitz_apply(suq2, e(0, 1), phi).is_zero()
        assert ctoeplitz_apply(suq2, e(0), phi) == (phi if r + s == 0 else Element.zero())


def test_group_like_operators_are_weighted_projections(group_like: GroupLikeInstance) -> None:
    for i in group_like.labels():
        for j in group_like.p_basis():
            img = ctoeplitz_apply(group_like, Element.basis(i), Element.basis(j))
            expected = Element.basis(j, group_like.weights[i - 1]) if i == j else Element.zero()
            assert img == expected


def test_tilde_operator(suq2: SUq2Instance) -> None:
    psi = e(-1)
    assert tilde_ctoeplitz_apply(suq2, e(1), psi) == psi
    with pytest.raises(ValueError):
        tilde_ctoeplitz_apply(suq2, e(1), e(1))


def test_eg_cosymbol_reproduces_symbol_operator(suq2: SUq2Instance) -> None:
    ev = Evaluator(suq2)
    for g in [e(1), e(0, 1), e(2, 1, 1), e(1, 1) + e(0, 0, 0, I)]:
        for r, s in [(1, 0), (1, 1), (2, 1), (0, 2)]:
            assert ctoeplitz_cosymbol_apply(suq2, EgNode(g), e(r, s), ev) == ctoeplitz_apply(suq2, g, e(r, s))


def test_counit_cosymbol_is_identity(suq2: SUq2Instance) -> None:
    assert check_counit_identity(suq2, [e(r, s) for r in range(3) for s in range(3)]).holds
    assert ctoeplitz_cosymbol_apply(suq2, COUNIT, e(2, 1)) == e(2, 1)


def test_cosymbol_evaluation_rules(suq2: SUq2Instance) -> None:
    ev = Evaluator(suq2)
    f = e(1) + e(0, 1, 1, 3)
    lam, mu = EgNode(e(1)), EgNode(e(0, 1, 1))
    assert ev(SumNode((lam, mu)), f) == ev(lam, f) + ev(mu, f)
    assert ev(ScaleNode(I, lam), f) == I * ev(lam, f)
    assert ev(StarNode(ScaleNode(I, lam)), e(-1)) == -I * ev(StarNode(lam), e(-1))
    assert ev(COUNIT, f) == ONE
    # a (x) a - q c* (x) c paired against e_a (x) e_a
    assert ev(ProductNode(lam, lam), e(1)) == ONE


def test_cosymbol_json_round_trip(suq2: SUq2Instance) -> None:
    rng = random.Random(11)
    symbols = [e(1), e(0, 1), e(1, 1, 0, q) + e(0, 0, 1)]
    for _ in range(25):
        lam = random_cosymbol(rng, symbols, depth=3)
        assert from_json(to_json(lam)) == lam
    with pytest.raises(ValueError):
        from_json({"node": "bogus"})


def test_dual_evaluation_and_product_on_group_like(group_like: GroupLikeInstance) -> None:
    rng = random.Random(5)
    symbols = [Element.basis(i) for i in group_like.labels()]
    ev = Evaluator(group_like)
    for _ in range(20):
        lam = random_cosymbol(rng, symbols, depth=2)
        mu = random_cosymbol(rng, symbols, depth=2)
        phi = Element.basis(rng.choice(group_like.p_basis()))
        g = rng.choice(symbols)
        assert check_dual_evaluation(group_like, lam, g, phi, ev).holds
        assert check_cosymbol_product(group_like, lam, mu, phi, ev).holds


def test_cosymbol_product_fails_on_suq2(suq2: SUq2Instance) -> None:
    res = check_cosymbol_product(suq2, EgNode(e(0)), EgNode(e(1, 1)), e(1, 1))
    assert not res.holds


def test_adjoint_condition_counterexample() -> None:
    inst = SUq2Instance(WeightFunction({(1, 0): 7}))
    res = check_adjoint_condition(inst, e(1), e(1), e(1))
    assert not res.holds
    assert res.details["expanded"] == {"lhs": "49", "rhs": "0"}


def test_q_morphism_and_injection(suq2: SUq2Instance) -> None:
    assert check_Q_coalgebra_morphism(suq2, [mono(1), mono(0, 1)]).holds
    assert not check_Q_coalgebra_morphism(suq2, [mono(0, 1, 1)]).holds
    assert check_q_inject(suq2, [suq2.index_label(i) for i in suq2.p_basis(3)]).holds


def test_group_like_validation() -> None:
    with pytest.raises(ValueError):
        GroupLikeInstance(0, [1])
    with pytest.raises(ValueError):
        GroupLikeInstance(2, [3])
    with pytest.raises(ValueError):
        GroupLikeInstance(2, [1], [1, 0])


def test_report_statuses() -> None:
    assert CheckResult("x", True).status == "pass"
    assert CheckResult("x", False, expect="fails").status == "expected-failure"
    assert CheckResult("x", True, expect="fails").status == "unexpected-pass"
    assert CheckResult("x", False, expect="report").status == "flagged"
    assert CheckResult("x", False, expect="report").ok
    assert not combine("both", [CheckResult("a", True), CheckResult("b", False)]).holds
