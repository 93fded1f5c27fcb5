"""Generic co-Toeplitz quantization over a *-co-algebra instance."""

from .cosymbol import COUNIT, CoSymbol, CounitNode, EgNode, Evaluator, ProductNode, ScaleNode, StarNode, SumNode, cosymbol_eval
from .instances import CoalgebraInstance, GroupLikeInstance, SUq2Instance
from .pipeline import coaction_beta, ctoeplitz_apply, ctoeplitz_cosymbol_apply, pi_g, tilde_ctoeplitz_apply

__all__ = [
    "COUNIT",
    "CoSymbol",
    "CounitNode",
    "EgNode",
    "Evaluator",
    "ProductNode",
    "ScaleNode",
    "StarNode",
    "SumNode",
    "cosymbol_eval",
    "CoalgebraInstance",
    "GroupLikeInstance",
    "SUq2Instance",
    "coaction_beta",
    "ctoeplitz_apply",
    "ctoeplitz_cosymbol_apply",
    "pi_g",
    "tilde_ctoeplitz_apply",
]
