"""Exact algebra of 2/3-PROPs: End(V), Bi, free words, K(m,n) strata and the Lie algebra aleph.

Submodules:

* :mod:`tprop.tensor` -- exact multilinear maps and permutations
* :mod:`tprop.endv` -- the compositions of End(V)
* :mod:`tprop.axioms` -- randomized checks of the structure axioms
* :mod:`tprop.bialgebras`, :mod:`tprop.bi` -- bialgebras and the structure Bi
* :mod:`tprop.free` -- canonical free words, parsing and evaluation
* :mod:`tprop.strata` -- chain complexes of the spaces K(m,n)
* :mod:`tprop.aleph` -- brackets, Maurer-Cartan defect and deformations
* :mod:`tprop.cli` -- the ``tprop`` command
"""
from .tensor import ArityError, Permutation, TensorMap, act, act_in, act_out, compose, tensor_product
from .endv import Column, Row, circ_i, circled_i, circledcirc, jcirc, jcircled
from .bialgebras import Bialgebra, b1, b2, is_bialgebra
from .axioms import AXIOMS, check_axioms
from .free import FreeWordError, evaluate, graft, normal_form, parse
from .strata import assemble_and_verify, enumerate_strata, homology_ranks
from .aleph import AlephElement, alpha, beta, bracket, mc_defect, psi_bar, theta_bar

__version__ = "0.1.0"

__all__ = [
    "AXIOMS",
    "AlephElement",
    "ArityError",
    "Bialgebra",
    "Column",
    "FreeWordError",
    "Permutation",
    "Row",
    "TensorMap",
    "act",
    "act_in",
    "act_out",
    "alpha",
    "assemble_and_verify",
    "b1",
    "b2",
    "beta",
    "bracket",
    "check_axioms",
    "circ_i",
    "circled_i",
    "circledcirc",
    "compose",
    "enumerate_strata",
    "evaluate",
    "graft",
    "homology_ranks",
    "is_bialgebra",
    "jcirc",
    "jcircled",
    "mc_defect",
    "normal_form",
    "parse",
    "psi_bar",
    "tensor_product",
    "theta_bar",
]
