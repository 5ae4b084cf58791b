"""Algebraic core: partitions, series, exterior algebra, Fock space, bosons, vertex operators."""

from .partitions import Partition, enumerate_bounded, make_partition, partitions_in_box
from .series import LaurentSeries, compose, expand_geometric, series_mul, transpose
from .exterior import DualVector, ExtVector, SchubertKind, contract, schubert_ext, wedge
from .fock import (
    FockMonomial,
    FockVector,
    contract_fock,
    giambelli,
    r_op,
    schubert_fock,
    schur_operator,
    wedge_onto,
    zeta_shift,
)
from .boson import ChargedSchur, e_mult, h_mult, sigma_minus_B, to_boson, to_fermion
from .vertex import GLElement, delta_gl, djkm, djkm_modified, djkm_series, gamma, gamma_star
from .glrep import BoxBasisVector, FiniteGL, bracket, delta_action

__all__ = [
    "Partition",
    "enumerate_bounded",
    "make_partition",
    "partitions_in_box",
    "LaurentSeries",
    "compose",
    "expand_geometric",
    "series_mul",
    "transpose",
    "DualVector",
    "ExtVector",
    "SchubertKind",
    "contract",
    "schubert_ext",
    "wedge",
    "FockMonomial",
    "FockVector",
    "contract_fock",
    "giambelli",
    "r_op",
    "schubert_fock",
    "schur_operator",
    "wedge_onto",
    "zeta_shift",
    "ChargedSchur",
    "e_mult",
    "h_mult",
    "sigma_minus_B",
    "to_boson",
    "to_fermion",
    "GLElement",
    "delta_gl",
    "djkm",
    "djkm_modified",
    "djkm_series",
    "gamma",
    "gamma_star",
    "BoxBasisVector",
    "FiniteGL",
    "bracket",
    "delta_action",
]
