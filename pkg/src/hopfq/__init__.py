"""Exact computations with Hopf quasigroups, comodule magmas and Galois objects."""

from .comodules import (
    ComoduleMagma,
    Comodule,
    assoc_n,
    bullet,
    bullet_morphism,
    endo_inverse,
    opposite_comodule,
    regular,
    tau,
    tensor_comodule,
    unit_r,
    verify_comodule_magma,
)
from .exactlin import QQ, FieldSpec, Morphism
from .galois import (
    GaloisObject,
    aut_grouplike_bijection,
    bullet_galois,
    dual_coquasigroup,
    grouplikes,
    h_iso,
    make_galois,
    normal_basis,
    opposite_galois,
)
from .gnb import GnbWitness, gnb_from_galois, gnb_product, verify_gnb
from .loops import LoopTable, enumerate_ip_loops, loop_from_table
from .structures import HopfQuasigroup, UnitalMagma, loop_algebra, verify_hopf_quasigroup

__version__ = "0.1.0"

__all__ = [
    "Comodule",
    "ComoduleMagma",
    "FieldSpec",
    "GaloisObject",
    "GnbWitness",
    "HopfQuasigroup",
    "LoopTable",
    "Morphism",
    "QQ",
    "UnitalMagma",
    "assoc_n",
    "aut_grouplike_bijection",
    "bullet",
    "bullet_galois",
    "bullet_morphism",
    "dual_coquasigroup",
    "endo_inverse",
    "enumerate_ip_loops",
    "gnb_from_galois",
    "gnb_product",
    "grouplikes",
    "h_iso",
    "loop_algebra",
    "loop_from_table",
    "make_galois",
    "normal_basis",
    "opposite_comodule",
    "opposite_galois",
    "regular",
    "tau",
    "tensor_comodule",
    "unit_r",
    "verify_comodule_magma",
    "verify_gnb",
    "verify_hopf_quasigroup",
]
