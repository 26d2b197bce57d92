"""Exact arithmetic for quadratic lattices over coordinate rings of curves.

The core objects: prime fields and small extensions (field), polynomials
and places of the rational function field (poly), elliptic curve groups
(elliptic), the coordinate ring F_p[x,y]/(y^2 - f) and Laurent rings
(coord_ring), fractional ideals with explicit coefficient quadruples
(ideals), Gram matrices with the class-set construction and isotropy
search (qlattice), quaternion symbols and residue vectors (brauer), and
the class group wrapper (pic).
"""

from .brauer import (
    BrauerVector,
    QuaternionSymbol,
    brauer_class,
    enumerate_2Br,
    genus_report,
    residue,
    witt_invariant,
)
from .coord_ring import KElem, LaurentElem, is_integral, is_unit, norm_trace, parse_laurent
from .elliptic import (
    CurvePoint,
    EllipticCurve,
    cosets_mod_2,
    enumerate_points,
    group_structure,
)
from .field import ExtField, FieldElem, GF, PrimeField, is_square
from .ideals import (
    BezoutQuadruple,
    FracIdeal,
    bezout_quadruple,
    ideal_product,
    inverse_ideal,
    is_principal,
    maximal_ideal,
    transition_matrix_inverse,
)
from .pic import PicGroup, pic_group, pic_mod2_order
from .poly import (
    Place,
    Poly,
    RatFun,
    enumerate_places,
    factor,
    parse_place,
    parse_poly,
    parse_ratfun,
)
from .qlattice import (
    GramMatrix,
    SplitForm,
    algorithm1,
    block_diag,
    congruence,
    diag_matrix,
    hyperbolic_plane,
    is_regular,
    isotropy_search,
)

__version__ = "0.1.0"

__all__ = [
    "BezoutQuadruple",
    "BrauerVector",
    "CurvePoint",
    "EllipticCurve",
    "ExtField",
    "FieldElem",
    "FracIdeal",
    "GF",
    "GramMatrix",
    "KElem",
    "LaurentElem",
    "PicGroup",
    "Place",
    "Poly",
    "PrimeField",
    "QuaternionSymbol",
    "RatFun",
    "SplitForm",
    "algorithm1",
    "bezout_quadruple",
    "block_diag",
    "brauer_class",
    "congruence",
    "cosets_mod_2",
    "diag_matrix",
    "enumerate_2Br",
    "enumerate_places",
    "enumerate_points",
    "factor",
    "genus_report",
    "group_structure",
    "hyperbolic_plane",
    "ideal_product",
    "inverse_ideal",
    "is_integral",
    "is_principal",
    "is_regular",
    "is_square",
    "is_unit",
    "isotropy_search",
    "maximal_ideal",
    "norm_trace",
    "parse_laurent",
    "parse_place",
    "parse_poly",
    "parse_ratfun",
    "pic_group",
    "pic_mod2_order",
    "residue",
    "transition_matrix_inverse",
    "witt_invariant",
]
