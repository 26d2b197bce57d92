"""Command handlers shared by the HTTP service and the CLI.

Each handler takes a request model and returns a JSON-able dict.  Domain
failures surface as ValueError (or ZeroDivisionError from field inverses);
callers translate those into exit codes or HTTP statuses.
"""

from __future__ import annotations

from typing import Optional

from ..brauer import brauer_class, genus_report, witt_invariant
from ..coord_ring import KElem, parse_laurent
from ..elliptic import CurvePoint, EllipticCurve, cosets_mod_2, enumerate_points, group_structure
from ..field import PrimeField
from ..ideals import bezout_quadruple, inverse_ideal, is_principal, maximal_ideal
from ..pic import pic_group, pic_mod2_order
from ..poly import parse_place, parse_poly, parse_ratfun
from ..qlattice import GramMatrix, SplitForm, algorithm1, diag_matrix, is_regular, isotropy_search
from .models import (
    SCHEMA,
    ClassifyRequest,
    GeneraRequest,
    IdealRequest,
    IsotropyRequest,
    PicRequest,
    PointsRequest,
    PresetRequest,
    WittRequest,
)


def _curve(req) -> EllipticCurve:
    return EllipticCurve(PrimeField(req.p), req.a, req.b)


def _curve_json(E: EllipticCurve) -> dict:
    return {"p": E.field.p, "a": E.a.value, "b": E.b.value}


def _point_json(P: CurvePoint):
    if P.is_infinity:
        return "inf"
    return [P.x.value, P.y.value]


def _parse_point(E: EllipticCurve, text: str) -> CurvePoint:
    text = text.strip()
    if text in ("inf", "infinity", "oo"):
        return E.infinity()
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'x,y' or 'inf', got {text!r}")
    return E.point(int(parts[0]), int(parts[1]))


def handle_points(req: PointsRequest) -> dict:
    E = _curve(req)
    pts = enumerate_points(E)
    n1, n2 = group_structure(E)
    return {
        "schema": SCHEMA,
        "curve": _curve_json(E),
        "points": [_point_json(P) for P in pts],
        "structure": [n1, n2],
        "cosets": [_point_json(P) for P in cosets_mod_2(E)],
    }


def handle_pic(req: PicRequest) -> dict:
    E = _curve(req)
    G = pic_group(E)
    return {
        "schema": SCHEMA,
        "curve": _curve_json(E),
        "order": G.order,
        "structure": list(G.invariant_factors),
        "pic_mod2": pic_mod2_order(G),
        "cosets": [_point_json(P) for P in G.mod2_representatives()],
    }


def handle_ideal(req: IdealRequest) -> dict:
    E = _curve(req)
    P = _parse_point(E, req.point)
    m = maximal_ideal(P)
    out = {
        "schema": SCHEMA,
        "curve": _curve_json(E),
        "point": _point_json(P),
        "maximal": {"print": m.render(), **m.to_json()},
        "op": req.op,
    }
    if req.op == "inverse":
        inv = inverse_ideal(P)
        out["result"] = {"print": inv.render(), **inv.to_json()}
    elif req.op == "bezout":
        quad = bezout_quadruple(P)
        out["result"] = {
            name: {"print": val.render(), **val.to_json()}
            for name, val in zip(("a1", "a2", "b1", "b2"), quad)
        }
    elif req.op == "principal":
        gen = is_principal(m, req.bound)
        out["result"] = {
            "bound": req.bound,
            "generator": None if gen is None else {"print": gen.render(), **gen.to_json()},
        }
    else:
        raise ValueError(f"unknown ideal op {req.op!r}")
    return out


def _parse_v0(E: EllipticCurve, spec: str) -> Optional[GramMatrix]:
    spec = spec.strip()
    if spec in ("none", ""):
        return None
    if not spec.startswith("diag:"):
        raise ValueError(f"v0 must be 'diag:entries' or 'none', got {spec!r}")
    entries = [
        KElem.from_poly(E, parse_poly(E.field, part))
        for part in spec[len("diag:"):].split(",")
    ]
    return diag_matrix(entries)


def handle_classify(req: ClassifyRequest) -> dict:
    E = _curve(req)
    F0 = SplitForm(E, _parse_v0(E, req.v0))
    classes = algorithm1(E, F0, mode=req.mode)
    return {
        "schema": SCHEMA,
        "curve": _curve_json(E),
        "mode": req.mode,
        "classes": [
            {"point": _point_json(P), "gram": M.to_json(), "print": M.render()}
            for P, M in classes
        ],
    }


def handle_isotropy(req: IsotropyRequest) -> dict:
    if req.ring == "laurent":
        field = PrimeField(req.p)
        entries = [parse_laurent(field, part) for part in req.form.split(",")]
    elif req.ring == "elliptic":
        if req.a is None or req.b is None:
            raise ValueError("elliptic ring needs curve coefficients a and b")
        E = EllipticCurve(PrimeField(req.p), req.a, req.b)
        entries = [KElem.from_poly(E, parse_poly(E.field, part)) for part in req.form.split(",")]
    else:
        raise ValueError(f"unknown ring {req.ring!r}")
    M = diag_matrix(entries)
    if not is_regular(M):
        raise ValueError("form is not regular")
    witness = isotropy_search(M, deg_bound=req.bound)
    return {
        "schema": SCHEMA,
        "ring": req.ring,
        "form": [e.render() for e in entries],
        "bound": req.bound,
        "witness": None if witness is None else [v.render() for v in witness],
    }


def handle_witt(req: WittRequest) -> dict:
    field = PrimeField(req.p)
    diag = [parse_ratfun(field, part) for part in req.form.split(",")]
    symbol = witt_invariant(diag)
    vec = brauer_class(symbol, max_deg=req.max_deg)
    places = [parse_place(field, part) for part in req.places.split(",")]
    return {
        "schema": SCHEMA,
        "symbol": [symbol.a.render(), symbol.b.render()],
        "residues": vec.to_json(places),
        "in_2Br_OS": vec.supported_on(places),
        "trivial": len(vec.support) == 0,
    }


def handle_genera(req: GeneraRequest) -> dict:
    field = PrimeField(req.p)
    places = [parse_place(field, part) for part in req.places.split(",")]
    sized = req.rank >= 5 or req.isotropic
    report = genus_report(
        places,
        req.rank,
        req.pic_order,
        pic_mod2=req.pic_mod2 if sized else None,
        isotropic=req.isotropic,
    )
    return {"schema": SCHEMA, **report}


def handle_preset(req: PresetRequest) -> dict:
    if req.name == "paper-5.1":
        sections = {
            "points": handle_points(PointsRequest(p=5, a=1, b=0)),
            "pic": handle_pic(PicRequest(p=5, a=1, b=0)),
            "classify": handle_classify(ClassifyRequest(p=5, a=1, b=0, v0="diag:1", mode="mod2")),
        }
    elif req.name == "paper-5.2":
        sections = {
            "isotropy": [
                handle_isotropy(IsotropyRequest(ring="laurent", p=3, form="1,-1,-t", bound=3)),
                handle_isotropy(IsotropyRequest(ring="laurent", p=3, form="1,1,t", bound=3)),
            ],
            "witt": [
                handle_witt(WittRequest(p=3, form="1,-1,-t", places="t,inf")),
                handle_witt(WittRequest(p=3, form="1,1,t", places="t,inf")),
            ],
            "genera": handle_genera(
                GeneraRequest(p=3, places="t,inf", rank=3, pic_order=1, pic_mod2=1, isotropic=True)
            ),
        }
    else:
        raise ValueError(f"unknown preset {req.name!r}")
    return {"schema": SCHEMA, "name": req.name, "sections": sections}
