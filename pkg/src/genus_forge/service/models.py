"""Request and response shapes shared by the HTTP service and the CLI."""

from __future__ import annotations

from typing import Any, Optional

from pydantic import BaseModel, Field

SCHEMA = "genus-forge/1"


class CurveRequest(BaseModel):
    p: int = Field(ge=3, description="odd prime of the base field")
    a: int = 0
    b: int = 0


class PointsRequest(CurveRequest):
    pass


class PicRequest(CurveRequest):
    pass


class IdealRequest(CurveRequest):
    point: str = Field(description='affine point "x,y" or "inf"')
    op: str = Field(default="inverse", description="inverse | bezout | principal")
    bound: int = Field(default=6, ge=0)


class ClassifyRequest(CurveRequest):
    v0: str = Field(default="diag:1", description='"diag:entries" or "none"')
    mode: str = Field(default="mod2", description="mod2 | full")


class IsotropyRequest(BaseModel):
    ring: str = Field(default="laurent", description="laurent | elliptic")
    p: int = Field(ge=3)
    form: str = Field(description="comma-separated diagonal entries")
    bound: int = Field(default=3, ge=0)
    a: Optional[int] = None
    b: Optional[int] = None


class WittRequest(BaseModel):
    p: int = Field(ge=3)
    form: str = Field(description="diagonal entries, rank 2 or 3")
    places: str = Field(default="t,inf", description="comma-separated places")
    max_deg: int = Field(default=6, ge=1)


class GeneraRequest(BaseModel):
    p: int = Field(ge=3)
    places: str = Field(default="t,inf")
    rank: int = Field(ge=3)
    pic_order: int = Field(default=1, ge=1)
    pic_mod2: int = Field(default=1, ge=1)
    isotropic: bool = False


class PresetRequest(BaseModel):
    name: str


class PointsResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    curve: dict
    points: list[Any]
    structure: list[int]
    cosets: list[Any]

    model_config = {"populate_by_name": True}


class PicResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    curve: dict
    order: int
    structure: list[int]
    pic_mod2: int
    cosets: list[Any]

    model_config = {"populate_by_name": True}


class IdealResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    curve: dict
    point: Any
    maximal: dict
    op: str
    result: dict

    model_config = {"populate_by_name": True}


class ClassifyResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    curve: dict
    mode: str
    classes: list[dict]

    model_config = {"populate_by_name": True}


class IsotropyResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    ring: str
    form: list[str]
    bound: int
    witness: Optional[list[str]]

    model_config = {"populate_by_name": True}


class WittResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    symbol: list[str]
    residues: dict[str, int]
    in_2Br_OS: bool
    trivial: bool

    model_config = {"populate_by_name": True}


class GeneraResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    places: list[str]
    rank: int
    genera: int
    hasse_principle: bool
    classes_per_genus: Optional[int] = None
    total_classes: Optional[int] = None

    model_config = {"populate_by_name": True}


class PresetResponse(BaseModel):
    schema_: str = Field(alias="schema", default=SCHEMA)
    name: str
    sections: dict[str, Any]

    model_config = {"populate_by_name": True}
