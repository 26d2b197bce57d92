"""HTTP front end.  Every endpoint is a POST that mirrors one CLI command."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from . import handlers
from .models import (
    ClassifyRequest,
    ClassifyResponse,
    GeneraRequest,
    GeneraResponse,
    IdealRequest,
    IdealResponse,
    IsotropyRequest,
    IsotropyResponse,
    PicRequest,
    PicResponse,
    PointsRequest,
    PointsResponse,
    PresetRequest,
    PresetResponse,
    WittRequest,
    WittResponse,
)


def create_app() -> FastAPI:
    app = FastAPI(title="genus-forge", version="0.1.0")

    def run(handler, req):
        try:
            return handler(req)
        except (ValueError, ZeroDivisionError) as exc:
            raise HTTPException(status_code=400, detail=str(exc))

    @app.post("/v1/points", response_model=PointsResponse, response_model_by_alias=True)
    def points(req: PointsRequest):
        return run(handlers.handle_points, req)

    @app.post("/v1/pic", response_model=PicResponse, response_model_by_alias=True)
    def pic(req: PicRequest):
        return run(handlers.handle_pic, req)

    @app.post("/v1/ideal", response_model=IdealResponse, response_model_by_alias=True)
    def ideal(req: IdealRequest):
        return run(handlers.handle_ideal, req)

    @app.post("/v1/classify", response_model=ClassifyResponse, response_model_by_alias=True)
    def classify(req: ClassifyRequest):
        return run(handlers.handle_classify, req)

    @app.post("/v1/isotropy", response_model=IsotropyResponse, response_model_by_alias=True)
    def isotropy(req: IsotropyRequest):
        return run(handlers.handle_isotropy, req)

    @app.post("/v1/witt", response_model=WittResponse, response_model_by_alias=True)
    def witt(req: WittRequest):
        return run(handlers.handle_witt, req)

    @app.post("/v1/genera", response_model=GeneraResponse, response_model_by_alias=True)
    def genera(req: GeneraRequest):
        return run(handlers.handle_genera, req)

    @app.post("/v1/preset", response_model=PresetResponse, response_model_by_alias=True)
    def preset(req: PresetRequest):
        return run(handlers.handle_preset, req)

    return app


app = create_app()
