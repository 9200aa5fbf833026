"""HTTP/JSON service exposing idiom selection, blending, and sampling.

All computation is stateless: a blend "session" is a value snapshot fully
determined by its inputs, so identical requests produce byte-identical
responses and re-adjusting answers is simply a new request.
"""

from __future__ import annotations

import hashlib
import json
from typing import Mapping

from fastapi import Body, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from .arguments import ArgumentSet
from .blending import DEFAULT_POOL_CAPACITY, blend_idioms, pool_to_jsonable
from .chords import Chord
from .errors import ChordBlendError, SchemaError
from .extension import (DEFAULT_BRIDGE_MASS, build_extended, extended_to_jsonable,
                        load_extended)
from .idioms import IdiomRegistry, corpus_from_jsonable, train_idiom
from .sampling import MAX_WALK_LENGTH, walk_chords

_STATUS_BY_CODE = {
    "unknown_idiom": 404,
    "duplicate_idiom": 409,
}


class BlendRequest(BaseModel):
    idiom1: str
    idiom2: str
    answers: dict[str, bool]
    capacity: int = Field(default=DEFAULT_POOL_CAPACITY, ge=1)
    bridge_mass: float = DEFAULT_BRIDGE_MASS


class SampleRequest(BaseModel):
    idiom: str | None = None
    extended: dict | None = None
    start: str
    length: int = Field(default=16, ge=1, le=MAX_WALK_LENGTH)
    seed: int = 0


def session_id(idiom1: str, idiom2: str, answers: Mapping[str, bool],
               capacity: int, bridge_mass: float) -> str:
    canonical = json.dumps(
        {"idiom1": idiom1, "idiom2": idiom2, "answers": dict(sorted(answers.items())),
         "capacity": capacity, "bridge_mass": bridge_mass},
        sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()[:16]


def compute_blend_response(registry: IdiomRegistry, idiom1: str, idiom2: str,
                           answers: Mapping[str, bool],
                           capacity: int = DEFAULT_POOL_CAPACITY,
                           bridge_mass: float = DEFAULT_BRIDGE_MASS) -> dict:
    """The full blend result document; shared by the service and the CLI."""
    arguments = ArgumentSet.from_answers(answers)
    i1 = registry.get(idiom1)
    i2 = registry.get(idiom2)
    pool = blend_idioms(i1, i2, arguments, capacity)
    extended = build_extended(i1, i2, pool, bridge_mass)
    full_answers = arguments.answers()
    return {
        "session": {
            "id": session_id(idiom1, idiom2, full_answers, capacity, bridge_mass),
            "idiom1": idiom1,
            "idiom2": idiom2,
            "answers": full_answers,
            "capacity": capacity,
            "bridge_mass": bridge_mass,
        },
        "pool": pool_to_jsonable(pool),
        "extended": extended_to_jsonable(extended),
    }


def create_app(registry: IdiomRegistry | None = None) -> FastAPI:
    if registry is None:
        registry = IdiomRegistry.with_presets()
    app = FastAPI(title="chordblend", version="0.1.0")
    app.state.registry = registry
    # the web client may be served from a separate static origin
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])

    @app.exception_handler(ChordBlendError)
    async def domain_error_handler(_: Request, exc: ChordBlendError):
        return JSONResponse(
            status_code=_STATUS_BY_CODE.get(exc.code, 400),
            content={"error": {"code": exc.code, "message": str(exc)}})

    @app.exception_handler(RequestValidationError)
    async def validation_error_handler(_: Request, exc: RequestValidationError):
        return JSONResponse(
            status_code=422,
            content={"error": {"code": "validation_error", "message": str(exc.errors())}})

    @app.get("/v1/health")
    def health():
        return {"status": "ok"}

    @app.get("/v1/idioms")
    def list_idioms():
        return {"idioms": registry.catalog()}

    @app.post("/v1/idioms/corpus", status_code=201)
    def upload_corpus(payload: dict = Body(...)):
        name, tonic, sequences = corpus_from_jsonable(payload)
        if name is None:
            raise SchemaError("corpus upload requires a name", path="/name")
        idiom = train_idiom(name, tonic, sequences)
        registry.register(idiom, kind="trained")
        return {"name": idiom.name, "tonic": idiom.tonic,
                "chord_count": len(idiom.chords)}

    @app.post("/v1/blend")
    def run_blend(request: BlendRequest):
        return compute_blend_response(registry, request.idiom1, request.idiom2,
                                      request.answers, request.capacity,
                                      request.bridge_mass)

    @app.post("/v1/sample")
    def sample(request: SampleRequest):
        if (request.idiom is None) == (request.extended is None):
            raise SchemaError("provide exactly one of 'idiom' or 'extended'", path="")
        start = Chord.parse(request.start)
        if request.idiom is not None:
            idiom = registry.get(request.idiom)
            chords, matrix = idiom.chords, idiom.matrix
        else:
            em = load_extended(request.extended)
            chords, matrix = em.chords, em.matrix
        walk = walk_chords(chords, matrix, start, request.length, request.seed)
        return {"chords": [str(c) for c in walk]}

    return app


app = create_app()
