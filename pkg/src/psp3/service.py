"""Local HTTP service backing the interactive explorer.

Stateless JSON over the pure library: /analyze, /osg, /mopt, /scan and
/health.  Binds 127.0.0.1:7311 by default; no auth or TLS, it is a
single-user local tool.  Responses are pure functions of the query.

Status codes: 400 malformed parameters, 422 domain violations (a2 <= 1,
a2 >= a3, out-of-domain p or s), 416 for /mopt outside formula validity,
413 beyond the interactive size caps.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from . import formulas, search
from .core import Basis
from .jsonio import analysis_json

MAX_A3 = 100_000
MAX_N = 10_000
MAX_S = 1_000_000

DEFAULT_HOST = "127.0.0.1"
DEFAULT_PORT = 7311


class _HttpError(Exception):
    def __init__(self, status: int, message: str):
        self.status = status
        self.message = message


def _int_param(request: Request, name: str, required: bool = True) -> int | None:
    raw = request.query_params.get(name)
    if raw is None:
        if required:
            raise _HttpError(400, f"missing parameter {name!r}")
        return None
    try:
        value = int(raw)
    except ValueError:
        raise _HttpError(400, f"parameter {name!r} must be an integer, got {raw!r}")
    if value <= 0:
        raise _HttpError(400, f"parameter {name!r} must be positive, got {value}")
    return value


def create_app() -> FastAPI:
    app = FastAPI(title="psp3 analysis service")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"https?://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    @app.exception_handler(_HttpError)
    async def _http_error(_, exc: _HttpError):
        return JSONResponse(status_code=exc.status, content={"error": exc.message})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/analyze")
    def analyze(request: Request):
        a2 = _int_param(request, "a2")
        a3 = _int_param(request, "a3")
        n = _int_param(request, "n")
        s = _int_param(request, "s", required=False)
        if a3 > MAX_A3 or n > MAX_N or (s is not None and s > MAX_S):
            raise _HttpError(413, "request exceeds interactive size caps")
        if a2 <= 1 or a2 >= a3:
            raise _HttpError(422, f"need 1 < a2 < a3, got a2={a2} a3={a3}")
        return analysis_json(Basis(a2, a3), n, s=s)

    @app.get("/osg")
    def osg(request: Request):
        n = _int_param(request, "n")
        p = _int_param(request, "p")
        if n > MAX_N:
            raise _HttpError(413, "request exceeds interactive size caps")
        if p not in (0, 1):
            raise _HttpError(422, f"closed forms cover p in {{0, 1}}, got p={p}")
        rows = formulas.osg0(n) if p == 0 else [formulas.osg1(n)]
        return [{"n": r.n, "a2": r.a2, "a3": r.a3, "y": r.y} for r in rows]

    @app.get("/mopt")
    def mopt(request: Request):
        s = _int_param(request, "s")
        if s > MAX_S:
            raise _HttpError(413, "request exceeds interactive size caps")
        if s < 18:
            raise _HttpError(416, f"mopt is valid for s >= 18, got {s}")
        row = formulas.mopt(s)
        return {
            "s": row.s, "t": row.t, "r": row.r,
            "k_opt": row.k_opt, "n_opt": row.n_opt, "X_opt": row.x_opt,
        }

    @app.get("/scan")
    def scan(request: Request):
        s = _int_param(request, "s")
        if s > 100_000:
            raise _HttpError(413, "request exceeds interactive size caps")
        if s < 4:
            raise _HttpError(422, f"scan needs s >= 4, got {s}")
        rows, top = search.scan_osg1_cover(s)
        as_dict = lambda r: {
            "k": r.k, "n": r.n, "a2": r.a2, "a3": r.a3,
            "Y": r.Y, "complete": r.complete, "X": r.X,
        }
        return {"rows": [as_dict(r) for r in rows], "best": as_dict(top)}

    return app


app = create_app()


def serve(host: str = DEFAULT_HOST, port: int = DEFAULT_PORT):
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="warning")
